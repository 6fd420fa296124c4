"""Exception hierarchy shared by the exact and numeric layers."""


class PicardFuchsError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PicardFuchsError):
    """Polynomial source text could not be parsed.

    Carries the 0-based offset of the offending character in ``position``.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ZeroPolynomialError(PicardFuchsError):
    """An operation that needs a nonzero polynomial got the zero polynomial."""


class DegreeTooSmallError(PicardFuchsError):
    """The Hamiltonian must have total degree at least 2."""


class NotRegularError(PicardFuchsError):
    """The Hamiltonian is not regular at infinity."""


class DegenerateResultantError(PicardFuchsError):
    """Both resultant arguments are constant in the eliminated variable."""


class NoSolutionError(PicardFuchsError):
    """An exact linear system is inconsistent (target outside the span)."""


class InternalRankError(PicardFuchsError):
    """A verified basis failed to span a homogeneous slice (should be unreachable)."""


class NumericalFailure(PicardFuchsError):
    """The numeric oracle could not resolve roots/clusters at working precision."""


class TraceDiverged(PicardFuchsError):
    """Cycle tracing failed to advance (step failure, e.g. near a branch point)."""


class NotClosed(PicardFuchsError):
    """An x-loop lift did not return to the starting sheet (nontrivial monodromy).

    ``gap`` is the distance between the initial and final y; iterate the loop
    (increase turns) to close it.
    """

    def __init__(self, message, gap):
        super().__init__(message)
        self.gap = gap


class SingularDenominator(PicardFuchsError):
    """Both partial derivatives are too small on a cycle segment to integrate."""
