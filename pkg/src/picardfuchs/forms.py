"""Polynomial differential forms on the plane.

OneForm is P dx + Q dy, TwoForm is F dx^dy, both with BiPoly coefficients.
Degree bookkeeping follows the convention deg(x^a y^b dx) = a + b + 1 and
deg(x^a y^b dx^dy) = a + b + 2, so division degree bounds hold verbatim.

The canonical primitive of a monomial 2-form is the radial (Euler) one,

    x^a y^b dx^dy  =  d( (x^{a+1} y^b dy - x^a y^{b+1} dx) / (a+b+2) ),

which is homogeneous and degree-minimal; with it, a monomial basis of size mu
automatically carries total form degree mu * deg H.
"""

from .bipoly import NEG_INFINITY, BiPoly, _frac


class OneForm:
    """P dx + Q dy with polynomial coefficients."""

    __slots__ = ("P", "Q")

    def __init__(self, P, Q):
        object.__setattr__(self, "P", P if isinstance(P, BiPoly) else BiPoly.constant(P))
        object.__setattr__(self, "Q", Q if isinstance(Q, BiPoly) else BiPoly.constant(Q))

    @classmethod
    def zero(cls):
        return cls(BiPoly.zero(), BiPoly.zero())

    def is_zero(self):
        return self.P.is_zero() and self.Q.is_zero()

    def degree(self):
        if self.is_zero():
            return NEG_INFINITY
        return 1 + max(self.P.degree(), self.Q.degree())

    def __add__(self, other):
        return OneForm(self.P + other.P, self.Q + other.Q)

    def __sub__(self, other):
        return OneForm(self.P - other.P, self.Q - other.Q)

    def __neg__(self):
        return OneForm(-self.P, -self.Q)

    def scale(self, c):
        return self.multiply(BiPoly.constant(_frac(c)))

    def multiply(self, poly):
        """Multiply both coefficients by a polynomial (module action)."""
        return OneForm(self.P * poly, self.Q * poly)

    def __eq__(self, other):
        if not isinstance(other, OneForm):
            return NotImplemented
        return self.P == other.P and self.Q == other.Q

    def __hash__(self):
        return hash((self.P, self.Q))

    def __str__(self):
        return f"({self.P}) dx + ({self.Q}) dy"

    __repr__ = __str__


class TwoForm:
    """F dx^dy with a polynomial coefficient."""

    __slots__ = ("F",)

    def __init__(self, F):
        object.__setattr__(self, "F", F if isinstance(F, BiPoly) else BiPoly.constant(F))

    @classmethod
    def zero(cls):
        return cls(BiPoly.zero())

    def is_zero(self):
        return self.F.is_zero()

    def degree(self):
        if self.is_zero():
            return NEG_INFINITY
        return 2 + self.F.degree()

    def __add__(self, other):
        return TwoForm(self.F + other.F)

    def __sub__(self, other):
        return TwoForm(self.F - other.F)

    def scale(self, c):
        return TwoForm(self.F * BiPoly.constant(_frac(c)))

    def __eq__(self, other):
        if not isinstance(other, TwoForm):
            return NotImplemented
        return self.F == other.F

    def __hash__(self):
        return hash(self.F)

    def __str__(self):
        return f"({self.F}) dx^dy"

    __repr__ = __str__


def exterior_derivative(omega):
    """d(P dx + Q dy) = (dQ/dx - dP/dy) dx^dy."""
    return TwoForm(omega.Q.partial("x") - omega.P.partial("y"))


def differential(f):
    """df = f_x dx + f_y dy for a polynomial f."""
    return OneForm(f.partial("x"), f.partial("y"))


def wedge_with_dH(H, eta):
    """dH ^ eta = (H_x * Q - H_y * P) dx^dy for eta = P dx + Q dy."""
    return TwoForm(H.partial("x") * eta.Q - H.partial("y") * eta.P)


def canonical_primitive(a, b, coeff=1):
    """Radial primitive of coeff * x^a y^b dx^dy.

    Returns (x^{a+1} y^b dy - x^a y^{b+1} dx) * coeff/(a+b+2); its exterior
    derivative is exactly coeff * x^a y^b dx^dy and its degree is a + b + 2.
    """
    if a < 0 or b < 0:
        raise ValueError("monomial exponents must be nonnegative")
    scale = _frac(coeff) / (a + b + 2)
    return OneForm(BiPoly.monomial(a, b + 1, -scale), BiPoly.monomial(a + 1, b, scale))
