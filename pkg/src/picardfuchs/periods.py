"""Numeric cycles on level curves {H = t} and integration of forms along them.

Tracing produces a closed chain of samples that is smooth and near-uniform in
the sample index, so composite Gauss-Legendre quadrature on a sliding
6-point Lagrange interpolant converges at order ~6 in the sample spacing.

Two cycle modes:

  * real_oval: arc-length continuation with Newton correction around a
    compact real component, positively oriented (counterclockwise around a
    minimum); a two-pass scheme re-traces with a uniform step chosen so the
    loop closes to ~1e-11.
  * x_loop: a prescribed closed circle in the x-plane (center, turns, with
    the radius set by the seed), lifting y through the fiber of H(x, .) = t
    by nearest-root continuation; a lift that returns to a different sheet
    raises NotClosed and the caller iterates the loop (more turns).

The Gelfand-Leray derivative of a period of omega_i with d(omega_i) =
m dx^dy is the integral of -(m/H_y) dx = (m/H_x) dy over the same cycle
(the two charts agree on the curve; the dominant denominator is used per
quadrature node).
"""

import json
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .critical import critical_values_numeric
from .errors import NotClosed, NumericalFailure, SingularDenominator, TraceDiverged


@dataclass(frozen=True)
class Cycle:
    """Closed sampled curve on {H = t}; points wrap (last connects to first)."""

    t: complex
    points: tuple           # of (x, y) complex pairs, periodic in the index
    closure_error: float
    hamiltonian: object     # BiPoly of the level function
    mode: str = "real_oval"

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class PeriodSample:
    t: complex
    I: tuple
    Idot: tuple
    residual: float


# -- compiled float evaluation ------------------------------------------------


def _compiled(poly):
    return tuple((a, b, complex(c)) for (a, b), c in poly.terms.items())


def _eval_c(compiled, x, y):
    total = 0j
    for a, b, c in compiled:
        total += c * x**a * y**b
    return total


def _eval_arrays(compiled, xs, ys):
    total = np.zeros(np.broadcast(xs, ys).shape, dtype=complex)
    for a, b, c in compiled:
        total += c * xs**a * ys**b
    return total


@lru_cache(maxsize=64)
def _critical_values_cached(H):
    try:
        return tuple(t for t, _ in critical_values_numeric(H))
    except NumericalFailure:
        return ()


# -- tracing -------------------------------------------------------------------


def trace_cycle(H, t, seed, mode="real_oval", samples=512, max_step=0.05,
                newton_tol=1e-12, noncritical_tol=1e-6, loop_center=0j, turns=1,
                max_steps=200000):
    """Trace a closed cycle on {H = t} starting near ``seed``.

    ``mode`` is "real_oval" (compact real component; H and t real) or
    "x_loop" (complex lift along the x-circle through seed around
    ``loop_center``, traversed ``turns`` times).
    """
    t = complex(t)
    for tc in _critical_values_cached(H):
        if abs(t - tc) <= noncritical_tol:
            raise ValueError(f"t = {t} is within {noncritical_tol} of the critical value {tc}")
    if mode == "real_oval":
        return _trace_real_oval(H, t, seed, samples, max_step, newton_tol, max_steps)
    if mode == "x_loop":
        return _trace_x_loop(H, t, seed, samples, loop_center, turns)
    raise ValueError(f"unknown mode {mode!r}; expected real_oval or x_loop")


def _trace_real_oval(H, t, seed, samples, max_step, newton_tol, max_steps):
    if abs(t.imag) > 1e-12:
        raise ValueError("real_oval mode needs a real level value t")
    t_real = t.real
    h_poly = _compiled(H)
    hx = _compiled(H.partial("x"))
    hy = _compiled(H.partial("y"))

    def project(x, y):
        for _ in range(20):
            val = (_eval_c(h_poly, x, y) - t_real).real
            if abs(val) < newton_tol:
                return x, y
            gx = _eval_c(hx, x, y).real
            gy = _eval_c(hy, x, y).real
            norm2 = gx * gx + gy * gy
            if norm2 < 1e-20:
                raise TraceDiverged("gradient vanished during Newton correction")
            x -= val * gx / norm2
            y -= val * gy / norm2
        raise TraceDiverged("Newton correction did not converge")

    def tangent(x, y):
        gx = _eval_c(hx, x, y).real
        gy = _eval_c(hy, x, y).real
        norm = math.hypot(gx, gy)
        if norm < 1e-12:
            raise TraceDiverged("tangent undefined (gradient too small)")
        return -gy / norm, gx / norm

    x0, y0 = _land_real(H, t_real, float(complex(seed[0]).real),
                        float(complex(seed[1]).real), project)
    tx0, ty0 = tangent(x0, y0)

    # pass 1: explore with a fixed step to estimate length and curvature
    h1 = max_step
    for _ in range(10):
        result = _explore(project, tangent, x0, y0, tx0, ty0, h1, max_steps)
        if result is not None:
            length, kappa_max = result
            break
        h1 *= 0.5
    else:
        raise TraceDiverged("no closed oval found from this seed")

    n = max(int(samples), int(math.ceil(length * kappa_max / 0.25)), 16)

    # pass 2: uniform steps, adjusting the step until the loop closes
    h = length / n
    best = None
    for _ in range(12):
        points, gap_vec = _walk(project, tangent, x0, y0, n, h)
        gap = math.hypot(*gap_vec)
        if best is None or gap < best[1]:
            best = (points, gap, h)
        if gap < 1e-11 * (1.0 + abs(x0) + abs(y0)):
            break
        txe, tye = tangent(points[-1][0].real, points[-1][1].real)
        delta = gap_vec[0] * txe + gap_vec[1] * tye
        h = (n * h - delta) / n
    points, gap, _ = best
    return Cycle(t=complex(t_real), points=tuple(points), closure_error=gap,
                 hamiltonian=H, mode="real_oval")


def _land_real(H, t_real, x0, y0, project):
    """Put the seed on {H = t}: gradient Newton, else 1-D rootfinding.

    Seeds at or near a critical point (center of the oval) have a vanishing
    gradient, so as a fallback the nearest real root along a coordinate line
    through the seed is used as the starting point.
    """
    try:
        return project(x0, y0)
    except TraceDiverged:
        pass
    candidates = []
    for coeffs, fixed, along_y in (
        (H.y_coefficients(x0), x0, True),
        (H.x_coefficients(y0), y0, False),
    ):
        arr = [complex(c) for c in coeffs]
        if arr:
            arr[0] -= t_real
        if len(arr) >= 2 and max(abs(c) for c in arr) > 0:
            for r in np.roots(np.array(arr[::-1])):
                if abs(r.imag) < 1e-9:
                    if along_y:
                        candidates.append((abs(r.real - y0), x0, r.real))
                    else:
                        candidates.append((abs(r.real - x0), r.real, y0))
    if not candidates:
        raise TraceDiverged("no real point of {H = t} found near the seed")
    _, xs, ys = min(candidates)
    return project(xs, ys)


def _explore(project, tangent, x0, y0, tx0, ty0, h, max_steps):
    """One fixed-step lap; returns (length, max curvature) or None."""
    x, y = x0, y0
    tx, ty = tx0, ty0
    kappa_max = 1e-9
    steps = 0
    s_prev = 0.0
    try:
        while steps < max_steps:
            x_new, y_new = project(x + h * tx, y + h * ty)
            tx_new, ty_new = tangent(x_new, y_new)
            if tx * tx_new + ty * ty_new < 0:
                return None  # tangent flipped: step too large
            turn = math.atan2(tx * ty_new - ty * tx_new, tx * tx_new + ty * ty_new)
            kappa_max = max(kappa_max, abs(turn) / h)
            steps += 1
            x, y, tx, ty = x_new, y_new, tx_new, ty_new
            s_now = (x - x0) * tx0 + (y - y0) * ty0
            dist = math.hypot(x - x0, y - y0)
            if steps > 3 and dist < 10 * h and s_prev < 0.0 <= s_now:
                frac = s_prev / (s_prev - s_now) if s_now != s_prev else 0.0
                return (steps - 1 + frac) * h, kappa_max
            s_prev = s_now
    except TraceDiverged:
        return None
    return None


def _walk(project, tangent, x0, y0, n, h):
    """n uniform steps from (x0, y0); returns (points, closing gap vector)."""
    points = []
    x, y = x0, y0
    for _ in range(n):
        points.append((complex(x), complex(y)))
        tx, ty = tangent(x, y)
        x, y = project(x + h * tx, y + h * ty)
    return points, (x - x0, y - y0)


def _trace_x_loop(H, t, seed, samples, loop_center, turns):
    center = complex(loop_center)
    x_seed = complex(seed[0])
    y_seed = complex(seed[1])
    radius = x_seed - center
    if abs(radius) < 1e-12:
        raise ValueError("x_loop seed must be off the loop center")
    turns = int(turns)
    if turns < 1:
        raise ValueError("turns must be >= 1")

    total = int(samples)
    y = _nearest_root(H, t, x_seed, y_seed)
    y0 = y
    points = []
    angles = 2.0 * math.pi * turns * np.arange(total + 1) / total
    xs = center + radius * np.exp(1j * angles)
    prev_x = x_seed
    for k in range(total + 1):
        xk = complex(xs[k])
        y = _continue_root(H, t, prev_x, y, xk, depth=0)
        if k < total:
            points.append((xk, y))
        prev_x = xk
    gap = abs(y - y0)
    scale = 1.0 + abs(y0)
    if gap > 1e-8 * scale:
        raise NotClosed(
            f"x-loop lift returned on a different sheet (gap {gap:.3e}); "
            "iterate the loop with more turns", gap)
    return Cycle(t=t, points=tuple(points), closure_error=gap, hamiltonian=H, mode="x_loop")


def _fiber_roots(H, t, x_value):
    coeffs = [complex(c) for c in H.y_coefficients(complex(x_value))]
    if coeffs:
        coeffs[0] -= complex(t)
    else:
        coeffs = [-complex(t)]
    arr = np.array(coeffs[::-1])
    scale = np.abs(arr).max()
    if scale == 0 or len(arr) < 2:
        raise TraceDiverged(f"fiber of H(x, .) = t degenerate at x = {x_value}")
    return np.roots(arr / scale)


def _nearest_root(H, t, x_value, y_guess):
    roots = _fiber_roots(H, t, x_value)
    return complex(roots[np.argmin(np.abs(roots - y_guess))])


def _continue_root(H, t, x_from, y_from, x_to, depth):
    """Follow the y-sheet from x_from to x_to, subdividing near close roots."""
    roots = _fiber_roots(H, t, x_to)
    dist = np.abs(roots - y_from)
    order = np.argsort(dist)
    nearest = complex(roots[order[0]])
    if len(order) > 1 and dist[order[0]] > 0.5 * dist[order[1]]:
        if depth >= 12:
            raise TraceDiverged("x-path passes too close to a branch point")
        mid = 0.5 * (x_from + x_to)
        y_mid = _continue_root(H, t, x_from, y_from, mid, depth + 1)
        return _continue_root(H, t, mid, y_mid, x_to, depth + 1)
    return nearest


# -- quadrature ----------------------------------------------------------------


def _lagrange_weights(stencil, nodes):
    values = np.empty((len(nodes), len(stencil)))
    derivs = np.empty_like(values)
    for j, sj in enumerate(stencil):
        roots = [s for s in stencil if s != sj]
        basis = np.poly1d(roots, r=True)
        basis = basis / basis(sj)
        dbasis = basis.deriv()
        values[:, j] = basis(nodes)
        derivs[:, j] = dbasis(nodes)
    return values, derivs


def _quadrature_tables(order, stencil):
    nodes, weights = np.polynomial.legendre.leggauss(order)
    nodes01 = 0.5 * (nodes + 1.0)
    weights01 = 0.5 * weights
    values, derivs = _lagrange_weights(stencil, nodes01)
    return values, derivs, weights01


_TABLE_MAIN = _quadrature_tables(6, (-2, -1, 0, 1, 2, 3))
_TABLE_COARSE = _quadrature_tables(4, (-1, 0, 1, 2))


def _nodes_and_derivatives(cycle, table):
    values, derivs, weights = table
    stencil_len = values.shape[1]
    offset = 2 if stencil_len == 6 else 1
    n = len(cycle.points)
    if n < stencil_len + 2:
        raise ValueError(f"cycle needs at least {stencil_len + 2} samples, got {n}")
    xs = np.array([p[0] for p in cycle.points])
    ys = np.array([p[1] for p in cycle.points])
    idx = (np.arange(n)[:, None] + np.arange(-offset, stencil_len - offset)[None, :]) % n
    sx = xs[idx]            # (n, stencil)
    sy = ys[idx]
    x_nodes = sx @ values.T     # (n, order)
    y_nodes = sy @ values.T
    dx_nodes = sx @ derivs.T
    dy_nodes = sy @ derivs.T
    return x_nodes, y_nodes, dx_nodes, dy_nodes, weights


def integrate_form(omega, cycle, with_error=False):
    """Contour integral of P dx + Q dy along the sampled closed cycle.

    Composite Gauss-Legendre on a sliding local polynomial interpolant;
    with_error additionally returns a coarse-refinement error estimate.
    """
    value = _integrate_pq(_compiled(omega.P), _compiled(omega.Q), cycle, _TABLE_MAIN)
    if not with_error:
        return value
    coarse = _integrate_pq(_compiled(omega.P), _compiled(omega.Q), cycle, _TABLE_COARSE)
    return value, abs(value - coarse)


def _integrate_pq(p_c, q_c, cycle, table):
    x_nodes, y_nodes, dx_nodes, dy_nodes, weights = _nodes_and_derivatives(cycle, table)
    integrand = _eval_arrays(p_c, x_nodes, y_nodes) * dx_nodes
    integrand += _eval_arrays(q_c, x_nodes, y_nodes) * dy_nodes
    return complex((integrand @ weights).sum())


def gelfand_leray_derivative(m, cycle, denominator_floor=1e-8):
    """d/dt of the period of any primitive of m dx^dy, over this cycle.

    Integrates -(m/H_y) dx where |H_y| dominates and (m/H_x) dy elsewhere;
    both restrict to the same form on the level curve.  Raises
    SingularDenominator if both partials nearly vanish at a node.
    """
    H = cycle.hamiltonian
    m_c = _compiled(m)
    hx_c = _compiled(H.partial("x"))
    hy_c = _compiled(H.partial("y"))
    x_nodes, y_nodes, dx_nodes, dy_nodes, weights = _nodes_and_derivatives(cycle, _TABLE_MAIN)
    mv = _eval_arrays(m_c, x_nodes, y_nodes)
    hxv = _eval_arrays(hx_c, x_nodes, y_nodes)
    hyv = _eval_arrays(hy_c, x_nodes, y_nodes)
    dominant = np.maximum(np.abs(hxv), np.abs(hyv))
    scale = max(float(dominant.max()), 1e-30)
    if float(dominant.min()) < denominator_floor * scale:
        raise SingularDenominator("cycle passes too close to a critical point of H")
    use_y_chart = np.abs(hyv) >= np.abs(hxv)
    denom_y = np.where(use_y_chart, hyv, 1.0)
    denom_x = np.where(use_y_chart, 1.0, hxv)
    integrand = np.where(use_y_chart, -mv * dx_nodes / denom_y, mv * dy_nodes / denom_x)
    return complex((integrand @ weights).sum())


# -- residuals and asymptotics --------------------------------------------------


def system_residual(sys, cycle):
    """Evaluate the system on one cycle's period vector; small residual = pass."""
    from .bipoly import BiPoly

    periods = [integrate_form(omega, cycle) for omega in sys.basis.primitives]
    derivatives = [
        gelfand_leray_derivative(BiPoly.monomial(a, b), cycle)
        for a, b in sys.basis.monomials
    ]
    I = np.array(periods)
    Idot = np.array(derivatives)
    t = complex(cycle.t)
    a_f = sys.A.to_float_array()
    b0_f = sys.B0.to_float_array()
    b1_f = sys.B1.to_float_array()
    lhs = t * Idot - a_f @ Idot
    rhs = b0_f @ I + t * (b1_f @ I)
    residual = float(np.abs(lhs - rhs).max() / max(1.0, float(np.abs(I).max())))
    return PeriodSample(t=t, I=tuple(periods), Idot=tuple(derivatives), residual=residual)


def asymptotic_exponent_check(sys, cycles, floor=1e-9):
    """Least-squares growth exponents of log|I_i| vs log|t| over a cycle family.

    Returns one fitted exponent per basis form, or None where the period is
    numerically zero along the family.  Compare against D = deg omega_i / (n+1).
    """
    if len(cycles) < 2:
        raise ValueError("need at least two cycles for an exponent fit")
    ts = np.array([abs(complex(c.t)) for c in cycles])
    period_matrix = np.array(
        [[abs(integrate_form(omega, c)) for omega in sys.basis.primitives] for c in cycles]
    )
    overall = max(float(period_matrix.max()), 1.0)
    exponents = []
    for i in range(sys.mu):
        column = period_matrix[:, i]
        if column.min() <= floor * overall:
            exponents.append(None)
            continue
        slope = np.polyfit(np.log(ts), np.log(column), 1)[0]
        exponents.append(float(slope))
    return exponents


# -- import/export ---------------------------------------------------------------


def cycle_to_json(cycle):
    """Spec wire format: the level value plus the raw samples."""
    return {
        "t": [cycle.t.real, cycle.t.imag],
        "samples": [
            {"x": [p[0].real, p[0].imag], "y": [p[1].real, p[1].imag]}
            for p in cycle.points
        ],
    }


def cycle_from_json(doc, H, trace_tol=1e-8):
    """Rebuild a Cycle from its wire format; verifies samples lie on {H = t}."""
    t = complex(doc["t"][0], doc["t"][1])
    points = tuple(
        (complex(s["x"][0], s["x"][1]), complex(s["y"][0], s["y"][1]))
        for s in doc["samples"]
    )
    h_c = _compiled(H)
    worst = max(abs(_eval_c(h_c, p[0], p[1]) - t) for p in points)
    if worst > trace_tol * (1.0 + abs(t)):
        raise NumericalFailure(f"imported samples leave the level curve by {worst:.3e}")
    return Cycle(t=t, points=points, closure_error=0.0, hamiltonian=H, mode="imported")


def dumps_cycle(cycle):
    return json.dumps(cycle_to_json(cycle), indent=2) + "\n"


def loads_cycle(text, H):
    return cycle_from_json(json.loads(text), H)
