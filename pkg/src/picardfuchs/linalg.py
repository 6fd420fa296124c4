"""Exact rational linear algebra: matrices, fraction-free solving, spectra.

The elimination core is Bareiss fraction-free Gaussian elimination on an
integer matrix obtained by clearing row denominators, which keeps every
intermediate entry a minor of the input (no coefficient explosion, no
rational normalization inside the loop).  Pivoting is deterministic:
leftmost column first, first row with a nonzero entry.

On top of the core sit: exact_solve (with nullspace extraction), exact
determinants, the characteristic polynomial (Faddeev-LeVerrier), the minimal
polynomial (first Krylov dependency among flattened powers), and Sylvester
resultants of bivariate polynomials via evaluation/interpolation.
"""

from fractions import Fraction
from math import gcd as int_gcd

from .bipoly import BiPoly, _frac
from .errors import DegenerateResultantError, NoSolutionError
from .unipoly import UniPoly, lagrange_interpolate


class RatMatrix:
    """Dense matrix of Fractions; immutable by convention."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = [[_frac(v) for v in row] for row in entries]
        if not entries or not entries[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(entries[0])
        if any(len(row) != width for row in entries):
            raise ValueError("ragged rows")
        object.__setattr__(self, "rows", len(entries))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls([[Fraction(0)] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(tuple(tuple(row) for row in self.entries))

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return all(v == 0 for row in self.entries for v in row)

    def transpose(self):
        return RatMatrix([[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")
        return RatMatrix(
            [[self.entries[i][j] + other.entries[i][j] for j in range(self.cols)] for i in range(self.rows)]
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = _frac(c)
        return RatMatrix([[v * c for v in row] for row in self.entries])

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                row.append(sum((self.entries[i][k] * other.entries[k][j] for k in range(self.cols)), Fraction(0)))
            out.append(row)
        return RatMatrix(out)

    def matvec(self, vec):
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        vec = [_frac(v) for v in vec]
        return [sum((row[k] * vec[k] for k in range(self.cols)), Fraction(0)) for row in self.entries]

    def trace(self):
        if not self.is_square():
            raise ValueError("trace needs a square matrix")
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def to_float_array(self):
        import numpy as np

        return np.array([[float(v) for v in row] for row in self.entries], dtype=float)

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.entries)
        return f"RatMatrix[{body}]"


# -- Bareiss elimination core ------------------------------------------------


def _clear_row_denominators(rows):
    """Scale each rational row to integers (row scaling preserves solutions)."""
    out = []
    for row in rows:
        denom_lcm = 1
        for v in row:
            denom_lcm = denom_lcm * v.denominator // int_gcd(denom_lcm, v.denominator)
        out.append([int(v * denom_lcm) for v in row])
    return out


def _bareiss_echelon(int_rows, ncols):
    """In-place fraction-free echelon reduction.

    Returns the list of pivot (row, col) pairs.  Division by the previous
    pivot is exact over the integers (Bareiss one-step elimination).
    """
    pivots = []
    prev_pivot = 1
    pivot_row = 0
    nrows = len(int_rows)
    for col in range(ncols):
        found = None
        for r in range(pivot_row, nrows):
            if int_rows[r][col] != 0:
                found = r
                break
        if found is None:
            continue
        if found != pivot_row:
            int_rows[pivot_row], int_rows[found] = int_rows[found], int_rows[pivot_row]
        piv = int_rows[pivot_row][col]
        row_p = int_rows[pivot_row]
        for r in range(pivot_row + 1, nrows):
            row_r = int_rows[r]
            target = row_r[col]
            # unconditional Bareiss update: keeps every entry a minor of the
            # input, so the division by the previous pivot stays exact
            for c in range(col, ncols):
                row_r[c] = (piv * row_r[c] - target * row_p[c]) // prev_pivot
        pivots.append((pivot_row, col))
        prev_pivot = piv
        pivot_row += 1
        if pivot_row == nrows:
            break
    return pivots


def _solve_from_echelon(int_rows, pivots, ncols, rhs_col):
    """Particular solution (free variables = 0) from an echelon form."""
    solution = [Fraction(0)] * ncols
    for row, col in reversed(pivots):
        acc = Fraction(int_rows[row][rhs_col])
        for c in range(col + 1, ncols):
            if int_rows[row][c] and solution[c]:
                acc -= int_rows[row][c] * solution[c]
        solution[col] = acc / int_rows[row][col]
    return solution


def _nullspace_from_echelon(int_rows, pivots, ncols):
    """One kernel vector per free column (unit free coordinate)."""
    pivot_cols = {col for _, col in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, col in reversed(pivots):
            if col >= free:
                continue
            acc = Fraction(0)
            for c in range(col + 1, ncols):
                if int_rows[row][c] and vec[c]:
                    acc -= int_rows[row][c] * vec[c]
            vec[col] = acc / int_rows[row][col]
        basis.append(vec)
    return basis


def solve_with_nullspace(matrix_rows, rhs, want_nullspace=False):
    """Solve M x = rhs exactly; returns (solution | None, nullspace basis).

    ``matrix_rows`` is a list of Fraction rows (not necessarily square).  The
    solution is the deterministic one with all free variables zero; None
    signals inconsistency.  The nullspace basis (of M, not the augmented
    system) is returned only when requested.
    """
    ncols = len(matrix_rows[0]) if matrix_rows else 0
    aug = [list(row) + [_frac(b)] for row, b in zip(matrix_rows, rhs)]
    int_rows = _clear_row_denominators(aug)
    pivots = _bareiss_echelon(int_rows, ncols + 1)
    if any(col == ncols for _, col in pivots):
        return None, []
    solution = _solve_from_echelon(int_rows, pivots, ncols, ncols)
    null_basis = _nullspace_from_echelon(int_rows, pivots, ncols) if want_nullspace else []
    return solution, null_basis


def exact_solve(matrix, rhs):
    """Exact solution of matrix @ x = rhs; raises NoSolutionError if none."""
    rows = matrix.entries if isinstance(matrix, RatMatrix) else [[_frac(v) for v in r] for r in matrix]
    if len(rhs) != len(rows):
        raise ValueError("rhs length must match row count")
    solution, _ = solve_with_nullspace(rows, rhs)
    if solution is None:
        raise NoSolutionError("inconsistent linear system")
    return solution


def determinant(matrix):
    """Exact determinant via Bareiss (last pivot / row scalings)."""
    if not matrix.is_square():
        raise ValueError("determinant needs a square matrix")
    n = matrix.rows
    scale = Fraction(1)
    int_rows = []
    for row in matrix.entries:
        denom_lcm = 1
        for v in row:
            denom_lcm = denom_lcm * v.denominator // int_gcd(denom_lcm, v.denominator)
        scale *= denom_lcm
        int_rows.append([int(v * denom_lcm) for v in row])
    sign = 1
    prev_pivot = 1
    for col in range(n):
        found = None
        for r in range(col, n):
            if int_rows[r][col] != 0:
                found = r
                break
        if found is None:
            return Fraction(0)
        if found != col:
            int_rows[col], int_rows[found] = int_rows[found], int_rows[col]
            sign = -sign
        piv = int_rows[col][col]
        for r in range(col + 1, n):
            target = int_rows[r][col]
            for c in range(col, n):
                int_rows[r][c] = (piv * int_rows[r][c] - target * int_rows[col][c]) // prev_pivot
        prev_pivot = piv
    return Fraction(sign * int_rows[n - 1][n - 1]) / scale


# -- spectra -----------------------------------------------------------------


def char_poly(matrix):
    """Monic characteristic polynomial det(t*I - M), exactly."""
    if not matrix.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    n = matrix.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m_work = RatMatrix.zeros(n)
    c_prev = Fraction(1)
    for k in range(1, n + 1):
        m_work = matrix @ (m_work + RatMatrix.identity(n).scale(c_prev))
        c_prev = -m_work.trace() / k
        coeffs[n - k] = c_prev
    return UniPoly(coeffs)


def min_poly(matrix):
    """Minimal polynomial: first linear dependency among I, M, M^2, ..."""
    if not matrix.is_square():
        raise ValueError("minimal polynomial needs a square matrix")
    n = matrix.rows
    powers = [RatMatrix.identity(n)]
    for k in range(1, n + 1):
        powers.append(powers[-1] @ matrix)
        columns = [_vec(p) for p in powers[:k]]
        target = _vec(powers[k])
        rows = [[columns[j][i] for j in range(k)] for i in range(n * n)]
        solution, _ = solve_with_nullspace(rows, target)
        if solution is not None:
            return UniPoly([-c for c in solution] + [Fraction(1)])
    raise AssertionError("unreachable: Cayley-Hamilton bounds the minimal polynomial")


def char_and_min_poly(matrix):
    """(characteristic polynomial, minimal polynomial), both monic over Q."""
    return char_poly(matrix), min_poly(matrix)


def _vec(matrix):
    return [v for row in matrix.entries for v in row]


def pencil_determinant(b0, b1):
    """det(B0 + t*B1) as an exact UniPoly, by evaluation/interpolation."""
    if b0.rows != b1.rows or b0.cols != b1.cols or not b0.is_square():
        raise ValueError("pencil needs two square matrices of equal size")
    n = b0.rows
    points = []
    for k in range(n + 1):
        t = Fraction(k)
        sample = RatMatrix(
            [[b0.entries[i][j] + t * b1.entries[i][j] for j in range(n)] for i in range(n)]
        )
        points.append((t, determinant(sample)))
    return lagrange_interpolate(points)


# -- resultants ----------------------------------------------------------------


def resultant(p, q, var):
    """Sylvester resultant of two BiPolys eliminating ``var``.

    Returns a BiPoly univariate in the surviving variable.  Computed by
    evaluating the coefficient polynomials of the fixed-structure Sylvester
    matrix at enough rational points and interpolating the determinant, which
    commutes with entrywise evaluation.
    """
    if var not in ("x", "y"):
        raise ValueError("var must be 'x' or 'y'")
    if var == "x":
        p, q = p.swap_variables(), q.swap_variables()
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant arguments must be nonzero")

    dp = p.degree_in("y")
    dq = q.degree_in("y")
    dp = 0 if dp == float("-inf") else int(dp)
    dq = 0 if dq == float("-inf") else int(dq)
    if dp == 0 and dq == 0:
        raise DegenerateResultantError("both arguments constant in the eliminated variable")

    # coefficient-of-y^k extraction as polynomials in x
    p_coeffs = _y_coefficient_polys(p, dp)
    q_coeffs = _y_coefficient_polys(q, dq)
    if dp == 0:
        result = p**dq
    elif dq == 0:
        result = q**dp
    else:
        degx_p = max((e[0] for e in p.terms), default=0)
        degx_q = max((e[0] for e in q.terms), default=0)
        bound = dq * degx_p + dp * degx_q
        points = []
        for k in range(bound + 1):
            x0 = Fraction(k)
            mat = _sylvester_at(p_coeffs, q_coeffs, dp, dq, x0)
            points.append((x0, determinant(mat)))
        interp = lagrange_interpolate(points)
        result = BiPoly({(k, 0): c for k, c in enumerate(interp.coeffs)})
    if var == "x":
        result = result.swap_variables()
    return result


def _y_coefficient_polys(p, dy):
    coeffs = [dict() for _ in range(dy + 1)]
    for (a, b), c in p.terms.items():
        coeffs[b][(a, 0)] = c
    return [BiPoly(c) for c in coeffs]


def _sylvester_at(p_coeffs, q_coeffs, dp, dq, x0):
    """Sylvester matrix (p rows first) with entries evaluated at x = x0."""
    size = dp + dq
    p_vals = [c.eval_at(x0, Fraction(0)) for c in p_coeffs]
    q_vals = [c.eval_at(x0, Fraction(0)) for c in q_coeffs]
    rows = []
    for shift in range(dq):
        row = [Fraction(0)] * size
        for k, v in enumerate(reversed(p_vals)):
            row[shift + k] = v
        rows.append(row)
    for shift in range(dp):
        row = [Fraction(0)] * size
        for k, v in enumerate(reversed(q_vals)):
            row[shift + k] = v
        rows.append(row)
    return RatMatrix(rows)
