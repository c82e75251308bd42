"""Wronsky matrices over Q(t), dependence tests, and ODE reconstruction.

The dependence test is the classical one: n elements of the field are
linearly dependent over the constants iff their Wronskian vanishes.  The
certificate direction never touches the Wronskian; it solves for the
constants directly on cleared polynomial coefficients, which is what makes
it usable as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .basefield import Poly, RatFunc, poly_lcm
from .errors import NotFundamental, ShapeError


def wronsky_matrix(elems) -> list:
    """Row j holds the j-th derivatives: entry (j, i) = elems[i]^(j)."""
    if not elems:
        raise ShapeError("need at least one element")
    n = len(elems)
    rows = [list(elems)]
    for _ in range(n - 1):
        rows.append([f.derive() for f in rows[-1]])
    return rows


def _poly_det_bareiss(m: list) -> Poly:
    """Fraction-free determinant of a square Poly matrix."""
    n = len(m)
    m = [row[:] for row in m]
    sign = 1
    prev = Poly((1,))
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Poly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
            m[i][k] = Poly()
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def _det_ratfunc(rows: list) -> RatFunc:
    # clear one common denominator per column, then Bareiss over Poly
    n = len(rows)
    cleared = [[None] * n for _ in range(n)]
    denom = Poly((1,))
    for i in range(n):
        col_den = Poly((1,))
        for j in range(n):
            col_den = poly_lcm(col_den, rows[j][i].den)
        for j in range(n):
            f = rows[j][i]
            cleared[j][i] = f.num * col_den.exact_div(f.den)
        denom = denom * col_den
    return RatFunc(_poly_det_bareiss(cleared), denom)


def wronskian(elems) -> RatFunc:
    """Exact Wronskian determinant."""
    return _det_ratfunc(wronsky_matrix(elems))


def dependent_over_constants(elems) -> bool:
    """Linear dependence over Q, decided through the Wronskian."""
    return wronskian(elems).is_zero()


def dependence_certificate(elems) -> list | None:
    """Constants c with sum c_i elems_i = 0, or None when independent.

    Solved by exact Gaussian elimination on the cleared polynomial
    coefficients; no Wronskian involved.  The first nonzero constant is
    normalized to 1.
    """
    if not elems:
        raise ShapeError("need at least one element")
    common = Poly((1,))
    for f in elems:
        common = poly_lcm(common, f.den)
    polys = [f.num * common.exact_div(f.den) for f in elems]
    width = len(elems)
    height = max((p.degree() for p in polys), default=-1) + 1
    # rows: coefficient of t^k in sum c_i polys_i = 0
    a = [[Fraction(0)] * width for _ in range(height)]
    for i, p in enumerate(polys):
        for k, c in enumerate(p.coeffs):
            a[k][i] = c
    kernel = _kernel_vector(a, width)
    if kernel is None:
        return None
    lead = next(c for c in kernel if c)
    return [c / lead for c in kernel]


def _kernel_vector(a: list, width: int) -> list | None:
    """One nonzero kernel vector of a (rows x width) rational matrix, or None."""
    rows = [row[:] for row in a]
    pivots = []
    r = 0
    for col in range(width):
        hit = None
        for i in range(r, len(rows)):
            if rows[i][col]:
                hit = i
                break
        if hit is None:
            continue
        rows[r], rows[hit] = rows[hit], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(width) if c not in pivots]
    if not free:
        return None
    choice = free[0]
    vec = [Fraction(0)] * width
    vec[choice] = Fraction(1)
    for i, col in enumerate(pivots):
        vec[col] = -rows[i][choice]
    return vec


def apply_constant_matrix(elems, matrix) -> list:
    """C acting on the tuple: result_i = sum_j C[i][j] elems[j]."""
    n = len(elems)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise ShapeError("matrix must be %dx%d" % (n, n))
    out = []
    for row in matrix:
        acc = RatFunc(0)
        for c, f in zip(row, elems):
            acc = acc + f * Fraction(c)
        out.append(acc)
    return out


@dataclass
class LinearODE:
    """Monic linear ODE y^(n) + a1 y^(n-1) + ... + an y = 0."""

    order: int
    coeffs: list  # [a1, ..., an]

    def __post_init__(self):
        if self.order < 1 or len(self.coeffs) != self.order:
            raise ShapeError("order must match the coefficient count")

    def apply(self, f: RatFunc) -> RatFunc:
        """Left-hand side evaluated at a field element."""
        derivs = [f]
        for _ in range(self.order):
            derivs.append(derivs[-1].derive())
        acc = derivs[self.order]
        for i, a in enumerate(self.coeffs, start=1):
            acc = acc + a * derivs[self.order - i]
        return acc

    def __str__(self) -> str:
        parts = [_y_term(RatFunc(1), self.order, lead=True)]
        for i, a in enumerate(self.coeffs, start=1):
            if a.is_zero():
                continue
            negative = a.num.lead() < 0
            mag = -a if negative else a
            parts.append(("- " if negative else "+ ") + _y_term(mag, self.order - i))
        return " ".join(parts) + " = 0"


def _y_term(mag: RatFunc, order: int, lead: bool = False) -> str:
    if order == 0:
        name = "y"
    elif order <= 2:
        name = "y" + "'" * order
    else:
        name = "y^(%d)" % order
    if mag == RatFunc(1):
        return name
    s = str(mag)
    if " + " in s or " - " in s:
        s = "(%s)" % s
    return "%s*%s" % (s, name)


@dataclass
class FundamentalSystem:
    """Tuple of field elements with nonvanishing Wronskian."""

    elems: list
    wronskian: RatFunc = field(init=False)

    def __post_init__(self):
        w = wronskian_of(self.elems)
        if w.is_zero():
            raise NotFundamental("Wronskian vanishes")
        self.wronskian = w


def wronskian_of(elems) -> RatFunc:
    return wronskian(elems)


def ode_from_fundamental_system(fs: FundamentalSystem) -> LinearODE:
    """The monic ODE annihilating every element of the system.

    Cofactor expansion of the bordered Wronskian in the extra symbol y
    (placed as the last column): the coefficient of y^(j) is the signed
    minor that deletes derivative row j, and dividing by the Wronskian
    makes the operator monic.
    """
    elems = fs.elems
    n = len(elems)
    w = fs.wronskian
    if w.is_zero():
        raise NotFundamental("Wronskian vanishes")
    rows = [list(elems)]
    for _ in range(n):
        rows.append([f.derive() for f in rows[-1]])
    coeffs = []
    for i in range(1, n + 1):
        j = n - i
        minor = [rows[r] for r in range(n + 1) if r != j]
        m = _det_ratfunc(minor)
        sign = -1 if i % 2 else 1
        coeffs.append(m * sign / w)
    return LinearODE(n, coeffs)
