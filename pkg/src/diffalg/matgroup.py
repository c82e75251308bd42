"""Algebraic matrix groups over Q and the GL(n) invariance witness.

A group is cut out of the invertible n x n matrices by a defining set of
polynomials in the n^2 entries (represented as order-0 differential
polynomials, entry (i, j) being indeterminate i*n + j).  The catalog
covers the five groups the classification can produce; membership and
closure are decided exactly.

The invariance witness evaluates the coefficient ratios of the bordered
Wronskian operator in n differential indeterminates at a generic point,
before and after a constant linear substitution: each minor picks up the
same det(T) factor, so the ratios must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations

from .basefield import RatFunc
from .diffpoly import DerivVar, DiffPoly
from .errors import (
    DegeneratePoint,
    NonMemberSample,
    NotInCatalog,
    ShapeError,
    SingularTransform,
)
from .galois import GaloisDescriptor, GroupKind


@dataclass(frozen=True)
class ConstMatrix:
    """Square matrix of rationals."""

    entries: tuple

    @classmethod
    def from_rows(cls, rows) -> "ConstMatrix":
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ShapeError("matrix must be square and nonempty")
        return cls(tuple(tuple(Fraction(v) for v in r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "ConstMatrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)]
                              for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.entries)

    def det(self) -> Fraction:
        m = [list(row) for row in self.entries]
        n = self.n
        det = Fraction(1)
        for k in range(n):
            pivot = next((i for i in range(k, n) if m[i][k]), None)
            if pivot is None:
                return Fraction(0)
            if pivot != k:
                m[k], m[pivot] = m[pivot], m[k]
                det = -det
            det *= m[k][k]
            inv = 1 / m[k][k]
            for i in range(k + 1, n):
                f = m[i][k] * inv
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], m[k])]
        return det

    def inverse(self) -> "ConstMatrix":
        n = self.n
        aug = [list(row) + [Fraction(int(i == j)) for j in range(n)]
               for i, row in enumerate(self.entries)]
        for k in range(n):
            pivot = next((i for i in range(k, n) if aug[i][k]), None)
            if pivot is None:
                raise SingularTransform("matrix is singular")
            aug[k], aug[pivot] = aug[pivot], aug[k]
            inv = 1 / aug[k][k]
            aug[k] = [v * inv for v in aug[k]]
            for i in range(n):
                if i != k and aug[i][k]:
                    f = aug[i][k]
                    aug[i] = [a - f * b for a, b in zip(aug[i], aug[k])]
        return ConstMatrix.from_rows([row[n:] for row in aug])

    def __matmul__(self, other: "ConstMatrix") -> "ConstMatrix":
        if self.n != other.n:
            raise ShapeError("size mismatch")
        n = self.n
        return ConstMatrix.from_rows(
            [[sum(self.entries[i][k] * other.entries[k][j] for k in range(n))
              for j in range(n)] for i in range(n)])


class GroupLabel(Enum):
    GENERAL_LINEAR = "general_linear"
    SPECIAL_LINEAR = "special_linear"
    UNIPOTENT_ADDITIVE = "unipotent_additive"
    DIAGONAL_MULTIPLICATIVE = "diagonal_multiplicative"
    ROOTS_OF_UNITY = "roots_of_unity"


@dataclass(frozen=True)
class AlgebraicMatrixGroup:
    """Invertible matrices annihilating every polynomial of the defining set."""

    n: int
    defining_set: tuple
    label: GroupLabel | None = None
    unity_order: int | None = None


def _entry_var(n: int, i: int, j: int) -> DiffPoly:
    return DiffPoly.from_var(DerivVar(0, i * n + j), n * n)


def _det_polynomial(n: int) -> DiffPoly:
    total = DiffPoly({}, n * n)
    for perm in permutations(range(n)):
        prod = DiffPoly.const(_perm_sign(perm), n * n)
        for i, j in enumerate(perm):
            prod = prod * _entry_var(n, i, j)
        total = total + prod
    return total


def _perm_sign(perm) -> int:
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def catalog_group(label: GroupLabel, n: int, unity_order: int | None = None) -> AlgebraicMatrixGroup:
    """The five stock groups; sizes outside each embedding are rejected."""
    if n < 1:
        raise NotInCatalog("size must be positive")
    one = DiffPoly.const(1, n * n)
    if label is GroupLabel.GENERAL_LINEAR:
        return AlgebraicMatrixGroup(n, (), label)
    if label is GroupLabel.SPECIAL_LINEAR:
        return AlgebraicMatrixGroup(n, (_det_polynomial(n) - one,), label)
    if label is GroupLabel.UNIPOTENT_ADDITIVE:
        if n != 2:
            raise NotInCatalog("the unipotent embedding is 2x2")
        polys = (_entry_var(2, 0, 0) - one, _entry_var(2, 1, 1) - one,
                 _entry_var(2, 1, 0))
        return AlgebraicMatrixGroup(2, polys, label)
    if label is GroupLabel.DIAGONAL_MULTIPLICATIVE:
        if n != 1:
            raise NotInCatalog("the multiplicative torus here is 1x1")
        return AlgebraicMatrixGroup(1, (), label)
    if label is GroupLabel.ROOTS_OF_UNITY:
        if n != 1:
            raise NotInCatalog("roots of unity embed as 1x1")
        if unity_order is None or unity_order < 1:
            raise NotInCatalog("roots of unity need a positive order")
        poly = _entry_var(1, 0, 0) ** unity_order - one
        return AlgebraicMatrixGroup(1, (poly,), label, unity_order)
    raise NotInCatalog("unknown label %r" % (label,))


def group_contains(group: AlgebraicMatrixGroup, m: ConstMatrix) -> bool:
    """Invertible and every defining polynomial vanishes at the entries."""
    if m.n != group.n:
        raise ShapeError("matrix size %d, group size %d" % (m.n, group.n))
    if m.det() == 0:
        return False
    point = {DerivVar(0, i * group.n + j): RatFunc(m.entries[i][j])
             for i in range(group.n) for j in range(group.n)}
    return all(p.evaluate(point).is_zero() for p in group.defining_set)


def group_closure_sample_check(group: AlgebraicMatrixGroup, samples) -> bool:
    """Products and inverses of member samples stay members."""
    for s in samples:
        if not group_contains(group, s):
            raise NonMemberSample("sample outside the group")
    for a in samples:
        if not group_contains(group, a.inverse()):
            return False
        for b in samples:
            if not group_contains(group, a @ b):
                return False
    return True


def identity_component_dimension(group: AlgebraicMatrixGroup) -> int:
    """Dimension of the connected component of the identity, catalog only."""
    if group.label is GroupLabel.GENERAL_LINEAR:
        return group.n * group.n
    if group.label is GroupLabel.SPECIAL_LINEAR:
        return group.n * group.n - 1
    if group.label is GroupLabel.UNIPOTENT_ADDITIVE:
        return 1
    if group.label is GroupLabel.DIAGONAL_MULTIPLICATIVE:
        return 1
    if group.label is GroupLabel.ROOTS_OF_UNITY:
        return 0
    raise NotInCatalog("dimension is only tabulated for catalog groups")


def descriptor_to_matrix_group(d: GaloisDescriptor) -> AlgebraicMatrixGroup:
    """Catalog realization of a classification outcome."""
    if d.kind is GroupKind.TRIVIAL:
        return catalog_group(GroupLabel.ROOTS_OF_UNITY, 1, 1)
    if d.kind is GroupKind.ADDITIVE:
        return catalog_group(GroupLabel.UNIPOTENT_ADDITIVE, 2)
    if d.kind is GroupKind.MULTIPLICATIVE:
        return catalog_group(GroupLabel.DIAGONAL_MULTIPLICATIVE, 1)
    if d.kind is GroupKind.CYCLIC:
        return catalog_group(GroupLabel.ROOTS_OF_UNITY, 1, d.n)
    return catalog_group(GroupLabel.GENERAL_LINEAR, d.n)


def _symbolic_det(rows) -> DiffPoly:
    n = len(rows)
    total = None
    for perm in permutations(range(n)):
        prod = DiffPoly.const(_perm_sign(perm), rows[0][0].num_indeterminates)
        for i, j in enumerate(perm):
            prod = prod * rows[i][j]
        total = prod if total is None else total + prod
    return total


def wronskian_minor_polynomials(n: int) -> list:
    """Minors of the bordered Wronskian in n differential indeterminates.

    Rows are derivative orders 0..n of x_1..x_n; minor j deletes order j.
    Entry j = n is the plain Wronskian.  Coefficient of y^(j) in the
    bordered determinant is (up to sign) minor j.
    """
    rows = [[DiffPoly.from_var(DerivVar(order, i), n) for i in range(n)]
            for order in range(n + 1)]
    return [_symbolic_det([rows[r] for r in range(n + 1) if r != j])
            for j in range(n + 1)]


def gl_invariance_witness(n: int, transform: ConstMatrix, generic_point: dict) -> bool:
    """Coefficient ratios of the bordered Wronskian survive the substitution.

    generic_point maps DerivVar(order, indeterminate) to RatFunc for orders
    0..n; it must keep the Wronskian nonzero.
    """
    if transform.n != n:
        raise ShapeError("transform size %d, expected %d" % (transform.n, n))
    if transform.det() == 0:
        raise SingularTransform("transform must be invertible")
    minors = wronskian_minor_polynomials(n)
    w = minors[n]
    matrix_rows = [list(r) for r in transform.entries]
    w_val = w.evaluate(generic_point)
    if w_val.is_zero():
        raise DegeneratePoint("Wronskian vanishes at the generic point")
    w_sub = w.substitute_linear(matrix_rows).evaluate(generic_point)
    if w_sub.is_zero():
        raise DegeneratePoint("transformed Wronskian vanishes at the generic point")
    for j in range(n):
        before = minors[j].evaluate(generic_point) / w_val
        after = minors[j].substitute_linear(matrix_rows).evaluate(generic_point) / w_sub
        if before != after:
            return False
    return True
