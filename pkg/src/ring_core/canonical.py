"""
Canonical matrices over a field: Jordan blocks, companion matrices, rank
normal forms, block sums and characteristic polynomials.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Sequence, Tuple

from ..errors import PreconditionError, UnsupportedOperationError
from . import polynomials as poly
from .elements import RingElement
from .rings import MatrixRing, Ring, make_matrix_ring, row_reduce


class CanonicalKind(Enum):
    JNF = "jnf"
    JNF0 = "jnf0"
    COMPANION = "companion"
    IDENTITY = "identity"
    ZERO = "zero"
    RANK_NORMAL_FORM = "rank-normal-form"


@dataclass(frozen=True)
class CanonicalMatrix:
    """Constructor tag plus parameters; ``build`` produces the matrix"""
    kind: CanonicalKind
    size: int
    params: Tuple[int, ...] = ()

    def build(self, field: Ring) -> RingElement:
        if self.kind == CanonicalKind.JNF:
            return jnf(self.size, field)
        if self.kind == CanonicalKind.JNF0:
            return jnf0(self.size, field)
        if self.kind == CanonicalKind.COMPANION:
            return companion_n(self.size, field, self.params or None)
        if self.kind == CanonicalKind.IDENTITY:
            return identity(self.size, field)
        if self.kind == CanonicalKind.ZERO:
            return zero_matrix(self.size, field)
        return rank_normal_form(self.size, self.params[0], field)


def _from_rows(rows, field: Ring) -> RingElement:
    ring = make_matrix_ring(len(rows), field)
    return RingElement(ring, ring.from_entries(rows))


def _blank(k: int, field: Ring) -> List[List]:
    return [[field.zero] * k for _ in range(k)]


def identity(k: int, field: Ring) -> RingElement:
    ring = make_matrix_ring(k, field)
    return RingElement(ring, ring.one)


def zero_matrix(k: int, field: Ring) -> RingElement:
    ring = make_matrix_ring(k, field)
    return RingElement(ring, ring.zero)


def jnf(k: int, field: Ring) -> RingElement:
    """Unipotent Jordan block: ones on the diagonal and superdiagonal"""
    rows = _blank(k, field)
    for i in range(k):
        rows[i][i] = field.one
        if i + 1 < k:
            rows[i][i + 1] = field.one
    return _from_rows(rows, field)


def jnf0(k: int, field: Ring) -> RingElement:
    """Nilpotent Jordan block: ones on the superdiagonal"""
    rows = _blank(k, field)
    for i in range(k - 1):
        rows[i][i + 1] = field.one
    return _from_rows(rows, field)


def companion_n(k: int, field: Ring, params: Optional[Sequence[int]] = None) -> RingElement:
    """
    N_k(a, b, c, ...): ones on the subdiagonal and last column (1, ..., c, b, a)
    read top to bottom.

    Args:
        k: size, at least 2
        params: the k-1 raw field values a, b, c, ...; N_2 defaults to a = 1

    Returns:
        RingElement: the matrix; N_2 = rows (0 1),(1 1)
    """
    if k < 2:
        raise PreconditionError("companion matrices N_k need k >= 2")
    if params is None:
        params = [field.one] + [field.zero] * (k - 2)
    params = list(params)
    if len(params) != k - 1:
        raise PreconditionError(f"N_{k} takes {k - 1} parameters, got {len(params)}")
    rows = _blank(k, field)
    for i in range(k - 1):
        rows[i + 1][i] = field.one
    rows[0][k - 1] = field.one
    for i in range(1, k):
        rows[i][k - 1] = params[k - 1 - i]
    return _from_rows(rows, field)


def companion(coeffs: Sequence, field: Ring) -> RingElement:
    """Companion matrix of x^k + c_{k-1}x^{k-1} + ... + c_0 given (c_0, ..., c_{k-1})"""
    k = len(coeffs)
    rows = _blank(k, field)
    for i in range(k - 1):
        rows[i + 1][i] = field.one
    for i, c in enumerate(coeffs):
        rows[i][k - 1] = field.neg(c)
    return _from_rows(rows, field)


def rank_normal_form(n: int, r: int, field: Ring) -> RingElement:
    """diag(I_r, 0) of size n"""
    rows = _blank(n, field)
    for i in range(r):
        rows[i][i] = field.one
    return _from_rows(rows, field)


def matrix_unit(n: int, i: int, j: int, field: Ring, c=None) -> RingElement:
    ring = make_matrix_ring(n, field)
    return RingElement(ring, ring.unit_matrix(i, j, c))


def direct_sum(*blocks: RingElement) -> RingElement:
    """Block diagonal matrix; every block is a matrix over the same field"""
    field = blocks[0].ring.inner
    n = sum(b.ring.n for b in blocks)
    rows = _blank(n, field)
    offset = 0
    for block in blocks:
        if block.ring.inner != field:
            raise PreconditionError("direct_sum blocks must share the inner ring")
        for i, row in enumerate(block.ring.entries(block.value)):
            for j, v in enumerate(row):
                rows[offset + i][offset + j] = v
        offset += block.ring.n
    return _from_rows(rows, field)


def scalar_block(field: Ring, c) -> RingElement:
    """The 1x1 matrix (c)"""
    return _from_rows([[c]], field)


def rank(x: RingElement) -> int:
    if not isinstance(x.ring, MatrixRing):
        raise UnsupportedOperationError("rank is defined for matrices only")
    return x.ring.rank(x.value)


def rank_decomposition(ring: MatrixRing, x) -> Tuple[object, object, int]:
    """
    Invertible X, Y with X x Y = diag(I_r, 0).

    Returns:
        (X, Y, r) as raw values of ``ring``
    """
    field, n = ring.inner, ring.n
    if not field.is_field:
        raise UnsupportedOperationError(f"rank normal form needs a field, got {field}")
    aug = [row + [field.one if i == j else field.zero for j in range(n)]
           for i, row in enumerate(ring.entries(x))]
    reduced, _ = row_reduce(aug, field)
    left = [row[:n] for row in reduced]
    X = ring.from_entries([row[n:] for row in reduced])
    _, pivots = row_reduce(left, field)
    r = len(pivots)
    non_pivots = [c for c in range(n) if c not in pivots]
    cols = []
    for p in pivots:
        col = [field.zero] * n
        col[p] = field.one
        cols.append(col)
    for c in non_pivots:
        col = [field.zero] * n
        col[c] = field.one
        for i, p in enumerate(pivots):
            col[p] = field.sub(col[p], left[i][c])
        cols.append(col)
    Y = ring.from_entries([[cols[j][i] for j in range(n)] for i in range(n)])
    return X, Y, r


def characteristic_polynomial(x: RingElement) -> poly.Poly:
    """
    det(tI - M) by cofactor expansion with polynomial entries.

    Returns:
        coefficients, lowest degree first (monic of degree n)
    """
    ring = x.ring
    field = ring.inner
    if not field.is_commutative:
        raise UnsupportedOperationError("characteristic polynomial needs a commutative inner ring")
    if ring.n > 6:
        raise UnsupportedOperationError("characteristic polynomial is limited to size 6")
    rows = ring.entries(x.value)
    n = ring.n
    entries = [[poly.trim([field.neg(rows[i][j])] + ([field.one] if i == j else []), field)
                for j in range(n)] for i in range(n)]
    return _poly_det(entries, field)


def _poly_det(entries, field) -> poly.Poly:
    n = len(entries)
    if n == 1:
        return entries[0][0]
    det: poly.Poly = ()
    for j in range(n):
        if not entries[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in entries[1:]]
        term = poly.mul(entries[0][j], _poly_det(minor, field), field)
        det = poly.add(det, term, field) if j % 2 == 0 else poly.sub(det, term, field)
    return det
