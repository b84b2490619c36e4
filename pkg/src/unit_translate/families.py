"""
Explicit tuple families that defeat the unit-translate property, and
explicit witness constructions for matrix rings over fields.
"""

import time
from dataclasses import dataclass, field
from typing import Any, List, Optional

from loguru import logger

from ..errors import ArithmeticInconsistencyError, HypothesisNotSatisfiedError, PreconditionError, \
    UnsupportedOperationError
from ..ring_core import MatrixRing, Ring, build_ring, make_matrix_ring
from ..ring_core.canonical import rank_decomposition
from ..ring_core.descriptors import RingDescriptor
from ..ring_core.units import units
from .certificates import Provenance, SearchStats, Verdict, WitnessCertificate, is_witness
from .search import is_two_good, unit_difference_set


def _first_row_family(ring: MatrixRing, scalars: List) -> List:
    """{z E_1i}: z in ``scalars`` in the (0, i) entry, zero elsewhere"""
    return [ring.unit_matrix(0, i, z) for z in scalars for i in range(ring.n)]


def _certify_family(ring: MatrixRing, family: List, command: str, details: dict) -> WitnessCertificate:
    start = time.perf_counter()
    found = next((u for u in units(ring) if is_witness(ring, u, family)), None)
    cert = WitnessCertificate(
        command=command, ring=str(ring), k=len(family) + 1,
        verdict=Verdict.EXHAUSTED_FAILURE.value if found is None else Verdict.WITNESS.value,
        values=[ring.format_value(s) for s in family],
        witness=None if found is None else ring.format_value(found),
        stats=SearchStats(tested=len(units(ring)), witnessed=0 if found is None else 1,
                          elapsed_ms=int((time.perf_counter() - start) * 1000), scan_order="units"),
        provenance=Provenance(), details=details,
    )
    if found is not None:
        logger.error(f"{command}: unexpected witness over {ring}")
    return cert.stamp()


def failure_family_Antn(n: int, q: int) -> WitnessCertificate:
    """
    The (q-1)n matrices z E_1i (z a nonzero scalar) admit no common unit
    translate in M_n F_q: det(U + z E_1i) = det U + z d_i forces every
    cofactor d_i of the first row to vanish.
    """
    if n < 1:
        raise PreconditionError("n must be at least 1")
    field_ring = build_ring(RingDescriptor.gf(q))
    ring = make_matrix_ring(n, field_ring)
    scalars = [z for z in field_ring.elements() if z != field_ring.zero]
    family = _first_row_family(ring, scalars)
    logger.info(f"first-row family of size {len(family)} in {ring}")
    return _certify_family(ring, family, "gui families antn",
                           {"n": n, "q": q, "fails_k": (q - 1) * n + 1})


def annihilating_elements(ring: Ring) -> List:
    """Nonzero a with aR meeting V(R) only in zero"""
    ring.require_finite()
    diffs = unit_difference_set(ring)
    elements = list(ring.elements())
    out = []
    for a in elements:
        if a == ring.zero:
            continue
        ideal = {ring.mul(a, x) for x in elements}
        if all(v == ring.zero for v in ideal & diffs):
            out.append(a)
    return out


def failure_family_Atwh(base: Ring, n: int, a=None) -> WitnessCertificate:
    """
    For a with aS ∩ V(S) = {0}, the n matrices a E_1i admit no common unit
    translate in M_n S, so M_n S fails the property at n + 1.

    Raises:
        HypothesisNotSatisfiedError: if no such a exists (or the given one fails)
    """
    candidates = annihilating_elements(base)
    if a is None:
        if not candidates:
            raise HypothesisNotSatisfiedError(f"no nonzero a in {base} with aS ∩ V(S) = {{0}}")
        a = candidates[0]
    elif a not in candidates:
        raise HypothesisNotSatisfiedError(
            f"a = {base.format_value(a)} does not satisfy aS ∩ V(S) = {{0}} in {base}")
    ring = make_matrix_ring(n, base)
    family = _first_row_family(ring, [a])
    return _certify_family(ring, family, "gui families atwh",
                           {"base": str(base), "a": base.format_value(a), "n": n, "fails_k": n + 1})


def _cyclic_permutation(ring: MatrixRing):
    """Ones in positions (i, i+1) and (n, 1), 1-based"""
    n, F = ring.n, ring.inner
    rows = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        rows[i][(i + 1) % n] = F.one
    return ring.from_entries(rows)


def two_good_witness(ring: MatrixRing, b):
    """
    A unit u with u + b a unit, for M_n F with n >= 2.

    With X b Y = diag(d) in rank normal form, W = P - d_11 E_11 (P the cyclic
    permutation) and W + diag(d) are both invertible; u = X^-1 W Y^-1.
    """
    if not isinstance(ring, MatrixRing) or not ring.inner.is_field:
        raise UnsupportedOperationError(f"diagonal reduction needs a matrix ring over a field, got {ring}")
    if ring.n < 2:
        raise PreconditionError("the cyclic witness needs n >= 2")
    F = ring.inner
    X, Y, r = rank_decomposition(ring, b)
    rows = ring.entries(_cyclic_permutation(ring))
    if r > 0:
        rows[0][0] = F.neg(F.one)
    W = ring.from_entries(rows)
    u = ring.mul(ring.mul(ring.try_invert(X), W), ring.try_invert(Y))
    if not is_witness(ring, u, [b]):
        raise ArithmeticInconsistencyError(f"cyclic witness failed for {ring.format_value(b)}")
    return u


@dataclass
class TriangularWitness:
    """U with U + B and U + C invertible, and the data it was built from"""
    u: Any
    rank: int
    diagonal: List[Any] = field(default_factory=list)

    def to_dict(self, ring: Ring) -> dict:
        F = ring.inner
        return {"u": ring.format_value(self.u), "rank": self.rank,
                "diagonal": [F.format_value(d) for d in self.diagonal]}


def triangular_witness_Atwn(ring: MatrixRing, b, c) -> Optional[TriangularWitness]:
    """
    Witness for the pair (b, c) when b is singular.

    b is brought to diag(I_r, 0) = X b Y and the columns are cycled one step
    so it becomes strictly upper triangular. U1 has diagonal entries u_i with
    u_i and u_i + c_ii nonzero and cancels the strict upper part of the
    transformed c, so U1 + B1 is upper and U1 + C1 lower triangular with
    nonzero diagonals.

    Returns:
        None over fields that are not 2-good (F_2), where the diagonal step
        is not available

    Raises:
        PreconditionError: if b is invertible
    """
    if not isinstance(ring, MatrixRing) or not ring.inner.is_field:
        raise UnsupportedOperationError(f"triangular witnesses need a matrix ring over a field, got {ring}")
    F, n = ring.inner, ring.n
    if not is_two_good(F):
        logger.debug(f"triangular witness not applicable over {F}")
        return None
    X, Y, r = rank_decomposition(ring, b)
    if r == n:
        raise PreconditionError("b must be singular")

    shift = _cyclic_permutation(ring)
    c1 = ring.entries(ring.mul(ring.mul(ring.mul(X, c), Y), shift))
    field_units = units(F)
    rows = [[F.zero] * n for _ in range(n)]
    diagonal = []
    for i in range(n):
        u_i = next(u for u in field_units if F.is_unit(F.add(u, c1[i][i])))
        rows[i][i] = u_i
        diagonal.append(u_i)
        for j in range(i + 1, n):
            rows[i][j] = F.neg(c1[i][j])
    u1 = ring.from_entries(rows)

    # X U Y shift = U1
    u = ring.mul(ring.mul(ring.try_invert(X), ring.mul(u1, ring.try_invert(shift))), ring.try_invert(Y))
    if not is_witness(ring, u, [b, c]):
        raise ArithmeticInconsistencyError("triangular construction did not produce a witness")
    return TriangularWitness(u=u, rank=r, diagonal=diagonal)
