"""
Peirce corners eRe and (1-e)R(1-e) and the two ways of assembling unit
translates of R from witnesses found in the corners.
"""

from dataclasses import dataclass, field, replace
from typing import Any, List, Optional, Sequence

from loguru import logger

from ..errors import ArithmeticInconsistencyError, HypothesisNotSatisfiedError, PreconditionError
from ..ring_core import MatrixRing, Ring, build_ring, make_matrix_ring
from ..ring_core.descriptors import RingDescriptor
from .certificates import is_witness
from .search import WitnessOrder, find_witness


def complement(ring: Ring, e):
    return ring.sub(ring.one, e)


def is_idempotent(ring: Ring, e) -> bool:
    return ring.mul(e, e) == e


def in_corner(ring: Ring, e, x) -> bool:
    return ring.mul(ring.mul(e, x), e) == x


def relative_inverse(ring: Ring, e, x) -> Optional[Any]:
    """
    The inverse of x inside eRe, or None.

    x + (1 - e) is a unit of R exactly when x is relatively invertible, and
    then e (x + 1 - e)^-1 e is the relative inverse.
    """
    inv = ring.try_invert(ring.add(x, complement(ring, e)))
    if inv is None:
        return None
    return ring.mul(ring.mul(e, inv), e)


def standard_idempotent(ring: MatrixRing, r: int):
    """diag(I_r, 0)"""
    F = ring.inner
    return ring.from_entries([[F.one if i == j and i < r else F.zero for j in range(ring.n)]
                              for i in range(ring.n)])


def block(ring: MatrixRing, x, start: int, size: int):
    """The diagonal block of ``x`` on rows and columns start..start+size-1"""
    rows = ring.entries(x)
    sub = make_matrix_ring(size, ring.inner)
    return sub.from_entries([row[start:start + size] for row in rows[start:start + size]])


def block_sum(ring: MatrixRing, top, bottom, r: int):
    """diag(top, bottom) with top of size r"""
    F, n = ring.inner, ring.n
    top_ring, bottom_ring = make_matrix_ring(r, F), make_matrix_ring(n - r, F)
    rows = [[F.zero] * n for _ in range(n)]
    for i, row in enumerate(top_ring.entries(top) if r else []):
        rows[i][:r] = row
    for i, row in enumerate(bottom_ring.entries(bottom) if n - r else []):
        rows[r + i][r:] = row
    return ring.from_entries(rows)


@dataclass
class PeirceData:
    """
    Corner witnesses and the unit assembled from them.

    With ``twist`` set, the corners were searched for the pair (b, c·twist)
    and ``u`` has already been multiplied back by twist⁻¹.
    """
    e: Any
    u0: Any
    u0_bar: Any
    v0: Any
    v0_bar: Any
    u: Any
    twist: Any = None

    def to_dict(self, ring: Ring) -> dict:
        f = ring.format_value
        data = {"e": f(self.e), "u0": f(self.u0), "u0_bar": f(self.u0_bar), "v0": f(self.v0),
                "v0_bar": f(self.v0_bar), "u": f(self.u)}
        if self.twist is not None:
            data["twist"] = f(self.twist)
        return data


def _require_relative_unit(ring: Ring, e, x, what: str):
    inv = relative_inverse(ring, e, x)
    if inv is None:
        raise PreconditionError(f"{what} is not relatively invertible")
    return inv


def _nilpotent_square(ring: Ring, x) -> bool:
    n = ring.sub(x, ring.one)
    return ring.mul(n, n) == ring.zero


def lemma_Btwo_lift(ring: Ring, e, b, c, u0, v0) -> PeirceData:
    """
    Lift corner witnesses to a unit u with u + b and u + c units.

    Requires c = ec, u0 with u0, u0 + ece, u0 + ebe relatively invertible in
    eRe, and v0 with v0, v0 + (1-e)b(1-e) relatively invertible in
    (1-e)R(1-e). Then u = u0 + v0 - eb(1-e), and multiplying u by
    ū0 + v̱0 gives 1 plus a square-zero element.

    Raises:
        PreconditionError: if a hypothesis fails
        ArithmeticInconsistencyError: if the lifted element is not a witness
    """
    f = complement(ring, e)
    if not is_idempotent(ring, e):
        raise PreconditionError("e is not idempotent")
    if ring.mul(e, c) != c:
        raise PreconditionError("c must satisfy c = ec")
    if not in_corner(ring, e, u0) or not in_corner(ring, f, v0):
        raise PreconditionError("u0 and v0 must lie in the corners eRe and (1-e)R(1-e)")
    ece = ring.mul(ring.mul(e, c), e)
    ebe = ring.mul(ring.mul(e, b), e)
    fbf = ring.mul(ring.mul(f, b), f)
    u0_bar = _require_relative_unit(ring, e, u0, "u0")
    _require_relative_unit(ring, e, ring.add(u0, ece), "u0 + ece")
    _require_relative_unit(ring, e, ring.add(u0, ebe), "u0 + ebe")
    v0_bar = _require_relative_unit(ring, f, v0, "v0")
    _require_relative_unit(ring, f, ring.add(v0, fbf), "v0 + (1-e)b(1-e)")

    u = ring.sub(ring.add(u0, v0), ring.mul(ring.mul(e, b), f))
    u_prime = ring.add(u0_bar, v0_bar)
    if not (_nilpotent_square(ring, ring.mul(u_prime, u)) and _nilpotent_square(ring, ring.mul(u, u_prime))):
        raise ArithmeticInconsistencyError("u is not a square-zero perturbation of a unit")
    if not is_witness(ring, u, [b, c]):
        raise ArithmeticInconsistencyError("lifted u is not a witness for (b, c)")
    return PeirceData(e=e, u0=u0, u0_bar=u0_bar, v0=v0, v0_bar=v0_bar, u=u)


def _corner_attempt(ring: MatrixRing, s: int, b, c) -> Optional[PeirceData]:
    """Lift through e = diag(I_s, 0); b must satisfy b = eb"""
    n, F = ring.n, ring.inner
    top, bottom = make_matrix_ring(s, F), make_matrix_ring(n - s, F)
    u_top = find_witness(top, [block(ring, b, 0, s), block(ring, c, 0, s)])
    if u_top is None:
        return None
    v_bottom = find_witness(bottom, [block(ring, c, s, n - s)])
    if v_bottom is None:
        return None
    u0 = block_sum(ring, u_top, bottom.zero, s)
    v0 = block_sum(ring, top.zero, v_bottom, s)
    return lemma_Btwo_lift(ring, standard_idempotent(ring, s), c, b, u0, v0)


def lower_corner_twist(ring: MatrixRing, r: int, c):
    """
    A unit y = diag(I_r, *) with (c·y)_{nn} = 0, so the 1x1 lower corner of
    diag(I_{n-1}, 0) has a witness. diag(I_r, 0)·y = diag(I_r, 0).

    Raises:
        PreconditionError: if n - r < 2
    """
    n, F = ring.n, ring.inner
    if n - r < 2:
        raise PreconditionError(f"the lower corner twist needs n - r >= 2, got n={n}, r={r}")
    last = ring.entries(c)[n - 1]
    rows = [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]
    if last[n - 1] != F.zero:
        j = next((j for j in range(r, n - 1) if last[j] != F.zero), None)
        if j is None:
            # c_{n,r+1} = 0: swap columns r+1 and n
            rows[r][r] = rows[n - 1][n - 1] = F.zero
            rows[r][n - 1] = rows[n - 1][r] = F.one
        else:
            # add a multiple of column j to column n
            rows[j][n - 1] = F.neg(F.mul(last[n - 1], F.try_invert(last[j])))
    return ring.from_entries(rows)


def btwo_dispatch(ring: MatrixRing, r: int, c) -> Optional[PeirceData]:
    """
    Witness for the pair (diag(I_r, 0), c) through corner lifts.

    Corners e = diag(I_s, 0) are tried for s = r, then s = max(r, 3) .. n-1;
    the upper corner needs a witness for (diag(I_r, 0), c_top) in M_s and the
    lower one a witness for c_bottom in M_{n-s}. When only the 1x1 lower
    corner c_{nn} blocks s = n-1 and n - r >= 2, c is twisted by
    ``lower_corner_twist`` first. Returns None when every attempt fails.
    """
    n = ring.n
    if not 0 < r < n:
        raise PreconditionError(f"corner dispatch needs 0 < r < n, got r={r}")
    b = standard_idempotent(ring, r)
    for s in dict.fromkeys([r, *range(max(r, 3), n)]):
        data = _corner_attempt(ring, s, b, c)
        if data is not None:
            return data

    if n - r < 2 or max(r, 3) > n - 1:
        return None
    y = lower_corner_twist(ring, r, c)
    data = _corner_attempt(ring, n - 1, b, ring.mul(c, y))
    if data is None:
        return None
    u = ring.mul(data.u, ring.try_invert(y))
    if not is_witness(ring, u, [c, b]):
        raise ArithmeticInconsistencyError("twisted corner witness does not pull back")
    logger.debug(f"corner lift over {ring} at rank {r} through a lower-corner twist")
    return replace(data, u=u, twist=y)


@dataclass
class CornerWitness:
    """Witness u = u0 + v0 for a tuple in R assembled from the two corners"""
    u: Any
    u0: Any
    v0: Any
    r: int
    corrections: List[Any] = field(default_factory=list)

    def to_dict(self, ring: MatrixRing) -> dict:
        f = ring.format_value
        return {"u": f(self.u), "u0": f(self.u0), "v0": f(self.v0), "r": self.r,
                "corrections": [f(c) for c in self.corrections]}


def corner_composition(ring: MatrixRing, r: int, values: Sequence,
                       order: WitnessOrder = WitnessOrder.SUBFIELD_FIRST) -> CornerWitness:
    """
    Assemble a witness for ``values`` in M_n from witnesses in the corners
    M_r and M_{n-r}.

    u0 is found in eRe for the blocks e a_i e. With w_i the relative inverse
    of u0 + e a_i e, v0 is found in (1-e)R(1-e) for the Schur complements
    c_i = (1-e)a_i(1-e) - (1-e)a_i e w_i e a_i(1-e). Then u0 + v0 + a_i has
    invertible pivot u0 + e a_i e and invertible complement v0 + c_i.

    Raises:
        HypothesisNotSatisfiedError: if a corner search fails
    """
    n, F = ring.n, ring.inner
    if not 0 < r < n:
        raise PreconditionError(f"corner composition needs 0 < r < n, got r={r}")
    values = list(values)
    e = standard_idempotent(ring, r)
    f = complement(ring, e)
    top, bottom = make_matrix_ring(r, F), make_matrix_ring(n - r, F)

    u_top = find_witness(top, [block(ring, a, 0, r) for a in values], order)
    if u_top is None:
        raise HypothesisNotSatisfiedError(f"no witness in the upper corner {top}")
    u0 = block_sum(ring, u_top, bottom.zero, r)

    corrections = []
    for a in values:
        w_bar = relative_inverse(ring, e, ring.add(u0, ring.mul(ring.mul(e, a), e)))
        if w_bar is None:
            raise ArithmeticInconsistencyError("upper corner witness is not relatively invertible")
        fa_e = ring.mul(ring.mul(f, a), e)
        ea_f = ring.mul(ring.mul(e, a), f)
        faf = ring.mul(ring.mul(f, a), f)
        corrections.append(ring.sub(faf, ring.mul(ring.mul(fa_e, w_bar), ea_f)))

    v_bottom = find_witness(bottom, [block(ring, c, r, n - r) for c in corrections], order)
    if v_bottom is None:
        raise HypothesisNotSatisfiedError(f"no witness in the lower corner {bottom}")
    v0 = block_sum(ring, top.zero, v_bottom, r)
    u = ring.add(u0, v0)
    if not is_witness(ring, u, values):
        raise ArithmeticInconsistencyError("assembled corner witness does not verify")
    logger.debug(f"corner witness over {ring} from blocks of size {r} and {n - r}")
    return CornerWitness(u=u, u0=u0, v0=v0, r=r, corrections=corrections)


def additivity_witness(n1: int, n2: int, q: int, values: Sequence) -> CornerWitness:
    """
    Witness in M_{n1+n2} F_q assembled from M_{n1} F_q and M_{n2} F_q, so
    the sizes at which the property holds are closed under addition.
    """
    ring = make_matrix_ring(n1 + n2, build_ring(RingDescriptor.gf(q)))
    return corner_composition(ring, n1, values)
