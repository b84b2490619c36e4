"""
Transfer matrices and the invertibility transfer between Q_k and Q_k^op.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence

from loguru import logger

from ..errors import ArithmeticInconsistencyError, PreconditionError, UnsupportedOperationError
from ..ring_core import MatrixRing, Ring, RingElement
from .quad import ContinuantQuad, build_quad, continuant_q, sign


@dataclass(frozen=True)
class Mat2:
    """2x2 matrix ((a, b), (c, d)) over a ring"""
    a: RingElement
    b: RingElement
    c: RingElement
    d: RingElement

    @classmethod
    def identity(cls, ring: Ring) -> "Mat2":
        one, zero = ring.element(ring.one), ring.element(ring.zero)
        return cls(one, zero, zero, one)

    @classmethod
    def of(cls, ring: Ring, a, b, c, d) -> "Mat2":
        """Entries given as RingElements or integers"""
        def conv(x):
            return x if isinstance(x, RingElement) else ring.element(ring.from_int(x))
        return cls(conv(a), conv(b), conv(c), conv(d))

    @property
    def ring(self) -> Ring:
        return self.a.ring

    def __mul__(self, other: "Mat2") -> "Mat2":
        return Mat2(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

    def scale(self, s: RingElement) -> "Mat2":
        """s times every entry, s on the left"""
        return Mat2(s * self.a, s * self.b, s * self.c, s * self.d)

    def __neg__(self) -> "Mat2":
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def rows(self) -> List[List[RingElement]]:
        return [[self.a, self.b], [self.c, self.d]]

    def to_json(self):
        return [[x.to_json() for x in row] for row in self.rows()]


def factor_matrix(x: RingElement) -> Mat2:
    """((0, 1), (1, x))"""
    ring = x.ring
    return Mat2(ring.element(ring.zero), ring.element(ring.one), ring.element(ring.one), x)


def transfer_matrix(quad: ContinuantQuad, k: Optional[int] = None) -> Mat2:
    """((P_{k-1}, Q_{k-1}), (P_k, Q_k))"""
    k = quad.k if k is None else k
    return Mat2(quad.p(k - 1), quad.q(k - 1), quad.p(k), quad.q(k))


def opposite_transfer_matrix(quad: ContinuantQuad, k: Optional[int] = None) -> Mat2:
    """((Pop_{k-1}, Pop_k), (Qop_{k-1}, Qop_k))"""
    k = quad.k if k is None else k
    return Mat2(quad.pop(k - 1), quad.pop(k), quad.qop(k - 1), quad.qop(k))


def factorized_transfer(ring: Ring, a: Sequence[RingElement]) -> Mat2:
    """Product of the factor matrices in descending order, a(k) leftmost"""
    result = Mat2.identity(ring)
    for x in a:
        result = factor_matrix(x) * result
    return result


def invert_transfer(quad: ContinuantQuad) -> Mat2:
    """
    Closed-form inverse (-1)^k ((Qop_k, -Qop_{k-1}), (-Pop_k, Pop_{k-1})).

    Raises:
        ArithmeticInconsistencyError: if it is not a two-sided inverse
    """
    k = quad.k
    inv = Mat2(quad.qop(k), -quad.qop(k - 1), -quad.pop(k), quad.pop(k - 1)).scale(sign(quad.ring, k))
    forward = transfer_matrix(quad)
    identity = Mat2.identity(quad.ring)
    if forward * inv != identity or inv * forward != identity:
        raise ArithmeticInconsistencyError(f"transfer inverse failed for k={k} over {quad.ring}")
    return inv


def opposite_transfer_relation(quad: ContinuantQuad) -> bool:
    """J' P_k^{-1} J'^{-1} == (-1)^k P_k^op with J' = ((0, -1), (1, 0))"""
    ring = quad.ring
    j_prime = Mat2.of(ring, 0, -1, 1, 0)
    j_prime_inv = Mat2.of(ring, 0, 1, -1, 0)
    lhs = j_prime * invert_transfer(quad) * j_prime_inv
    return lhs == opposite_transfer_matrix(quad).scale(sign(ring, quad.k))


@dataclass
class TransferResult:
    """Outcome of the Q_k / Q_k^op invertibility transfer for one tuple"""
    q_invertible: bool
    qop_invertible: bool
    closed_form_inverse: Optional[RingElement]
    holds: bool

    @property
    def both_invertible(self) -> bool:
        return self.q_invertible and self.qop_invertible


def op_transfer_invertibility(a: Sequence[RingElement], ring: Ring = None) -> TransferResult:
    """
    Q_k invertible implies Q_k^op invertible with inverse
    (-1)^k (P_{k-1} - Q_{k-1} Q_k^{-1} P_k); in a finite ring the converse
    direction also holds, so a non-invertible Q_k forces a non-invertible Q_k^op.
    """
    quad = build_quad(a, ring)
    k = quad.k
    q_inv = quad.q(k).try_invert()
    qop_inv = quad.qop(k).try_invert()
    if q_inv is None:
        return TransferResult(False, qop_inv is not None, None, qop_inv is None)
    closed = sign(quad.ring, k) * (quad.p(k - 1) - quad.q(k - 1) * q_inv * quad.p(k))
    holds = qop_inv is not None and closed == qop_inv
    if not holds:
        logger.debug(f"Invertibility transfer fails for a={[str(x) for x in a]}")
    return TransferResult(True, qop_inv is not None, closed, holds)


@dataclass
class ZeroTransferResult:
    q_zero: bool
    qop_zero: bool
    flanks_invertible: Optional[bool]
    holds: bool


def zero_transfer(a: Sequence[RingElement], ring: Ring = None) -> ZeroTransferResult:
    """
    Q_m = 0 iff Q_m^op = 0 and, when they vanish, Q_{m-1} and P_m are invertible.
    """
    quad = build_quad(a, ring)
    m = quad.k
    if m < 1:
        raise PreconditionError("zero transfer needs m >= 1")
    q_zero, qop_zero = quad.q(m).is_zero, quad.qop(m).is_zero
    flanks = None
    if q_zero:
        flanks = quad.q(m - 1).is_unit and quad.p(m).is_unit
    holds = q_zero == qop_zero and (flanks is None or flanks)
    return ZeroTransferResult(q_zero, qop_zero, flanks, holds)


def det_equality(a: Sequence[RingElement], ring: Ring = None) -> bool:
    """det Q_k(a) == det Q_k^op(a) for matrices over a commutative ring"""
    quad = build_quad(a, ring)
    mring = quad.ring
    if not isinstance(mring, MatrixRing) or not mring.inner.is_commutative:
        raise UnsupportedOperationError(f"det_equality needs matrices over a commutative ring, got {mring}")
    k = quad.k
    return mring.determinant(quad.q(k).value) == mring.determinant(quad.qop(k).value)


def shifted_p_identity(a: Sequence[RingElement], ring: Ring = None) -> bool:
    """P_i(a(1..i)) == Q_{i-1}(a(2..i)) for every 1 <= i <= k"""
    quad = build_quad(a, ring)
    r = quad.ring
    return all(quad.p(i) == continuant_q(r, quad.a[1:i]) for i in range(1, quad.k + 1))


def solve_prefix_equations(c: Sequence[RingElement]) -> List[RingElement]:
    """
    Find x with Q_i(x(1..i)) = c(i) for every i.

    x(1) = c(1) and x(i+1) = (c(i+1) - c(i-1)) c(i)^{-1} with c(0) = 1.

    Raises:
        PreconditionError: if some c(i) before the last is not invertible
    """
    if not c:
        return []
    ring = c[0].ring
    chain = [ring.element(ring.one)] + list(c)
    x = [c[0]]
    for i in range(1, len(c)):
        inv = chain[i].try_invert()
        if inv is None:
            raise PreconditionError(f"c({i}) = {chain[i]} is not invertible")
        x.append((chain[i + 1] - chain[i - 1]) * inv)
    quad = build_quad(x, ring)
    for i, target in enumerate(c, start=1):
        if quad.q(i) != target:
            raise ArithmeticInconsistencyError(f"prefix equation {i} not satisfied")
    return x


@dataclass
class GlPrimeObservation:
    k: int
    quotient: Optional[RingElement]
    in_commutator_subgroup: Optional[bool]
    experimental: bool


def gl_prime_remark(a: Sequence[RingElement], commutator_subgroup=None,
                    ring: Ring = None) -> GlPrimeObservation:
    """
    Record Q_k^{-1} Q_k^op when Q_k is invertible, and whether it lies in the
    given commutator subgroup of the unit group. Reported only; k > 3 is
    flagged experimental.

    Q_k^{-1} Q_k^op = Q_k^{-1} (Q_k (Q_k^op)^{-1})^{-1} Q_k is a conjugate of
    the inverse of Q_k (Q_k^op)^{-1}, so either form gives the same membership.
    """
    quad = build_quad(a, ring)
    k = quad.k
    q_inv = quad.q(k).try_invert()
    if q_inv is None:
        return GlPrimeObservation(k, None, None, k > 3)
    quotient = q_inv * quad.qop(k)
    member = None
    if commutator_subgroup is not None:
        member = quotient.value in commutator_subgroup
    return GlPrimeObservation(k, quotient, member, k > 3)
