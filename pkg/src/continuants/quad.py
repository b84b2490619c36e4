"""
Continuants and their opposites.

For a = (a(1), ..., a(k)), stored 0-based so that ``a[0]`` is a(1):

    P_{-1} = 1, P_0 = 0, P_i = P_{i-2} + a(i) P_{i-1}
    Q_{-1} = 0, Q_0 = 1, Q_i = Q_{i-2} + a(i) Q_{i-1}

and the opposite sequences use the same seeds with a(i) multiplied on the
right. Sequence lists hold indices -1..k at offsets 0..k+1; use ``p(i)`` etc.
"""

from dataclasses import dataclass, field
from typing import List, Sequence

from ..errors import RingMismatchError
from ..ring_core import Ring, RingElement


@dataclass
class ContinuantQuad:
    """The four continuant sequences of an input tuple"""
    ring: Ring
    a: List[RingElement]
    _P: List[RingElement] = field(repr=False)
    _Q: List[RingElement] = field(repr=False)
    _Pop: List[RingElement] = field(repr=False)
    _Qop: List[RingElement] = field(repr=False)

    @property
    def k(self) -> int:
        return len(self.a)

    def p(self, i: int) -> RingElement:
        return self._P[i + 1]

    def q(self, i: int) -> RingElement:
        return self._Q[i + 1]

    def pop(self, i: int) -> RingElement:
        return self._Pop[i + 1]

    def qop(self, i: int) -> RingElement:
        return self._Qop[i + 1]

    @property
    def P(self) -> List[RingElement]:
        """P_0..P_k"""
        return self._P[1:]

    @property
    def Q(self) -> List[RingElement]:
        return self._Q[1:]

    @property
    def Pop(self) -> List[RingElement]:
        return self._Pop[1:]

    @property
    def Qop(self) -> List[RingElement]:
        return self._Qop[1:]

    def to_dict(self) -> dict:
        return {
            "ring": str(self.ring),
            "k": self.k,
            "a": [x.to_json() for x in self.a],
            "P": [x.to_json() for x in self.P],
            "Q": [x.to_json() for x in self.Q],
            "Pop": [x.to_json() for x in self.Pop],
            "Qop": [x.to_json() for x in self.Qop],
        }


def _check_ring(ring: Ring, a: Sequence[RingElement]):
    for x in a:
        if x.ring != ring:
            raise RingMismatchError(f"Tuple entry {x} is not an element of {ring}")


def build_quad(a: Sequence[RingElement], ring: Ring = None) -> ContinuantQuad:
    """
    Populate P, Q, Pop and Qop for the tuple a.

    Args:
        a: the tuple a(1), ..., a(k); may be empty when ``ring`` is given
        ring: ring of the entries, inferred from a[0] when omitted

    Returns:
        ContinuantQuad with all four sequences up to index k
    """
    if ring is None:
        if not a:
            raise ValueError("ring is required for an empty tuple")
        ring = a[0].ring
    _check_ring(ring, a)
    one, zero = ring.element(ring.one), ring.element(ring.zero)
    P, Q, Pop, Qop = [one, zero], [zero, one], [one, zero], [zero, one]
    for x in a:
        P.append(P[-2] + x * P[-1])
        Q.append(Q[-2] + x * Q[-1])
        Pop.append(Pop[-2] + Pop[-1] * x)
        Qop.append(Qop[-2] + Qop[-1] * x)
    return ContinuantQuad(ring=ring, a=list(a), _P=P, _Q=Q, _Pop=Pop, _Qop=Qop)


def continuant_q(ring: Ring, a: Sequence[RingElement]) -> RingElement:
    """Q_k(a) alone; Q_0() = 1"""
    prev, cur = ring.element(ring.zero), ring.element(ring.one)
    for x in a:
        prev, cur = cur, prev + x * cur
    return cur


def continuant_p(ring: Ring, a: Sequence[RingElement]) -> RingElement:
    prev, cur = ring.element(ring.one), ring.element(ring.zero)
    for x in a:
        prev, cur = cur, prev + x * cur
    return cur


def continuant_q_raw(ring: Ring, values: Sequence) -> object:
    """Q_k over raw values, for search loops"""
    prev, cur = ring.zero, ring.one
    for x in values:
        prev, cur = cur, ring.add(prev, ring.mul(x, cur))
    return cur


def sign(ring: Ring, k: int) -> RingElement:
    """(-1)^k"""
    one = ring.element(ring.one)
    return one if k % 2 == 0 else -one
