"""
Monomial structure of Q_k over the free ring.

Every monomial of Q_k(a1, ..., ak) is a_{i1} a_{i2} ... a_{im} with
k >= i1 > i2 > ... > im, i1 of the same parity as k, every gap odd and the
last index odd; the empty word occurs exactly when k is even. Each such word
has coefficient 1, so Q_k has f(k) monomials with f the Fibonacci numbers
f(0) = f(1) = 1.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

from ..ring_core import FreeRing, RingDescriptor, RingElement, build_ring
from .quad import ContinuantQuad, build_quad, continuant_q

IndexWord = Tuple[int, ...]


@lru_cache(maxsize=None)
def fibonacci(k: int) -> int:
    """f(0) = f(1) = 1, f(k) = f(k-1) + f(k-2)"""
    a, b = 1, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def free_ring_for(k: int, prefix: str = "a") -> FreeRing:
    """Z<a1, ..., ak>; k = 0 gets a single unused variable"""
    names = [f"{prefix}{i}" for i in range(1, max(k, 1) + 1)]
    return build_ring(RingDescriptor.free(*names))


def free_tuple(k: int, prefix: str = "a") -> List[RingElement]:
    ring = free_ring_for(k, prefix)
    return [ring.element(ring.variable(f"{prefix}{i}")) for i in range(1, k + 1)]


def free_quad(k: int) -> ContinuantQuad:
    return build_quad(free_tuple(k), free_ring_for(k))


def word_model(k: int) -> List[IndexWord]:
    """
    All index words of Q_k, 1-based, in length-lexicographic order.

    Args:
        k: continuant length, k >= 0

    Returns:
        list of descending index tuples; () is the empty word
    """
    words: List[IndexWord] = []

    def extend(word: IndexWord):
        last = word[-1]
        if last % 2 == 1:
            words.append(word)
        for nxt in range(last - 1, 0, -2):
            extend(word + (nxt,))

    if k % 2 == 0:
        words.append(())
    for first in range(k, 0, -2):
        extend((first,))
    return sorted(words, key=lambda w: (len(w), w))


def monomial_count(k: int) -> int:
    return len(free_quad(k).q(k).value)


@dataclass
class WordModelCheck:
    k: int
    model_size: int
    monomial_count: int
    fibonacci: int
    coefficients_one: bool
    matches: bool


def check_word_model(k: int) -> WordModelCheck:
    """Compare word_model(k) with the monomials of the free-ring Q_k as multisets"""
    q_k = free_quad(k).q(k)
    terms = q_k.value
    from_ring = Counter(tuple(i + 1 for i in w) for w, _ in terms)
    from_model = Counter(word_model(k))
    coefficients_one = all(c == 1 for _, c in terms)
    return WordModelCheck(
        k=k,
        model_size=sum(from_model.values()),
        monomial_count=len(terms),
        fibonacci=fibonacci(k),
        coefficients_one=coefficients_one,
        matches=from_ring == from_model and coefficients_one,
    )


@dataclass
class SplitCheck:
    n: int
    m: int
    holds: bool
    disjoint: bool


def splitting_identity(b: Sequence[RingElement], m: int) -> SplitCheck:
    """
    Q_N(b) = Qop_m(b(N), ..., b(N+1-m)) Q_{N-m}(b(1..N-m))
             + Qop_{m-1}(b(N), ..., b(N+2-m)) Q_{N-m-1}(b(1..N-m-1))

    Qop_m of the reversed arguments is Q_m of b(N+1-m..N) in natural order.
    Over a free ring the two summands must also share no monomial.
    """
    n = len(b)
    if not 0 < m < n:
        raise ValueError(f"splitting needs 0 < m < N, got m={m}, N={n}")
    ring = b[0].ring
    left = continuant_q(ring, b[n - m:]) * continuant_q(ring, b[:n - m])
    right = continuant_q(ring, b[n - m + 1:]) * continuant_q(ring, b[:n - m - 1])
    holds = continuant_q(ring, b) == left + right
    disjoint = True
    if isinstance(ring, FreeRing):
        disjoint = not ({w for w, _ in left.value} & {w for w, _ in right.value})
    return SplitCheck(n=n, m=m, holds=holds, disjoint=disjoint)
