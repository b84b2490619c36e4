"""
Writing multipliers m_{r,s} as products of e's.
"""

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from loguru import logger

from ..continuants import build_quad
from ..errors import (ArithmeticInconsistencyError, HypothesisNotSatisfiedError,
                      PreconditionError)
from ..ring_core import Ring
from ..ring_core.units import central_units
from .generators import (Generator, GroupWord, as_matrix, invert_word, m2_format, m_matrix,
                         word_matrix, PE2Element)


@dataclass
class MultiplierCompletion:
    """A tuple a(1..k) with S(a) = m_{r,s}; raw ring values"""
    a: List[Any]
    r: Any
    s: Any

    def word(self) -> GroupWord:
        return GroupWord.from_tuple(self.a)

    def to_dict(self, ring: Ring) -> dict:
        f = ring.format_value
        return {"a": [f(x) for x in self.a], "r": f(self.r), "s": f(self.s)}


def complete_to_multiplier(ring: Ring, prefix: Sequence) -> MultiplierCompletion:
    """
    Extend a(1..k-2) by the two entries that make S(a) diagonal.

    With Q_{k-2} invertible, a(k-1) = -Q_{k-3} Q_{k-2}^{-1} kills Q_{k-1};
    then x = P_{k-1} is invertible and a(k) = -P_{k-2} x^{-1}, leaving
    S(a) = diag(P_{k-1}, Q_{k-2}).

    Raises:
        PreconditionError: if the prefix is empty or Q_{k-2} is not invertible
        ArithmeticInconsistencyError: if the completed word is not diag(r, s)
    """
    if not prefix:
        raise PreconditionError("complete_to_multiplier needs k >= 3")
    quad = build_quad([ring.element(v) for v in prefix], ring)
    n = quad.k
    q_inv = quad.q(n).try_invert()
    if q_inv is None:
        raise PreconditionError(f"Q_{n} of the prefix is not invertible")
    a_next = -(quad.q(n - 1) * q_inv)
    x = quad.p(n - 1) + a_next * quad.p(n)
    x_inv = x.try_invert()
    if x_inv is None or not (quad.q(n - 1) + a_next * quad.q(n)).is_zero:
        raise ArithmeticInconsistencyError("P_{k-1} is not invertible after completion")
    a_last = -(quad.p(n) * x_inv)

    result = MultiplierCompletion(a=list(prefix) + [a_next.value, a_last.value], r=x.value,
                                  s=quad.q(n).value)
    if word_matrix(ring, result.word()) != m_matrix(ring, result.r, result.s):
        raise ArithmeticInconsistencyError(f"completed word is not diagonal: {result.to_dict(ring)}")
    return result


@dataclass
class StableRangeReduction:
    """e_{a2} e_{a1} rewritten as (e_{a5} e_{a4} e_{a3})^{-1} m_{r,s}"""
    a1: Any
    a2: Any
    c: Any
    completion: MultiplierCompletion

    def to_dict(self, ring: Ring) -> dict:
        f = ring.format_value
        return {"a1": f(self.a1), "a2": f(self.a2), "c": f(self.c),
                "completion": self.completion.to_dict(ring)}


def stable_range_reduction(ring: Ring, a1, a2) -> StableRangeReduction:
    """
    Choose a(3) = c with Q_3(a1, a2, c) = a1 + c(1 + a2 a1) invertible and
    complete to a 5-term multiplier, so a length-2 word becomes a length-3
    word times a multiplier.

    Raises:
        HypothesisNotSatisfiedError: if no c makes Q_3 invertible
    """
    ring.require_finite()
    q2 = ring.add(ring.one, ring.mul(a2, a1))
    c = next((c for c in ring.elements() if ring.is_unit(ring.add(a1, ring.mul(c, q2)))), None)
    if c is None:
        raise HypothesisNotSatisfiedError(
            f"no c makes a1 + c(1 + a2 a1) invertible for a1={ring.format_value(a1)}, "
            f"a2={ring.format_value(a2)}")
    completion = complete_to_multiplier(ring, [a1, a2, c])
    a3, a4, a5 = completion.a[2:]
    head = GroupWord.of_e([a5, a4, a3])
    rhs = invert_word(ring, head) * GroupWord((Generator.m(completion.r, completion.s),))
    if word_matrix(ring, rhs) != word_matrix(ring, GroupWord.of_e([a2, a1])):
        raise ArithmeticInconsistencyError("stable range reduction does not reproduce e_a2 e_a1")
    return StableRangeReduction(a1, a2, c, completion)


def diagonal_word(ring: Ring, z) -> GroupWord:
    """e_{z^{-1}-1} e_1 e_{z-1} e_{-z^{-1}}, which equals diag(z, z^{-1})"""
    z_inv = ring.try_invert(z)
    if z_inv is None:
        raise PreconditionError(f"{ring.format_value(z)} is not a unit")
    one = ring.one
    return GroupWord.of_e([ring.sub(z_inv, one), one, ring.sub(z, one), ring.neg(z_inv)])


def commutator_word(ring: Ring, x, y) -> GroupWord:
    """Eight e's equal to diag(x^{-1} y^{-1} x y, 1)"""
    x_inv, y_inv = ring.try_invert(x), ring.try_invert(y)
    if x_inv is None or y_inv is None:
        raise PreconditionError("commutator entries must be units")
    conj = ring.mul(ring.mul(x_inv, y_inv), x)
    b = ring.mul(x_inv, ring.sub(y_inv, ring.one))
    return diagonal_word(ring, conj) * complete_to_multiplier(ring, [x, b]).word()


@dataclass
class MultiplierWord:
    word: GroupWord
    r: Any
    s: Any
    lam: Optional[Any]

    @property
    def e_count(self) -> int:
        return self.word.e_count()


def multiplier_word(ring: Ring, r, s, commutators: Sequence[Tuple[Any, Any]],
                    lam=None) -> MultiplierWord:
    """
    Express m_{r,s} projectively as a word in e's.

    Args:
        ring: the coefficient ring
        r, s: units with rs = [x_1,y_1] ... [x_k,y_k] lam^2
        commutators: the pairs (x_i, y_i), [x,y] = x^{-1} y^{-1} x y
        lam: optional central unit

    Returns:
        MultiplierWord: 8k+4 e's, or 8k+8 when lam is given

    Raises:
        HypothesisNotSatisfiedError: if rs differs from the commutator product times lam^2
    """
    if not (ring.is_unit(r) and ring.is_unit(s)):
        raise PreconditionError("r and s must be units")
    if lam is not None and lam not in central_units(ring):
        raise PreconditionError(f"{ring.format_value(lam)} is not a central unit")

    word = GroupWord()
    product = ring.one
    for x, y in commutators:
        word = word * commutator_word(ring, x, y)
        conj = ring.mul(ring.mul(ring.try_invert(x), ring.try_invert(y)), x)
        product = ring.mul(product, ring.mul(conj, y))
    if lam is not None:
        product = ring.mul(product, ring.mul(lam, lam))
        word = word * diagonal_word(ring, lam)
    if product != ring.mul(r, s):
        raise HypothesisNotSatisfiedError("rs is not the given product of commutators and lam^2")
    word = word * diagonal_word(ring, ring.try_invert(s))

    if as_matrix(ring, word) != PE2Element.of(ring, m_matrix(ring, r, s)):
        raise ArithmeticInconsistencyError(
            f"multiplier word evaluates to {m2_format(ring, word_matrix(ring, word))}")
    logger.debug(f"multiplier word over {ring}: {word.e_count()} e's for {len(commutators)} commutators")
    return MultiplierWord(word, r, s, lam)
