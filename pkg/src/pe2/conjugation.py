"""
Shortening a word by conjugation with a product of two e's.
"""

from dataclasses import dataclass

from loguru import logger

from ..errors import ArithmeticInconsistencyError, PreconditionError
from ..ring_core import Ring
from .generators import GroupWord, as_matrix, invert_word
from .normal_form import normalize, require_normal
from .ordering import OrdValue, ord_of_word


@dataclass
class ConjugationResult:
    word: GroupWord
    conjugator: GroupWord
    conjugate: GroupWord
    ord_before: OrdValue
    ord_after: OrdValue

    def to_dict(self, ring: Ring) -> dict:
        return {"word": self.word.format(ring), "conjugator": self.conjugator.format(ring),
                "conjugate": self.conjugate.format(ring), "ord_before": str(self.ord_before),
                "ord_after": str(self.ord_after)}


def conjugate_to_shorter(ring: Ring, word: GroupWord) -> ConjugationResult:
    """
    Conjugate a normal word of shape k+1/2 or k- by h = its first two e's.

    The conjugate h^{-1} g h moves h past the multiplier to the right end,
    where it merges with the zero argument. For shape k+1/2 the result has
    length at most k; for shape k- it is strictly shorter.

    Raises:
        PreconditionError: for other shapes or fewer than three e's
        ArithmeticInconsistencyError: if the promised drop does not happen
    """
    require_normal(ring, word)
    args = word.e_args()
    if len(args) < 3:
        raise PreconditionError("conjugation needs at least three e's")
    first_zero, last_zero = args[0] == ring.zero, args[-1] == ring.zero
    if first_zero == last_zero:
        raise PreconditionError("word must have exactly one zero end")

    h = GroupWord(word.gens[:2])
    rest = GroupWord(word.gens[2:])
    conjugate = normalize(ring, rest * h)
    if as_matrix(ring, conjugate) != as_matrix(ring, invert_word(ring, h) * word * h):
        raise ArithmeticInconsistencyError("conjugate does not match h^-1 g h")

    before, after = ord_of_word(ring, word), ord_of_word(ring, conjugate)
    bound = OrdValue.integer(len(args) - 2) if first_zero else before.predecessor()
    if after > bound:
        raise ArithmeticInconsistencyError(f"conjugate has length {after}, expected at most {bound}")
    logger.debug(f"conjugation over {ring}: {before} -> {after}")
    return ConjugationResult(word, h, conjugate, before, after)
