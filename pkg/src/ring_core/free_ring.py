"""
The free ring Z<x_1, ..., x_m> on named non-commuting variables.

A value is a tuple of (word, coefficient) pairs sorted length-lexicographically,
where a word is a tuple of variable indices. Each word appears at most once and
coefficients are nonzero Python ints.
"""

import re
from collections import defaultdict
from typing import Dict, List, Sequence, Tuple

from ..errors import InfiniteRingError, RingParseError, UnsupportedOperationError
from .descriptors import RingDescriptor
from .rings import Ring

Word = Tuple[int, ...]
FreeValue = Tuple[Tuple[Word, int], ...]


def word_key(word: Word):
    return len(word), word


def _normalize(terms: Dict[Word, int]) -> FreeValue:
    return tuple(sorted(((w, c) for w, c in terms.items() if c), key=lambda t: word_key(t[0])))


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


class FreeRing(Ring):
    """Integer polynomials in non-commuting variables"""

    def __init__(self, variables: Sequence[str]):
        self.variables = tuple(variables)
        self.descriptor = RingDescriptor.free(*self.variables)
        self._index = {name: i for i, name in enumerate(self.variables)}
        self.zero: FreeValue = ()
        self.one: FreeValue = (((), 1),)

    def variable(self, name: str) -> FreeValue:
        if name not in self._index:
            raise RingParseError(f"{name!r} is not a variable of {self}")
        return (((self._index[name],), 1),)

    def monomial(self, word: Sequence[int], coeff: int = 1) -> FreeValue:
        return ((tuple(word), coeff),) if coeff else ()

    def add(self, x, y):
        terms: Dict[Word, int] = defaultdict(int)
        for w, c in x:
            terms[w] += c
        for w, c in y:
            terms[w] += c
        return _normalize(terms)

    def neg(self, x):
        return tuple((w, -c) for w, c in x)

    def mul(self, x, y):
        if not x or not y:
            return ()
        terms: Dict[Word, int] = defaultdict(int)
        for w1, c1 in x:
            for w2, c2 in y:
                terms[w1 + w2] += c1 * c2
        return _normalize(terms)

    def from_int(self, n: int):
        return self.monomial((), n)

    def try_invert(self, x):
        if len(x) == 1 and x[0][0] == () and x[0][1] in (1, -1):
            return x
        if len(x) == 1 and x[0][0] == ():
            return None
        raise UnsupportedOperationError("only the constants 1 and -1 are invertible in a free ring")

    def is_unit(self, x) -> bool:
        return len(x) == 1 and x[0][0] == () and x[0][1] in (1, -1)

    def elements(self):
        raise InfiniteRingError(f"{self} is infinite")

    def random_value(self, rng, max_terms: int = 4, max_length: int = 3, max_coeff: int = 3):
        terms: Dict[Word, int] = defaultdict(int)
        for _ in range(int(rng.integers(1, max_terms + 1))):
            length = int(rng.integers(0, max_length + 1))
            word = tuple(int(rng.integers(0, len(self.variables))) for _ in range(length))
            coeff = int(rng.integers(1, max_coeff + 1)) * (1 if rng.integers(0, 2) else -1)
            terms[word] += coeff
        return _normalize(terms)

    @property
    def is_commutative(self):
        return len(self.variables) == 1

    def words(self, x) -> List[Tuple[Tuple[str, ...], int]]:
        """Monomials as (variable-name word, coefficient), length-lexicographic"""
        return [(tuple(self.variables[i] for i in w), c) for w, c in x]

    def format_word(self, word: Word) -> str:
        return "*".join(self.variables[i] for i in word) if word else "1"

    def format_value(self, x) -> str:
        if not x:
            return "0"
        parts = []
        for w, c in x:
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not w:
                body = str(mag)
            elif mag == 1:
                body = self.format_word(w)
            else:
                body = f"{mag}*{self.format_word(w)}"
            parts.append((sign, body))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def parse_value(self, obj):
        if isinstance(obj, int) and not isinstance(obj, bool):
            return self.from_int(obj)
        if not isinstance(obj, str):
            raise RingParseError(f"Cannot parse {obj!r} as an element of {self}")
        text = obj.strip()
        if not text:
            raise RingParseError("empty polynomial")
        terms: Dict[Word, int] = defaultdict(int)
        pos = 0
        for match in _TERM.finditer(text):
            if match.start() != pos:
                raise RingParseError(f"Cannot parse {text!r}")
            pos = match.end()
            sign = -1 if match.group(1) == "-" else 1
            coeff, word = 1, []
            for factor in match.group(2).split("*"):
                factor = factor.strip()
                if not factor:
                    raise RingParseError(f"Empty factor in {text!r}")
                if factor.isdigit():
                    coeff *= int(factor)
                elif factor in self._index:
                    word.append(self._index[factor])
                else:
                    raise RingParseError(f"Unknown variable {factor!r} in {text!r}")
            terms[tuple(word)] += sign * coeff
        if pos != len(text):
            raise RingParseError(f"Cannot parse {text!r}")
        return _normalize(terms)


def free_words(element) -> List[Tuple[Tuple[str, ...], int]]:
    """
    Length-lexicographic (word, coefficient) list of a free-ring element.

    Raises:
        UnsupportedOperationError: if the element does not live in a free ring
    """
    if not isinstance(element.ring, FreeRing):
        raise UnsupportedOperationError(f"free_words needs a free-ring element, got one of {element.ring}")
    return element.ring.words(element.value)
