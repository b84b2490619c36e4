"""
Generators of E(2,R), group words and projective classes.

Matrices are raw 4-tuples (a, b, c, d) for ((a, b), (c, d)) over a ring's
raw values. The generators are

    t_a = ((1, a), (0, 1))    j = ((0, 1), (1, 0))
    e_a = j t_a = ((0, 1), (1, a))    m_{r,s} = diag(r, s)

and a word multiplies its generator matrices in written order.
"""

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, List, Optional, Sequence, Tuple

from ..errors import PreconditionError, RingParseError
from ..ring_core import Ring
from ..ring_core.units import central_units, units

M2 = Tuple[Any, Any, Any, Any]


def m2_mul(ring: Ring, x: M2, y: M2) -> M2:
    add, mul = ring.add, ring.mul
    return (add(mul(x[0], y[0]), mul(x[1], y[2])), add(mul(x[0], y[1]), mul(x[1], y[3])),
            add(mul(x[2], y[0]), mul(x[3], y[2])), add(mul(x[2], y[1]), mul(x[3], y[3])))


def m2_identity(ring: Ring) -> M2:
    return (ring.one, ring.zero, ring.zero, ring.one)


def m2_scale(ring: Ring, lam, x: M2) -> M2:
    return tuple(ring.mul(lam, v) for v in x)


def m2_prod(ring: Ring, factors: Sequence[M2]) -> M2:
    result = m2_identity(ring)
    for f in factors:
        result = m2_mul(ring, result, f)
    return result


def e_matrix(ring: Ring, a) -> M2:
    return (ring.zero, ring.one, ring.one, a)


def t_matrix(ring: Ring, a) -> M2:
    return (ring.one, a, ring.zero, ring.one)


def j_matrix(ring: Ring) -> M2:
    return (ring.zero, ring.one, ring.one, ring.zero)


def m_matrix(ring: Ring, r, s) -> M2:
    return (r, ring.zero, ring.zero, s)


def m2_format(ring: Ring, x: M2):
    f = ring.format_value
    return [[f(x[0]), f(x[1])], [f(x[2]), f(x[3])]]


class GeneratorKind(Enum):
    T = "t"
    M = "m"
    J = "j"
    E = "e"


@dataclass(frozen=True)
class Generator:
    """One of t(a), m(r,s), j, e(a) with raw ring values as arguments"""
    kind: GeneratorKind
    args: Tuple[Any, ...] = ()

    @classmethod
    def e(cls, a) -> "Generator":
        return cls(GeneratorKind.E, (a,))

    @classmethod
    def t(cls, a) -> "Generator":
        return cls(GeneratorKind.T, (a,))

    @classmethod
    def j(cls) -> "Generator":
        return cls(GeneratorKind.J)

    @classmethod
    def m(cls, r, s) -> "Generator":
        return cls(GeneratorKind.M, (r, s))

    def matrix(self, ring: Ring) -> M2:
        if self.kind == GeneratorKind.E:
            return e_matrix(ring, self.args[0])
        if self.kind == GeneratorKind.T:
            return t_matrix(ring, self.args[0])
        if self.kind == GeneratorKind.J:
            return j_matrix(ring)
        r, s = self.args
        if not (ring.is_unit(r) and ring.is_unit(s)):
            raise PreconditionError("m(r,s) needs invertible r and s")
        return m_matrix(ring, r, s)

    def format(self, ring: Ring) -> str:
        if self.kind == GeneratorKind.J:
            return "j"
        return f"{self.kind.value}(" + ",".join(json.dumps(ring.format_value(v)) for v in self.args) + ")"


@dataclass(frozen=True)
class GroupWord:
    """A product of generators; ``normal`` marks words produced by normalize"""
    gens: Tuple[Generator, ...] = ()
    normal: bool = False

    def __len__(self) -> int:
        return len(self.gens)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.gens + other.gens)

    @classmethod
    def of_e(cls, values: Sequence) -> "GroupWord":
        """e_{v0} e_{v1} ... in written order"""
        return cls(tuple(Generator.e(v) for v in values))

    @classmethod
    def from_tuple(cls, a: Sequence) -> "GroupWord":
        """S(a) = e_{a(k)} ... e_{a(1)} for a = (a(1), ..., a(k))"""
        return cls.of_e(list(reversed(list(a))))

    def e_args(self) -> List[Any]:
        return [g.args[0] for g in self.gens if g.kind == GeneratorKind.E]

    def e_count(self) -> int:
        return sum(1 for g in self.gens if g.kind == GeneratorKind.E)

    def format(self, ring: Ring) -> str:
        return " ".join(g.format(ring) for g in self.gens) if self.gens else "1"


def word_matrix(ring: Ring, word: GroupWord) -> M2:
    return m2_prod(ring, [g.matrix(ring) for g in word.gens])


def invert_word(ring: Ring, word: GroupWord) -> GroupWord:
    """Inverse word: e_a^{-1} = e_0 e_{-a} e_0, t_a^{-1} = t_{-a}, j^{-1} = j"""
    out: List[Generator] = []
    for g in reversed(word.gens):
        if g.kind == GeneratorKind.E:
            out += [Generator.e(ring.zero), Generator.e(ring.neg(g.args[0])), Generator.e(ring.zero)]
        elif g.kind == GeneratorKind.T:
            out.append(Generator.t(ring.neg(g.args[0])))
        elif g.kind == GeneratorKind.J:
            out.append(g)
        else:
            r, s = g.args
            r_inv, s_inv = ring.try_invert(r), ring.try_invert(s)
            if r_inv is None or s_inv is None:
                raise PreconditionError("m(r,s) needs invertible r and s")
            out.append(Generator.m(r_inv, s_inv))
    return GroupWord(tuple(out))


class ProjectiveCanon:
    """Canonical representative of a matrix modulo central units: min over lambda*M"""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.centre = central_units(ring)

    def __call__(self, x: M2) -> M2:
        if len(self.centre) == 1:
            return x
        return min(m2_scale(self.ring, lam, x) for lam in self.centre)


_canons = {}


def projective_canon(ring: Ring) -> ProjectiveCanon:
    if ring.descriptor not in _canons:
        _canons[ring.descriptor] = ProjectiveCanon(ring)
    return _canons[ring.descriptor]


@dataclass(frozen=True)
class PE2Element:
    """Projective class of an invertible 2x2 matrix, stored by canonical representative"""
    ring: Ring
    matrix: M2

    @classmethod
    def of(cls, ring: Ring, x: M2) -> "PE2Element":
        return cls(ring, projective_canon(ring)(x))

    def __mul__(self, other: "PE2Element") -> "PE2Element":
        return PE2Element.of(self.ring, m2_mul(self.ring, self.matrix, other.matrix))

    def to_json(self):
        return m2_format(self.ring, self.matrix)


def as_matrix(ring: Ring, word: GroupWord) -> PE2Element:
    """Projective class of the product of the word's generator matrices"""
    return PE2Element.of(ring, word_matrix(ring, word))


def _split_generators(text: str) -> List[str]:
    tokens, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and (ch.isspace() or ch == "*"):
            if cur:
                tokens.append(cur)
            cur = ""
            continue
        cur += ch
    if depth != 0:
        raise RingParseError(f"Unbalanced parentheses in word {text!r}")
    if cur:
        tokens.append(cur)
    return tokens


def parse_word(ring: Ring, text: str) -> GroupWord:
    """
    Parse generators like ``e(1) e(0) m(1,2) t(2) j``; arguments are JSON
    element literals so matrix entries read ``e([[1,0],[0,1]])``.
    """
    gens = []
    for token in _split_generators(text.strip()):
        if token == "j":
            gens.append(Generator.j())
            continue
        if len(token) < 3 or token[1] != "(" or token[-1] != ")" or token[0] not in "etm":
            raise RingParseError(f"Unknown generator {token!r}")
        try:
            args = json.loads("[" + token[2:-1] + "]")
        except json.JSONDecodeError as e:
            raise RingParseError(f"Bad generator arguments in {token!r}: {e}")
        values = [ring.parse_value(a) for a in args]
        kind = GeneratorKind(token[0])
        expected = 2 if kind == GeneratorKind.M else 1
        if len(values) != expected:
            raise RingParseError(f"{token[0]} takes {expected} argument(s)")
        gens.append(Generator(kind, tuple(values)))
    return GroupWord(tuple(gens))


def random_word(ring: Ring, rng, length: int) -> GroupWord:
    """A word of ``length`` generators drawn uniformly from the four kinds"""
    unit_values = units(ring)
    gens = []
    for _ in range(length):
        kind = int(rng.integers(0, 4))
        if kind == 0:
            gens.append(Generator.e(ring.random_value(rng)))
        elif kind == 1:
            gens.append(Generator.t(ring.random_value(rng)))
        elif kind == 2:
            gens.append(Generator.j())
        else:
            r = unit_values[int(rng.integers(0, len(unit_values)))]
            s = unit_values[int(rng.integers(0, len(unit_values)))]
            gens.append(Generator.m(r, s))
    return GroupWord(tuple(gens))
