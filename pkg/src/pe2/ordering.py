"""
The length function on PE(2,R).

Lengths live on the chain 0 < 1/2 < 1- < 1 < 3/2 < 2- < 2 < 5/2 < ...,
encoded as integer ranks: n -> 3n, n- -> 3n-1, n-1/2 -> 3n-2.
"""

import re
from collections import Counter
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Dict, List, Optional, Tuple

from loguru import logger

from ..config import get_settings
from ..errors import GroupTooLargeError, RingParseError
from ..ring_core import Ring
from ..ring_core.units import units
from .generators import M2, GroupWord, e_matrix, m2_mul, m_matrix, projective_canon
from .normal_form import require_normal


@total_ordering
@dataclass(frozen=True)
class OrdValue:
    """A point of the length chain, compared by rank"""
    rank: int

    @classmethod
    def integer(cls, n: int) -> "OrdValue":
        return cls(3 * n)

    @classmethod
    def minus(cls, n: int) -> "OrdValue":
        """n- (just below n)"""
        return cls(3 * n - 1)

    @classmethod
    def half_below(cls, n: int) -> "OrdValue":
        """n - 1/2"""
        return cls(3 * n - 2)

    def successor(self) -> "OrdValue":
        return OrdValue(self.rank + 1)

    def predecessor(self) -> "OrdValue":
        if self.rank == 0:
            raise ValueError("0 has no predecessor")
        return OrdValue(self.rank - 1)

    def __lt__(self, other: "OrdValue") -> bool:
        return self.rank < other.rank

    def __str__(self) -> str:
        n, rem = divmod(self.rank + 2, 3)
        if rem == 2:
            return str(n)
        if rem == 1:
            return f"{n}-"
        return f"{2 * n - 1}/2"

    @classmethod
    def parse(cls, text: str) -> "OrdValue":
        text = text.strip()
        if re.fullmatch(r"\d+", text):
            return cls.integer(int(text))
        if re.fullmatch(r"\d+-", text):
            return cls.minus(int(text[:-1]))
        match = re.fullmatch(r"(\d+)/2", text)
        if match and int(match.group(1)) % 2 == 1:
            return cls.half_below((int(match.group(1)) + 1) // 2)
        raise RingParseError(f"Not a length value: {text!r}")


def shape_ord(k: int, first_zero: bool, last_zero: bool) -> OrdValue:
    """
    Length of a normal word with k e's; ``first_zero`` refers to a(k), the
    leftmost argument, and ``last_zero`` to a(1), the rightmost.
    """
    if k == 0:
        return OrdValue(0)
    if k == 1:
        return OrdValue.minus(1) if first_zero else OrdValue.integer(1)
    if first_zero and last_zero:
        return OrdValue.integer(k - 2)
    if first_zero:
        return OrdValue.half_below(k - 1)
    if last_zero:
        return OrdValue.minus(k)
    return OrdValue.integer(k)


def ord_of_word(ring: Ring, word: GroupWord) -> OrdValue:
    """Length contributed by one normal-form representation"""
    require_normal(ring, word)
    args = word.e_args()
    if not args:
        return OrdValue(0)
    return shape_ord(len(args), args[0] == ring.zero, args[-1] == ring.zero)


@dataclass
class OrdTable:
    """Minimal length of every element of PE(2,R), found by exhaustion"""
    ring: Ring
    ranks: Dict[M2, int] = field(default_factory=dict)
    states: int = 0

    @property
    def order(self) -> int:
        return len(self.ranks)

    def ord(self, x: M2) -> OrdValue:
        return OrdValue(self.ranks[projective_canon(self.ring)(x)])

    @property
    def max_ord(self) -> OrdValue:
        return OrdValue(max(self.ranks.values()))

    def histogram(self) -> Dict[str, int]:
        counts = Counter(self.ranks.values())
        return {str(OrdValue(r)): counts[r] for r in sorted(counts)}

    def elements_with(self, value: OrdValue) -> List[M2]:
        return [x for x, r in self.ranks.items() if r == value.rank]


_tables: Dict = {}


def build_ord_table(ring: Ring, limit: Optional[int] = None) -> OrdTable:
    """
    Breadth-first search over normal words by number of e's.

    A state is (class, a(1) == 0, a(k) == 0). Words grow by prepending e_a,
    which may not turn a zero a(k) into an interior zero. A state reached at
    a smaller k always has the smaller length, so first visits suffice.

    Raises:
        GroupTooLargeError: if more than ``limit`` states are generated
    """
    ring.require_finite()
    if ring.descriptor in _tables:
        return _tables[ring.descriptor]
    limit = get_settings().groups.ord_limit if limit is None else limit
    canon = projective_canon(ring)
    elements = list(ring.elements())
    e_mats = [(a == ring.zero, e_matrix(ring, a)) for a in elements]
    unit_values = units(ring)

    table = OrdTable(ring=ring)
    seen = set()
    frontier: List[Tuple[M2, bool, bool]] = []
    for r in unit_values:
        for s in unit_values:
            x = canon(m_matrix(ring, r, s))
            if x not in table.ranks:
                table.ranks[x] = 0
                frontier.append((x, False, False))
                seen.add((x, None, None))

    k = 0
    while frontier:
        k += 1
        nxt = []
        for x, last_zero, first_zero in frontier:
            if k >= 3 and first_zero:
                continue
            for a_zero, e in e_mats:
                y = canon(m2_mul(ring, e, x))
                lz = a_zero if k == 1 else last_zero
                state = (y, lz, a_zero)
                if state in seen:
                    continue
                seen.add(state)
                rank = shape_ord(k, a_zero, lz).rank
                if rank < table.ranks.get(y, rank + 1):
                    table.ranks[y] = rank
                nxt.append(state)
                if len(seen) > limit:
                    raise GroupTooLargeError(f"ord search over {ring} exceeded {limit} states")
        logger.debug(f"ord search over {ring}: layer {k}, {len(nxt)} new states")
        frontier = nxt
    table.states = len(seen)
    logger.info(f"ord table for {ring}: {table.order} classes, max ord {table.max_ord}")
    _tables[ring.descriptor] = table
    return table


def ord_of(ring: Ring, x: M2) -> OrdValue:
    """ord of the class of x; the group must be enumerable"""
    return build_ord_table(ring).ord(x)
