"""
Stable range one and its continuant characterizations on finite rings.
"""

import itertools
from dataclasses import dataclass
from typing import Any, Optional

from loguru import logger

from ..continuants.quad import continuant_q_raw
from ..errors import GroupTooLargeError, InfiniteRingError
from ..ring_core import Ring
from .ordering import OrdValue, build_ord_table

# max ord allowed under stable range one: 5/2
STABLE_RANGE_ORD = OrdValue.half_below(3)


def left_ideal(ring: Ring, a) -> frozenset:
    return frozenset(ring.mul(x, a) for x in ring.elements())


def is_unimodular(ring: Ring, a, b) -> bool:
    """1 in Ra + Rb"""
    ra, rb = left_ideal(ring, a), left_ideal(ring, b)
    return any(ring.sub(ring.one, x) in rb for x in ra)


def sr1_counterexample(ring: Ring) -> Optional[tuple]:
    """A unimodular (a, b) with no unit a + cb, or None"""
    ring.require_finite()
    elements = list(ring.elements())
    ideals = {x: left_ideal(ring, x) for x in elements}
    for a in elements:
        for b in elements:
            if not any(ring.sub(ring.one, x) in ideals[b] for x in ideals[a]):
                continue
            if not any(ring.is_unit(ring.add(a, ring.mul(c, b))) for c in elements):
                return a, b
    return None


def q3_witness(ring: Ring, x, y) -> Optional[Any]:
    """c with Q_3(x, y, c) = x + c(1 + yx) invertible"""
    q2 = ring.add(ring.one, ring.mul(y, x))
    return next((c for c in ring.elements() if ring.is_unit(ring.add(x, ring.mul(c, q2)))), None)


@dataclass
class StableRangeReport:
    ring: str
    sr1: bool
    q3_witnesses: bool
    max_ord: Optional[OrdValue] = None
    sr1_counterexample: Optional[list] = None
    q3_counterexample: Optional[list] = None

    @property
    def consistent(self) -> Optional[bool]:
        """max ord <= 5/2 agrees with stable range one; None without an ord table"""
        if self.max_ord is None:
            return None
        return (self.max_ord <= STABLE_RANGE_ORD) == self.sr1 == self.q3_witnesses

    def to_dict(self) -> dict:
        return {"ring": self.ring, "sr1": self.sr1, "q3_witnesses": self.q3_witnesses,
                "max_ord": None if self.max_ord is None else str(self.max_ord),
                "consistent": self.consistent, "sr1_counterexample": self.sr1_counterexample,
                "q3_counterexample": self.q3_counterexample}


def stable_range_report(ring: Ring, with_ord: bool = True) -> StableRangeReport:
    """
    Check stable range one from its definition, the Q_3 condition for every
    pair, and the maximal length in PE(2,R) when the group is enumerable.
    """
    ring.require_finite()
    bad_sr1 = sr1_counterexample(ring)
    bad_q3 = None
    for x, y in itertools.product(list(ring.elements()), repeat=2):
        if q3_witness(ring, x, y) is None:
            bad_q3 = (x, y)
            break
    report = StableRangeReport(ring=str(ring), sr1=bad_sr1 is None, q3_witnesses=bad_q3 is None)
    f = ring.format_value
    if bad_sr1 is not None:
        report.sr1_counterexample = [f(v) for v in bad_sr1]
    if bad_q3 is not None:
        report.q3_counterexample = [f(v) for v in bad_q3]
    if with_ord:
        try:
            report.max_ord = build_ord_table(ring).max_ord
        except GroupTooLargeError as e:
            logger.warning(f"Skipping ord part for {ring}: {e}")
    logger.info(f"stable range over {ring}: sr1={report.sr1}, q3={report.q3_witnesses}, "
                f"max ord {report.max_ord}")
    return report


@dataclass
class QsrReport:
    ring: str
    n: int
    holds: bool
    tested: int
    counterexample: Optional[list] = None
    max_pe2_ord: Optional[OrdValue] = None
    ord_bound: Optional[OrdValue] = None

    @property
    def consistent(self) -> Optional[bool]:
        if self.max_pe2_ord is None:
            return None
        return (self.max_pe2_ord <= self.ord_bound) == self.holds

    def to_dict(self) -> dict:
        return {"ring": self.ring, "n": self.n, "holds": self.holds, "tested": self.tested,
                "counterexample": self.counterexample,
                "max_pe2_ord": None if self.max_pe2_ord is None else str(self.max_pe2_ord),
                "ord_bound": None if self.ord_bound is None else str(self.ord_bound),
                "consistent": self.consistent}


def qsr_condition(ring: Ring, n: int, limit: int = 1 << 20, cross_check: bool = True) -> QsrReport:
    """
    For every a in R^{n+1} find b in R^n with Q_{2n+1}(a, b) invertible.

    Args:
        ring: a finite ring
        n: number of free entries
        limit: maximal number of (a, b) pairs to enumerate
        cross_check: compare with max ord over PE_2(2,R), bounded by n + 3/2

    Raises:
        GroupTooLargeError: if the tuple space exceeds ``limit``
    """
    if not ring.is_finite:
        raise InfiniteRingError(f"{ring} is infinite")
    if n < 0:
        raise ValueError("n must be non-negative")
    if ring.size ** (2 * n + 1) > limit:
        raise GroupTooLargeError(f"{ring.size}^{2 * n + 1} tuples exceed the limit {limit}")
    elements = list(ring.elements())
    report = QsrReport(ring=str(ring), n=n, holds=True, tested=0)
    for a in itertools.product(elements, repeat=n + 1):
        report.tested += 1
        if not any(ring.is_unit(continuant_q_raw(ring, a + b))
                   for b in itertools.product(elements, repeat=n)):
            report.holds = False
            report.counterexample = [ring.format_value(x) for x in a]
            break

    if cross_check:
        from .groups import pe2_group
        try:
            table = build_ord_table(ring)
            pe2 = pe2_group(ring)
            report.max_pe2_ord = max(table.ord(x) for x in pe2.elements)
            report.ord_bound = OrdValue.half_below(n + 2)
        except GroupTooLargeError as e:
            logger.warning(f"Skipping ord cross-check for {ring}: {e}")
    return report
