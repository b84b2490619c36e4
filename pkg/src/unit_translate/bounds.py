"""
Counting bounds: the density of GL(n,q) in M_n F_q, intersections of
large sets in a finite probability space, and the number of nonzero
elements d of a maximal subfield with d + v singular.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from loguru import logger

from ..errors import ArithmeticInconsistencyError, PreconditionError
from ..ring_core import MatrixRing
from ..ring_core.rings import row_reduce
from ..ring_core.units import MaximalSubfield, gl_order


def gl_density(n: int, q: int) -> Fraction:
    """|GL(n,q)| / q^(n^2)"""
    return Fraction(gl_order(n, q), q ** (n * n))


def f_n(n: int, q: int) -> Fraction:
    """prod_{i=1..n} (1 - q^-i)"""
    total = Fraction(1)
    for i in range(1, n + 1):
        total *= 1 - Fraction(1, q ** i)
    return total


@dataclass
class DensityReport:
    n: int
    q: int
    density: Fraction
    product: Fraction
    threshold: Optional[Fraction] = None
    above_threshold: Optional[bool] = None
    measure_total: Optional[Fraction] = None
    intersection_guaranteed: Optional[bool] = None

    @property
    def consistent(self) -> bool:
        return self.density == self.product and self.above_threshold is not False

    def to_dict(self) -> dict:
        def s(x):
            return None if x is None else str(x)
        return {"n": self.n, "q": self.q, "density": s(self.density), "f_n": s(self.product),
                "threshold": s(self.threshold), "above_threshold": self.above_threshold,
                "measure_total": s(self.measure_total),
                "intersection_guaranteed": self.intersection_guaranteed,
                "consistent": self.consistent}


def density_bounds(n: int, q: int) -> DensityReport:
    """
    Compare |GL(n,q)|/q^(n^2) with f_n(q) and, for q >= 4, replay the
    measure argument for the property at q - 1: the unit group and its
    q - 2 translates each have measure f_n(q), and (q-1) f_n(q) > q - 2
    forces a common point.
    """
    if n < 1 or q < 2:
        raise PreconditionError("need n >= 1 and q >= 2")
    report = DensityReport(n=n, q=q, density=gl_density(n, q), product=f_n(n, q))
    if q >= 4:
        k = q - 1
        report.threshold = 1 - Fraction(1, k)
        report.above_threshold = report.product > report.threshold
        report.measure_total = k * report.product
        report.intersection_guaranteed = report.measure_total > k - 1
    logger.debug(f"f_{n}({q}) = {report.product}")
    return report


@dataclass
class MeasureReport:
    k: int
    total: Fraction
    guaranteed: bool
    intersection_size: int

    def to_dict(self) -> dict:
        return {"k": self.k, "total": str(self.total), "guaranteed": self.guaranteed,
                "intersection_size": self.intersection_size}


def measure_intersection(sets: Sequence[set], universe: Sequence) -> MeasureReport:
    """
    Normalized counting measure on ``universe``: if the measures of k sets
    sum to more than k - 1 the sets have a common point.

    Raises:
        ArithmeticInconsistencyError: if the sum exceeds k - 1 and the
            intersection is nevertheless empty
    """
    universe = list(universe)
    if not universe:
        raise PreconditionError("the universe must be nonempty")
    size = len(universe)
    members = set(universe)
    total = sum((Fraction(len(set(s) & members), size) for s in sets), Fraction(0))
    k = len(sets)
    common = set(members)
    for s in sets:
        common &= set(s)
    report = MeasureReport(k=k, total=total, guaranteed=total > k - 1, intersection_size=len(common))
    if report.guaranteed and not common:
        raise ArithmeticInconsistencyError(f"measure sum {total} > {k - 1} with empty intersection")
    return report


def _joint_rank(ring: MatrixRing, x, y) -> int:
    field = ring.inner
    return len(row_reduce(ring.entries(x) + ring.entries(y), field)[1])


@dataclass
class KernelBoundReport:
    singular: List[Any]
    rank: int
    bound: int
    kernels_disjoint: bool
    disjoint_from_kernel: bool

    @property
    def holds(self) -> bool:
        return len(self.singular) <= self.bound and self.kernels_disjoint and self.disjoint_from_kernel

    def to_dict(self, ring: MatrixRing) -> Dict[str, Any]:
        return {"singular": [ring.format_value(d) for d in self.singular], "count": len(self.singular),
                "rank": self.rank, "bound": self.bound, "kernels_disjoint": self.kernels_disjoint,
                "disjoint_from_kernel": self.disjoint_from_kernel, "holds": self.holds}


def subfield_kernel_bound(v, subfield: MaximalSubfield) -> KernelBoundReport:
    """
    S_v = {d in G \\ 0 : d + v singular} has at most (q^n - q^(n-r))/(q-1)
    elements, r = rank v: the kernels of d + v are pairwise trivially
    intersecting and meet ker v trivially, so each contributes its own lines
    outside ker v.
    """
    ring = subfield.ring
    n, q = ring.n, ring.inner.size
    r = ring.rank(v)
    singular = [d for d in subfield.nonzero_elements() if not ring.is_unit(ring.add(d, v))]
    shifted = [ring.add(d, v) for d in singular]
    pairwise = all(_joint_rank(ring, x, y) == n for x, y in itertools.combinations(shifted, 2))
    from_kernel = all(_joint_rank(ring, x, v) == n for x in shifted)
    report = KernelBoundReport(singular=singular, rank=r, bound=(q ** n - q ** (n - r)) // (q - 1),
                               kernels_disjoint=pairwise, disjoint_from_kernel=from_kernel)
    if not report.holds:
        raise ArithmeticInconsistencyError(f"subfield kernel bound fails for {ring.format_value(v)}")
    return report
