"""
Classification of finite semisimple presentations by the property at 3,
closure under products and radical quotients, and an experimental probe
over matrix rings.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger

from ..config import get_settings
from ..errors import SearchBudgetExceededError, UnsupportedOperationError
from ..ring_core import MatrixRing, ModularIntegers, ProductRing, Ring, build_ring, make_matrix_ring
from ..ring_core.descriptors import RingDescriptor, factor_integer
from .certificates import WitnessCertificate
from .search import check_gui, is_two_good, orbit_representatives

# (n, q) of the simple rings M_n F_q failing the property at 3
OFFENDING_FACTORS = {(1, 2), (2, 2), (1, 3)}


def simple_factors(ring: Ring) -> List[Tuple[int, int]]:
    """
    The simple factors M_n F_q of R / J(R) as (n, q) pairs.

    Supports fields, zmod(m), matrix rings over these and products.

    Raises:
        UnsupportedOperationError: for other presentations
    """
    if isinstance(ring, ModularIntegers):
        return [(1, p) for p, _ in factor_integer(ring.m)]
    if ring.is_field:
        return [(1, ring.size)]
    if isinstance(ring, ProductRing):
        return [pair for f in ring.factors for pair in simple_factors(f)]
    if isinstance(ring, MatrixRing):
        return [(ring.n * n, q) for n, q in simple_factors(ring.inner)]
    raise UnsupportedOperationError(f"no semisimple presentation for {ring}")


def factor_name(n: int, q: int) -> str:
    return f"gf({q})" if n == 1 else f"mat({n},gf({q}))"


@dataclass
class ClassifierReport:
    ring: str
    factors: List[str]
    offending: List[str]
    satisfies: bool
    confirmed: Optional[bool] = None

    @property
    def consistent(self) -> Optional[bool]:
        return None if self.confirmed is None else self.confirmed == self.satisfies

    def to_dict(self) -> dict:
        return {"ring": self.ring, "factors": self.factors, "offending": self.offending,
                "satisfies": self.satisfies, "confirmed": self.confirmed,
                "consistent": self.consistent}


def artinian_classifier(ring: Ring, confirm: bool = True) -> ClassifierReport:
    """
    The property at 3 holds exactly when no simple factor is F_2, M_2 F_2 or F_3.

    Args:
        ring: a finite ring with a supported presentation
        confirm: also run the exhaustive check when the normalized tuple
            space fits the exhaustive limit
    """
    pairs = simple_factors(ring)
    offending = [factor_name(n, q) for n, q in pairs if (n, q) in OFFENDING_FACTORS]
    report = ClassifierReport(ring=str(ring), factors=[factor_name(n, q) for n, q in pairs],
                              offending=list(dict.fromkeys(offending)), satisfies=not offending)
    if confirm:
        try:
            report.confirmed = check_gui(ring, 3).passed
        except SearchBudgetExceededError as e:
            logger.warning(f"Skipping exhaustive confirmation for {ring}: {e}")
    logger.info(f"classifier over {ring}: satisfies={report.satisfies}, offending={report.offending}")
    return report


@dataclass
class LawReport:
    law: str
    k: int
    verdicts: Dict[str, bool] = field(default_factory=dict)
    combined: Optional[bool] = None
    expected: Optional[bool] = None

    @property
    def holds(self) -> bool:
        return self.combined == self.expected

    def to_dict(self) -> dict:
        return {"law": self.law, "k": self.k, "verdicts": self.verdicts, "combined": self.combined,
                "expected": self.expected, "holds": self.holds}


def product_law(factors: Sequence[Ring], k: int) -> LawReport:
    """The property for a product equals the conjunction over the factors"""
    product = ProductRing(list(factors))
    report = LawReport(law="product", k=k)
    for f in factors:
        report.verdicts[str(f)] = check_gui(f, k).passed
    report.expected = all(report.verdicts.values())
    report.combined = check_gui(product, k).passed
    return report


def quotient_law(p: int, e: int, k: int) -> LawReport:
    """The property for zmod(p^e) equals the property for its residue field gf(p)"""
    local = build_ring(RingDescriptor.zmod(p ** e))
    residue = build_ring(RingDescriptor.gf(p))
    report = LawReport(law="quotient", k=k)
    report.verdicts[str(residue)] = check_gui(residue, k).passed
    report.expected = report.verdicts[str(residue)]
    report.combined = check_gui(local, k).passed
    return report


@dataclass
class ProbeReport:
    """Experimental: searched for counterexamples, never a pass/fail claim"""
    base: str
    n: int
    status: str
    certificate: Optional[WitnessCertificate] = None

    def to_dict(self) -> dict:
        return {"base": self.base, "n": self.n, "status": self.status,
                "certificate": None if self.certificate is None else self.certificate.to_dict()}


def conjecture_Affn_probe(base: Ring, n: int, samples: Optional[int] = None,
                          seed: int = 0) -> ProbeReport:
    """
    Look for a failure of the property at 3 in M_n S for a 2-good ring S.

    Rings that are not 2-good are reported as excluded. The scan is
    exhaustive when the normalized tuple space fits the configured limit,
    otherwise sampled (``samples`` defaults to the configured sample count,
    capped at 10^4).
    """
    if not is_two_good(base):
        logger.info(f"probe: {base} is not 2-good, excluded")
        return ProbeReport(base=str(base), n=n, status="excluded")
    ring = make_matrix_ring(n, base)
    limit = get_settings().search.exhaustive_limit
    if samples is None and len(orbit_representatives(ring)) * ring.size > limit:
        samples = min(get_settings().search.default_samples, 10_000)
    cert = check_gui(ring, 3, samples=samples, seed=seed)
    status = "no-counterexample" if cert.passed else "counterexample"
    logger.info(f"probe over {ring}: {status} after {cert.stats.tested} tuples")
    return ProbeReport(base=str(base), n=n, status=status, certificate=cert)
