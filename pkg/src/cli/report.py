"""
Report suites: every headline result re-checked in one run, with a JSON
bundle and a CSV summary (claim_id, anchor, passed, runtime_s).
"""

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd
from loguru import logger

from ..config import get_settings
from ..continuants.sweeps import (det_sweep, identity_sweep, symbolic_identity_check, transfer_sweep,
                                  zero_transfer_sweep)
from ..continuants.words import check_word_model, fibonacci, monomial_count
from ..errors import AlgebraError
from ..pe2 import (OrdValue, as_matrix, commutator_identities_check, diagonal_word, is_normal, normalize,
                   random_word, stable_range_report, subgroup_lattice_checks, word_matrix)
from ..pe2.generators import m_matrix
from ..ring_core import make_matrix_ring, maximal_subfield, ring_from_text, units
from ..unit_translate import (Verdict, check_gui, corner_composition, density_bounds, f_n,
                              failure_family_Antn, failure_family_Atwh, gl_density, observation_Bthr,
                              product_law, quotient_law, subfield_kernel_bound, verify_fixtures,
                              verify_prop_Bone)
from ..unit_translate.certificates import is_witness
from ..unit_translate.search import check_instance

STABLE_RANGE_BOUND = OrdValue.parse("5/2")


@dataclass
class SuiteScale:
    """Sizes for one suite; None for a bone sample count means an exhaustive run, 0 skips it"""
    identity_k: int
    identity_samples: int
    identity_exhaustive_limit: Optional[int]
    word_model_k: int
    monomial_k: int
    det_samples: int
    random_words: int
    positives: Sequence[Tuple[int, int]]
    bone_n4_samples: Optional[int]
    bone_n5_samples: Optional[int]
    kernel_instances: int
    corner_instances: int
    quotient_max_e: int


def suite_scale(suite: str) -> SuiteScale:
    settings = get_settings()
    if suite == "paper-core":
        return SuiteScale(identity_k=4, identity_samples=settings.continuants.samples,
                          identity_exhaustive_limit=None, word_model_k=12, monomial_k=20,
                          det_samples=10_000, random_words=10_000,
                          positives=[(2, 2), (3, 2), (2, 3), (2, 4)], bone_n4_samples=None,
                          bone_n5_samples=settings.search.default_samples, kernel_instances=1000,
                          corner_instances=20, quotient_max_e=3)
    if suite == "smoke":
        return SuiteScale(identity_k=3, identity_samples=200, identity_exhaustive_limit=0,
                          word_model_k=8, monomial_k=12, det_samples=100, random_words=100,
                          positives=[(2, 2), (3, 2), (2, 3)], bone_n4_samples=16, bone_n5_samples=0,
                          kernel_instances=50, corner_instances=3, quotient_max_e=2)
    raise AlgebraError(f"Unknown suite {suite!r}")


@dataclass
class ClaimOutcome:
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)
    certificates: List[dict] = field(default_factory=list)


@dataclass
class Claim:
    claim_id: str
    anchor: str
    check: Callable[[SuiteScale, int, int], ClaimOutcome]


@dataclass
class ClaimResult:
    claim_id: str
    anchor: str
    passed: bool
    runtime_s: float
    details: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None


@dataclass
class ReportBundle:
    suite: str
    seed: int
    results: List[ClaimResult] = field(default_factory=list)
    certificates: List[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)

    def summary_frame(self) -> pd.DataFrame:
        return pd.DataFrame([{"claim_id": r.claim_id, "anchor": r.anchor, "passed": r.passed,
                              "runtime_s": round(r.runtime_s, 3)} for r in self.results],
                            columns=["claim_id", "anchor", "passed", "runtime_s"])

    def to_dict(self) -> dict:
        return {"suite": self.suite, "seed": self.seed, "passed": self.passed,
                "results": [r.__dict__ for r in self.results], "certificates": self.certificates}

    def write(self, directory: str) -> Tuple[Path, Path]:
        out = Path(directory) / "reports"
        out.mkdir(parents=True, exist_ok=True)
        json_path, csv_path = out / f"{self.suite}.json", out / f"{self.suite}.csv"
        with open(json_path, "w") as f:
            json.dump(self.to_dict(), f, indent=2, default=str)
        self.summary_frame().to_csv(csv_path, index=False)
        logger.info(f"Report {self.suite} written to {json_path} and {csv_path}")
        return json_path, csv_path


# -- claims

def _identities(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    symbolic = symbolic_identity_check()
    sweeps = [identity_sweep(ring_from_text(text), scale.identity_k, samples=scale.identity_samples,
                             seed=seed, exhaustive_limit=scale.identity_exhaustive_limit)
              for text in ["mat(2,gf(2))", "mat(2,gf(3))", "zmod(8)"]]
    return ClaimOutcome(all(r.passed for r in symbolic) and all(s.passed for s in sweeps),
                        {"symbolic_k": len(symbolic) - 1, "sweeps": [s.to_dict() for s in sweeps]})


def _word_model(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    checks = [check_word_model(k) for k in range(scale.word_model_k + 1)]
    counts = {k: monomial_count(k) for k in range(scale.monomial_k + 1)}
    counts_ok = all(counts[k] == fibonacci(k) for k in counts)
    return ClaimOutcome(counts_ok and all(c.matches for c in checks),
                        {"monomial_counts": counts, "word_model_k": scale.word_model_k})


def _invertibility_transfer(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    ring = ring_from_text("mat(2,gf(2))")
    sweeps = [transfer_sweep(ring, k, seed=seed) for k in (2, 3)]
    return ClaimOutcome(all(s.passed for s in sweeps), {"sweeps": [s.to_dict() for s in sweeps]})


def _zero_transfer(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    sweep = zero_transfer_sweep(ring_from_text("mat(2,gf(2))"), 3, seed=seed)
    return ClaimOutcome(sweep.passed, sweep.to_dict())


def _det_equality(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    sweeps = [det_sweep(ring_from_text(text), k, samples=scale.det_samples, seed=seed, exhaustive_limit=0)
              for text in ["mat(2,gf(5))", "mat(3,gf(3))"] for k in range(2, 6)]
    return ClaimOutcome(all(s.passed for s in sweeps), {"tested": sum(s.tested for s in sweeps)})


def _pe2_calculus(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    diagonal_ok = True
    for text in ["gf(2)", "gf(3)", "gf(4)", "zmod(8)", "mat(2,gf(2))"]:
        ring = ring_from_text(text)
        for z in units(ring):
            word = diagonal_word(ring, z)
            diagonal_ok &= word_matrix(ring, word) == m_matrix(ring, z, ring.try_invert(z))
    relations = commutator_identities_check(ring_from_text("gf(5)"), samples=50, seed=seed)

    rng = np.random.default_rng(seed)
    normal_ok = True
    for text in ["zmod(8)", "mat(2,gf(2))", "gf(4)"]:
        ring = ring_from_text(text)
        for _ in range(scale.random_words // 3):
            word = random_word(ring, rng, int(rng.integers(0, 9)))
            normal = normalize(ring, word)
            normal_ok &= is_normal(ring, normal) and as_matrix(ring, normal) == as_matrix(ring, word)
    return ClaimOutcome(diagonal_ok and relations.passed and normal_ok,
                        {"diagonal_words": diagonal_ok, "relations": relations.passed,
                         "normalize": normal_ok})


def _stable_range(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    reports = [stable_range_report(ring_from_text(text))
               for text in ["gf(2)", "gf(3)", "zmod(4)", "mat(2,gf(2))"]]
    ok = all(r.max_ord is not None and r.max_ord <= STABLE_RANGE_BOUND and r.q3_witnesses for r in reports)
    return ClaimOutcome(ok, {"reports": [r.to_dict() for r in reports]})


def _groups(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    f4 = subgroup_lattice_checks(ring_from_text("gf(4)"), with_ord=False)
    others = [subgroup_lattice_checks(ring_from_text(text), with_ord=False) for text in ["gf(2)", "gf(3)", "gf(5)"]]
    ok = f4.pe2_order == 60 and f4.pe2_perfect and f4.pe2_simple
    ok = ok and all(r.pe1_index in (1, 2) for r in others) and others[-1].pe1_index == 1
    return ClaimOutcome(ok, {"reports": [r.to_dict() for r in [f4] + others]})


def _positives(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    certs = [check_gui(make_matrix_ring(n, ring_from_text(f"gf({q})")), q) for n, q in scale.positives]
    return ClaimOutcome(all(c.kind == Verdict.EXHAUSTIVE_PASS for c in certs),
                        {"rings": [c.ring for c in certs]}, [c.to_dict() for c in certs])


def _negatives(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    ring = ring_from_text("mat(2,gf(2))")
    certs = [check_instance(ring, [ring.unit_matrix(0, 0), ring.unit_matrix(0, 1)])]
    certs += [failure_family_Antn(n, q) for n, q in [(2, 2), (3, 2), (2, 3)]]
    certs.append(failure_family_Atwh(ring_from_text("gf(2)"), 2, a=1))
    return ClaimOutcome(all(c.kind == Verdict.EXHAUSTED_FAILURE for c in certs),
                        {"commands": [c.command for c in certs]}, [c.to_dict() for c in certs])


def _matrix_f2(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    fixtures = verify_fixtures()
    observation = observation_Bthr()
    runs = [verify_prop_Bone(2, jobs=jobs), verify_prop_Bone(3, jobs=jobs)]
    if scale.bone_n4_samples != 0:
        runs.append(verify_prop_Bone(4, samples=scale.bone_n4_samples, seed=seed, jobs=jobs))
    if scale.bone_n5_samples != 0:
        runs.append(verify_prop_Bone(5, samples=scale.bone_n5_samples, seed=seed, jobs=jobs))
    ok = all(f.passed for f in fixtures) and observation.passed
    ok = ok and not runs[0].passed and all(r.passed for r in runs[1:])
    return ClaimOutcome(ok, {"fixtures": len(fixtures), "fixture_failures": [f.name for f in fixtures if not f.passed],
                             "observation": observation.passed,
                             "runs": {r.details["n"]: r.verdict for r in runs}},
                        [r.to_dict() for r in runs])


def _bounds(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    density_ok = all(gl_density(n, q) == f_n(n, q) for n in range(1, 6) for q in (2, 3, 4, 5))
    thresholds_ok = all(density_bounds(n, q).consistent for n in range(1, 6) for q in (4, 5))
    rng = np.random.default_rng(seed)
    kernel_ok = True
    for n, q in [(3, 2), (2, 3)]:
        subfield = maximal_subfield(n, q)
        for _ in range(scale.kernel_instances):
            kernel_ok &= subfield_kernel_bound(subfield.ring.random_value(rng), subfield).holds
    return ClaimOutcome(density_ok and thresholds_ok and kernel_ok,
                        {"density": density_ok, "thresholds": thresholds_ok, "kernel": kernel_ok})


def _closure(scale: SuiteScale, seed: int, jobs: int) -> ClaimOutcome:
    ring = ring_from_text("mat(4,gf(3))")
    rng = np.random.default_rng(seed)
    corner_ok = True
    for _ in range(scale.corner_instances):
        values = [ring.random_value(rng) for _ in range(2)]
        corner_ok &= is_witness(ring, corner_composition(ring, 2, values).u, values)
    products = [product_law([ring_from_text(a), ring_from_text(b)], 3)
                for a, b in [("gf(4)", "gf(5)"), ("gf(3)", "gf(4)"), ("gf(2)", "gf(3)")]]
    quotients = [quotient_law(p, e, 3) for p in (2, 3, 5) for e in range(2, scale.quotient_max_e + 1)]
    laws = products + quotients
    return ClaimOutcome(corner_ok and all(law.holds for law in laws),
                        {"corner": corner_ok, "laws": [law.to_dict() for law in laws]})


CLAIMS: List[Claim] = [
    Claim("identities", "continuant identities over the free ring and sampled finite rings", _identities),
    Claim("word-model", "monomials of Q_k: Fibonacci count and index-word model", _word_model),
    Claim("invertibility-transfer", "Q_k invertible iff Q_k^op invertible, closed-form inverse", _invertibility_transfer),
    Claim("zero-transfer", "Q_3 = 0 iff Q_3^op = 0 with Q_2 and P_3 invertible", _zero_transfer),
    Claim("det-equality", "det Q_k = det Q_k^op over matrix rings over fields", _det_equality),
    Claim("pe2-calculus", "diagonal words, generator relations and normal forms in PE(2,R)", _pe2_calculus),
    Claim("stable-range", "max ord at most 5/2 and Q_3 witnesses for every pair", _stable_range),
    Claim("groups", "PE_2(2,F_4) perfect and simple of order 60; [PE_1:PE_2] in {1,2}", _groups),
    Claim("gui-positives", "M_n F_q has the unit-translate property at q", _positives),
    Claim("gui-negatives", "first-row families and the M_2 F_2 pair admit no common translate", _negatives),
    Claim("matrix-f2", "M_n F_2 at 3: worked witnesses, N_2 table, n = 2 fails, n >= 3 passes", _matrix_f2),
    Claim("bounds", "|GL(n,q)|/q^(n^2) = f_n(q), measure threshold and subfield kernel bound", _bounds),
    Claim("closure", "corner composition, product and radical-quotient laws", _closure),
]


def run_suite(suite: str, seed: int = 0, jobs: int = 1, claim_ids: Optional[Sequence[str]] = None) -> ReportBundle:
    """
    Run the claims of a suite (``paper-core`` at full size, ``smoke`` reduced).

    A claim that raises counts as failed and the suite continues.
    """
    scale = suite_scale(suite)
    selected = [c for c in CLAIMS if not claim_ids or c.claim_id in claim_ids]
    unknown = set(claim_ids or []) - {c.claim_id for c in CLAIMS}
    if unknown:
        raise AlgebraError(f"Unknown claims: {sorted(unknown)}")
    bundle = ReportBundle(suite=suite, seed=seed)
    for claim in selected:
        logger.info(f"[{suite}] {claim.claim_id}")
        start = time.perf_counter()
        try:
            outcome = claim.check(scale, seed, jobs)
            error = None
        except AlgebraError as e:
            logger.error(f"[{suite}] {claim.claim_id} raised: {e}")
            outcome, error = ClaimOutcome(False), str(e)
        elapsed = time.perf_counter() - start
        bundle.results.append(ClaimResult(claim.claim_id, claim.anchor, outcome.passed, elapsed,
                                          outcome.details, error))
        bundle.certificates.extend(outcome.certificates)
        logger.info(f"[{suite}] {claim.claim_id}: {'pass' if outcome.passed else 'FAIL'} in {elapsed:.1f}s")
    return bundle
