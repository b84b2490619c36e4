"""
The property at 3 for M_n F_2.

Pairs (B, C) are reduced to B = diag(I_r, 0). Singular B goes through the
corner lift (upper corner witness for (I_r, C_top), lower corner witness for
C_bottom) with a direct search as fallback; B = 0 uses the cyclic witness;
B = I is scanned directly. The C space is split into shards on its top bits.
"""

import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np
from joblib import Parallel, delayed
from loguru import logger

from ..config import get_settings
from ..errors import PreconditionError
from ..ring_core import GF2MatrixRing, RingElement, build_ring, make_matrix_ring
from ..ring_core.canonical import (companion_n, direct_sum, identity, jnf, jnf0, rank_normal_form,
                                   scalar_block, zero_matrix)
from ..ring_core.descriptors import RingDescriptor
from .certificates import Provenance, SearchStats, Verdict, WitnessCertificate, is_witness
from .corners import btwo_dispatch, standard_idempotent
from .families import two_good_witness
from .search import find_witness


def _f2():
    return build_ring(RingDescriptor.gf(2))


def _rows(*rows: Sequence[int]) -> RingElement:
    ring = make_matrix_ring(len(rows), _f2())
    return RingElement(ring, ring.from_entries(rows))


def n2() -> RingElement:
    """Companion matrix of x^2 + x + 1"""
    return companion_n(2, _f2())


def n3(a: int, b: int) -> RingElement:
    """rows (0,0,1), (1,0,b), (0,1,a)"""
    return companion_n(3, _f2(), [a, b])


def n4(a: int, b: int, c: int) -> RingElement:
    return companion_n(4, _f2(), [a, b, c])


def one_by_one(c: int) -> RingElement:
    return scalar_block(_f2(), c)


@dataclass
class BoneFixture:
    """A worked pair (B, C) with its witness U"""
    name: str
    build: Callable[[], Sequence[RingElement]]

    def matrices(self):
        return self.build()


def _fixture(name: str, b, c, u) -> BoneFixture:
    return BoneFixture(name, lambda: (b(), c(), u()))


FIXTURES: List[BoneFixture] = [
    _fixture("I, N2+(1)", lambda: identity(3, _f2()), lambda: direct_sum(n2(), one_by_one(1)),
             lambda: n3(0, 1) ** 3),
    _fixture("I, JNF(2)+(1)", lambda: identity(3, _f2()), lambda: direct_sum(jnf(2, _f2()), one_by_one(1)),
             lambda: n3(1, 0)),
    _fixture("I, JNF0(3)", lambda: identity(3, _f2()), lambda: jnf0(3, _f2()), lambda: n3(0, 1)),
    _fixture("I, JNF0(2)+(1)", lambda: identity(3, _f2()), lambda: direct_sum(jnf0(2, _f2()), one_by_one(1)),
             lambda: n3(1, 0)),
    _fixture("I, JNF(2)+(0)", lambda: identity(3, _f2()), lambda: direct_sum(jnf(2, _f2()), one_by_one(0)),
             lambda: n3(1, 0)),
    _fixture("I, N2+(0)", lambda: identity(3, _f2()), lambda: direct_sum(n2(), one_by_one(0)),
             lambda: n3(0, 1) ** 3),
    _fixture("I, I2+(0)", lambda: identity(3, _f2()), lambda: rank_normal_form(3, 2, _f2()),
             lambda: n3(0, 1) ** 2),
    _fixture("I, (1)+0", lambda: identity(3, _f2()), lambda: rank_normal_form(3, 1, _f2()),
             lambda: n3(1, 0)),
    _fixture("I, JNF0(2)+(0)", lambda: identity(3, _f2()), lambda: direct_sum(jnf0(2, _f2()), one_by_one(0)),
             lambda: n3(0, 1)),
    _fixture("I2+0, JNF0(2)+(1)", lambda: rank_normal_form(3, 2, _f2()),
             lambda: direct_sum(jnf0(2, _f2()), one_by_one(1)), lambda: n3(1, 0) ** 5),
    _fixture("I2+0, I2+0", lambda: rank_normal_form(3, 2, _f2()), lambda: rank_normal_form(3, 2, _f2()),
             lambda: direct_sum(n2() ** 2, one_by_one(1))),
    _fixture("I2+0, N2+0", lambda: rank_normal_form(3, 2, _f2()), lambda: direct_sum(n2(), one_by_one(0)),
             lambda: direct_sum(n2() ** 2, one_by_one(1))),
    _fixture("I2+0, 0+(1)", lambda: rank_normal_form(3, 2, _f2()),
             lambda: direct_sum(zero_matrix(2, _f2()), one_by_one(1)),
             lambda: _rows((0, 1, 0), (0, 0, 1), (1, 0, 0))),
    _fixture("I2+0, bottom row", lambda: rank_normal_form(3, 2, _f2()),
             lambda: _rows((0, 0, 0), (0, 0, 0), (1, 1, 0)),
             lambda: direct_sum(n2(), one_by_one(1))),
    _fixture("(1)+0, diag(0,1,0)", lambda: rank_normal_form(3, 1, _f2()),
             lambda: _rows((0, 0, 0), (0, 1, 0), (0, 0, 0)),
             lambda: _rows((0, 1, 0), (1, 0, 0), (0, 0, 1))),
    _fixture("(1)+0, JNF0(2)+0", lambda: rank_normal_form(3, 1, _f2()),
             lambda: direct_sum(jnf0(2, _f2()), one_by_one(0)),
             lambda: _rows((0, 0, 1), (0, 1, 0), (1, 0, 0))),
    _fixture("I4, N2+I2", lambda: identity(4, _f2()), lambda: direct_sum(n2(), identity(2, _f2())),
             lambda: direct_sum(n2() ** 2, n2())),
    _fixture("I4, JNF(4)", lambda: identity(4, _f2()), lambda: jnf(4, _f2()), lambda: n4(1, 0, 0)),
]


@dataclass
class FixtureResult:
    name: str
    n: int
    passed: bool


def verify_fixtures(fixtures: Optional[List[BoneFixture]] = None) -> List[FixtureResult]:
    """Re-check every worked witness: U, U + B and U + C invertible"""
    results = []
    for fixture in FIXTURES if fixtures is None else fixtures:
        b, c, u = fixture.matrices()
        ring = u.ring
        results.append(FixtureResult(fixture.name, ring.n, is_witness(ring, u.value, [b.value, c.value])))
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.error(f"worked witnesses failing: {failed}")
    return results


@dataclass
class ObservationResult:
    targets: List[str]
    with_n2: List[bool]
    with_n2_squared: List[bool]

    @property
    def passed(self) -> bool:
        return (self.with_n2 == [True, False, True, True, False]
                and self.with_n2_squared == [True, True, False, False, True])


def observation_Bthr() -> ObservationResult:
    """Invertibility of N_2 + C0 and N_2^2 + C0 for five 2x2 matrices C0"""
    F = _f2()
    targets = {
        "I": identity(2, F), "N2": n2(), "N2^2": n2() ** 2,
        "diag(0,1)": _rows((0, 0), (0, 1)), "diag(1,0)": _rows((1, 0), (0, 0)),
    }
    a, a2 = n2(), n2() ** 2
    return ObservationResult(
        targets=list(targets),
        with_n2=[(a + c).is_unit for c in targets.values()],
        with_n2_squared=[(a2 + c).is_unit for c in targets.values()],
    )


@dataclass
class BoneTally:
    """Outcome counts for one rank of B over one slice of C"""
    rank: int
    tested: int = 0
    corner: int = 0
    cyclic: int = 0
    direct: int = 0
    fallback: int = 0
    failures: List[int] = field(default_factory=list)

    def merge(self, other: "BoneTally") -> "BoneTally":
        self.tested += other.tested
        self.corner += other.corner
        self.cyclic += other.cyclic
        self.direct += other.direct
        self.fallback += other.fallback
        self.failures.extend(other.failures)
        return self


def _solve_case(ring: GF2MatrixRing, r: int, b, c, tally: BoneTally) -> bool:
    n = ring.n
    if r == 0:
        if n >= 2:
            two_good_witness(ring, c)
            tally.cyclic += 1
            return True
        ok = find_witness(ring, [c]) is not None
        tally.direct += ok
        return ok
    if r < n and btwo_dispatch(ring, r, c) is not None:
        tally.corner += 1
        return True
    ok = find_witness(ring, [b, c]) is not None
    if ok and r < n:
        tally.fallback += 1
    elif ok:
        tally.direct += 1
    return ok


def bone_slice(n: int, r: int, codes: Sequence[int], stop_on_failure: bool = True) -> BoneTally:
    """Run every C (given by its integer code) against B = diag(I_r, 0)"""
    ring = GF2MatrixRing(n)
    b = standard_idempotent(ring, r)
    tally = BoneTally(rank=r)
    for code in codes:
        c = ring.from_int_code(int(code))
        tally.tested += 1
        if not _solve_case(ring, r, b, c, tally):
            tally.failures.append(int(code))
            if stop_on_failure:
                break
    return tally


def _slices(n: int, bits: int, samples: Optional[int], seed: int):
    """(rank, codes) jobs; exhaustive slices fix the top ``bits`` bits of C"""
    total_bits = n * n
    bits = min(bits, total_bits)
    jobs = []
    for r in range(n + 1):
        if samples is None:
            width = total_bits - bits
            jobs.extend((r, range(s << width, (s + 1) << width)) for s in range(1 << bits))
        else:
            rng = np.random.default_rng([seed, r])
            codes = rng.integers(0, 1 << total_bits, size=samples, dtype=np.uint64).tolist()
            chunk = max(1, samples // (1 << bits))
            jobs.extend((r, codes[i:i + chunk]) for i in range(0, samples, chunk))
    return jobs


def verify_prop_Bone(n: int, samples: Optional[int] = None, seed: int = 0, jobs: int = 1,
                     shard_bits: Optional[int] = None, timeout: Optional[float] = None) -> WitnessCertificate:
    """
    Decide the property at 3 for M_n F_2 over all pairs (B, C).

    Args:
        n: matrix size, 2 to 5 (n = 2 reproduces the known failure)
        samples: per-rank number of random C instead of all 2^(n^2)
        seed: seed for sampled C
        jobs: worker processes
        shard_bits: number of top bits of C fixed per slice; defaults to the
            configured value for n = 5 and to 4 otherwise
        timeout: seconds allowed per slice in a worker pool

    Returns:
        WitnessCertificate: aggregate verdict with per-rank counts in details
    """
    if not 2 <= n <= 5:
        raise PreconditionError(f"n must be between 2 and 5, got {n}")
    if shard_bits is None:
        shard_bits = get_settings().search.bone_shard_bits if n == 5 else 4
    start = time.perf_counter()
    work = _slices(n, shard_bits, samples, seed)
    logger.info(f"M_{n} F_2: {len(work)} slices on {jobs} workers "
                f"({'sampled' if samples else 'exhaustive'})")
    results = Parallel(n_jobs=jobs, timeout=timeout)(delayed(bone_slice)(n, r, codes) for r, codes in work)

    tallies: Dict[int, BoneTally] = {r: BoneTally(rank=r) for r in range(n + 1)}
    for t in results:
        tallies[t.rank].merge(t)
    for r, t in tallies.items():
        if t.fallback:
            logger.warning(f"rank {r}: corner lift unavailable for {t.fallback} of {t.tested} pairs, "
                           f"direct search used")

    ring = GF2MatrixRing(n)
    failed = next(((r, t.failures[0]) for r, t in tallies.items() if t.failures), None)
    if failed is not None:
        verdict = Verdict.EXHAUSTED_FAILURE
        values = [ring.format_value(standard_idempotent(ring, failed[0])),
                  ring.format_value(ring.from_int_code(failed[1]))]
    else:
        verdict = Verdict.EXHAUSTIVE_PASS if samples is None else Verdict.SAMPLED_PASS
        values = None
    stats = SearchStats(tested=sum(t.tested for t in tallies.values()),
                        witnessed=sum(t.tested - len(t.failures) for t in tallies.values()),
                        elapsed_ms=int((time.perf_counter() - start) * 1000), scan_order="bone")
    cert = WitnessCertificate(
        command="gui bone", ring=str(ring), k=3, verdict=verdict.value, values=values, stats=stats,
        provenance=Provenance(seed=seed if samples else None, samples=samples, shards=len(work)),
        details={"n": n, "ranks": {str(r): asdict(t) for r, t in tallies.items()},
                 "shard_bits": shard_bits},
    )
    logger.info(f"M_{n} F_2 at 3: {verdict.value} after {stats.tested} pairs")
    return cert.stamp()
