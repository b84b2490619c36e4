"""
Batch verifiers over many tuples: exhaustive when the tuple space is small,
seeded sampling otherwise. Sharding splits the work deterministically.
"""

import itertools
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np
from loguru import logger

from ..config import get_settings
from ..ring_core import Ring, RingElement
from .identities import IdentityReport, check_identities
from .quad import build_quad
from .transfer import (det_equality, factorized_transfer, op_transfer_invertibility,
                       shifted_p_identity, transfer_matrix, zero_transfer)
from .words import free_quad


@dataclass
class SweepReport:
    """Aggregate of one check run over many tuples"""
    check: str
    ring: str
    k: int
    mode: str
    tested: int = 0
    failures: int = 0
    seed: Optional[int] = None
    first_failure: Optional[List[Any]] = None
    counters: Dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0 and self.tested > 0

    def to_dict(self) -> dict:
        data = asdict(self)
        data["passed"] = self.passed
        return data


def tuple_space(ring: Ring, k: int, samples: Optional[int] = None, seed: int = 0,
                exhaustive_limit: Optional[int] = None, shard_index: int = 0,
                shard_count: int = 1) -> Tuple[str, Iterator[Tuple]]:
    """
    Choose between exhaustive enumeration and sampling of k-tuples.

    Returns:
        (mode, iterator of raw-value tuples) where mode is "exhaustive" or "sampled"
    """
    settings = get_settings().continuants
    limit = settings.exhaustive_limit if exhaustive_limit is None else exhaustive_limit
    samples = settings.samples if samples is None else samples
    if ring.is_finite and ring.size ** k <= limit:
        values = list(ring.elements())
        space = itertools.product(values, repeat=k)
        return "exhaustive", itertools.islice(space, shard_index, None, shard_count)

    rng = np.random.default_rng([seed, shard_index])
    count = samples // shard_count + (1 if shard_index < samples % shard_count else 0)

    def sampled():
        for _ in range(count):
            yield tuple(ring.random_value(rng) for _ in range(k))

    return "sampled", sampled()


def _run(check: str, ring: Ring, k: int, predicate: Callable[[List[RingElement]], Tuple[bool, Dict[str, int]]],
         samples, seed, exhaustive_limit, shard_index=0, shard_count=1) -> SweepReport:
    mode, space = tuple_space(ring, k, samples, seed, exhaustive_limit, shard_index, shard_count)
    report = SweepReport(check=check, ring=str(ring), k=k, mode=mode, seed=seed)
    logger.info(f"{check}: {mode} sweep over {ring}, k={k}")
    for values in space:
        a = [ring.element(v) for v in values]
        ok, counters = predicate(a)
        report.tested += 1
        for name, inc in counters.items():
            report.counters[name] = report.counters.get(name, 0) + inc
        if not ok:
            report.failures += 1
            if report.first_failure is None:
                report.first_failure = [x.to_json() for x in a]
                logger.warning(f"{check} failed on {report.first_failure}")
    logger.info(f"{check}: {report.tested} tuples, {report.failures} failures")
    return report


def identity_sweep(ring: Ring, k: int, samples: Optional[int] = None, seed: int = 0,
                   exhaustive_limit: Optional[int] = None, shard_index: int = 0,
                   shard_count: int = 1) -> SweepReport:
    """All identity families plus the factorization and shifted-P checks for every tuple"""
    def predicate(a):
        quad = build_quad(a, ring)
        ok = check_identities(quad).passed
        ok = ok and transfer_matrix(quad) == factorized_transfer(ring, a)
        ok = ok and shifted_p_identity(a, ring)
        return ok, {}
    return _run("identities", ring, k, predicate, samples, seed, exhaustive_limit, shard_index, shard_count)


def symbolic_identity_check(k_max: Optional[int] = None) -> List[IdentityReport]:
    """Identity reports over the free ring for k = 0..k_max"""
    k_max = get_settings().continuants.symbolic_max_k if k_max is None else k_max
    return [check_identities(free_quad(k)) for k in range(k_max + 1)]


def transfer_sweep(ring: Ring, k: int, samples: Optional[int] = None, seed: int = 0,
                   exhaustive_limit: Optional[int] = None) -> SweepReport:
    def predicate(a):
        result = op_transfer_invertibility(a, ring)
        return result.holds, {"invertible": int(result.q_invertible)}
    return _run("invertibility-transfer", ring, k, predicate, samples, seed, exhaustive_limit)


def zero_transfer_sweep(ring: Ring, k: int, samples: Optional[int] = None, seed: int = 0,
                        exhaustive_limit: Optional[int] = None) -> SweepReport:
    def predicate(a):
        result = zero_transfer(a, ring)
        return result.holds, {"zero": int(result.q_zero)}
    return _run("zero-transfer", ring, k, predicate, samples, seed, exhaustive_limit)


def det_sweep(ring: Ring, k: int, samples: Optional[int] = None, seed: int = 0,
              exhaustive_limit: Optional[int] = None) -> SweepReport:
    def predicate(a):
        return det_equality(a, ring), {}
    return _run("det-equality", ring, k, predicate, samples, seed, exhaustive_limit)
