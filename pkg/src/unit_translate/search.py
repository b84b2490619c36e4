"""
Searches for units u with every u + s_i a unit.

Tuples are first normalized with two-sided unit multiplication x -> U x V,
which maps units to units and so never changes whether a witness exists.
One slot is brought to a canonical orbit representative (rank normal form
for matrices over a field, 1 for nonzero field elements) and, when the unit
group is small, a second slot is reduced modulo the stabilizer of the first.
"""

import itertools
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np
from loguru import logger

from ..config import get_settings
from ..errors import PreconditionError, SearchBudgetExceededError
from ..ring_core import MatrixRing, ProductRing, Ring
from ..ring_core.canonical import rank_decomposition, rank_normal_form
from ..ring_core.units import maximal_subfield, sample_units, unit_count, units
from .certificates import (Normalization, Provenance, SearchStats, Verdict, WitnessCertificate,
                           is_witness)


# unit groups past this size are sampled before the full list is built
LARGE_UNIT_GROUP = 100_000


class WitnessOrder(Enum):
    SUBFIELD_FIRST = "subfield-first"
    UNITS = "units"
    RANDOM = "random"


@dataclass
class SlotNormalization:
    """rep = left * value * right"""
    rep: Any
    left: Any
    right: Any


def _has_subfield(ring: Ring) -> bool:
    return isinstance(ring, MatrixRing) and ring.inner.is_field and ring.n >= 2


def normalize_slot(ring: Ring, x) -> SlotNormalization:
    """Canonical representative of x under x -> U x V with U, V units"""
    one = ring.one
    if isinstance(ring, MatrixRing) and ring.inner.is_field:
        X, Y, r = rank_decomposition(ring, x)
        return SlotNormalization(rank_normal_form(ring.n, r, ring.inner).value, X, Y)
    if isinstance(ring, ProductRing):
        parts = [normalize_slot(f, a) for f, a in zip(ring.factors, x)]
        return SlotNormalization(tuple(p.rep for p in parts), tuple(p.left for p in parts),
                                 tuple(p.right for p in parts))
    if ring.is_field:
        if x == ring.zero:
            return SlotNormalization(ring.zero, one, one)
        return SlotNormalization(one, ring.try_invert(x), one)
    if ring.is_commutative and ring.is_finite:
        best = min(((ring.mul(u, x), u) for u in units(ring)), key=lambda p: repr(p[0]))
        return SlotNormalization(best[0], best[1], one)
    return SlotNormalization(x, one, one)


def orbit_representatives(ring: Ring) -> List:
    """One element per orbit of x -> U x V"""
    if isinstance(ring, MatrixRing) and ring.inner.is_field:
        return [rank_normal_form(ring.n, r, ring.inner).value for r in range(ring.n + 1)]
    if isinstance(ring, ProductRing):
        return list(itertools.product(*(orbit_representatives(f) for f in ring.factors)))
    if ring.is_field:
        return [ring.zero, ring.one]
    if ring.is_commutative and ring.is_finite:
        return list(dict.fromkeys(normalize_slot(ring, x).rep for x in ring.elements()))
    return list(ring.elements())


def normalize_tuple(ring: Ring, values: Sequence, slot: int = 0) -> Tuple[List, Normalization]:
    """Apply the normalization of ``values[slot]`` to every slot"""
    if not values:
        return [], Normalization(ring.one, ring.one, slot)
    norm = normalize_slot(ring, values[slot])
    moved = [ring.mul(ring.mul(norm.left, s), norm.right) for s in values]
    return moved, Normalization(norm.left, norm.right, slot)


def stabilizer(ring: Ring, x) -> List[Tuple[Any, Any]]:
    """Pairs (U, V) of units with U x V = x"""
    unit_values = units(ring)
    return [(U, V) for U in unit_values for V in unit_values if ring.mul(ring.mul(U, x), V) == x]


def stabilizer_orbit_reps(ring: Ring, pairs: List[Tuple[Any, Any]]) -> List:
    """One element per orbit of the stabilizer acting on the whole ring"""
    assigned = set()
    reps = []
    for y in ring.elements():
        if y in assigned:
            continue
        reps.append(y)
        assigned.update(ring.mul(ring.mul(U, y), V) for U, V in pairs)
    return reps


def witness_pool(ring: Ring, order: WitnessOrder = WitnessOrder.SUBFIELD_FIRST,
                 rng: Optional[np.random.Generator] = None, budget: int = 256) -> Iterator:
    """
    Candidate units in scan order.

    SUBFIELD_FIRST scans the nonzero elements of a maximal subfield before the
    full unit list; RANDOM draws ``budget`` random units first. Every order
    ends with the complete unit list, so an empty scan is an exhaustive one.
    """
    if order == WitnessOrder.SUBFIELD_FIRST:
        if _has_subfield(ring):
            yield from maximal_subfield(ring.n, ring.inner.size).nonzero_elements()
        if unit_count(ring) > LARGE_UNIT_GROUP:
            yield from sample_units(ring, rng or np.random.default_rng(0), budget)
    elif order == WitnessOrder.RANDOM:
        yield from sample_units(ring, rng or np.random.default_rng(0), budget)
    yield from units(ring)


def find_witness(ring: Ring, values: Sequence, order: WitnessOrder = WitnessOrder.SUBFIELD_FIRST,
                 rng: Optional[np.random.Generator] = None) -> Optional[Any]:
    """A unit u with u + s a unit for every s in ``values``, or None"""
    for u in witness_pool(ring, order, rng):
        if all(ring.is_unit(ring.add(u, s)) for s in values):
            return u
    return None


def _elapsed_ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def check_instance(ring: Ring, values: Sequence, order: WitnessOrder = WitnessOrder.SUBFIELD_FIRST,
                   normalize: bool = True, seed: int = 0) -> WitnessCertificate:
    """
    Search one tuple and certify the outcome.

    The witness is reported for the tuple as given; when ``normalize`` is set
    the search runs on the normalized tuple and the witness is pulled back.
    """
    ring.require_finite()
    start = time.perf_counter()
    values = list(values)
    norm = None
    search_values = values
    if normalize and values:
        search_values, norm = normalize_tuple(ring, values)

    rng = np.random.default_rng(seed) if order == WitnessOrder.RANDOM else None
    u = find_witness(ring, search_values, order, rng)
    f = ring.format_value
    cert = WitnessCertificate(
        command="gui check", ring=str(ring), k=len(values) + 1,
        verdict=Verdict.EXHAUSTED_FAILURE.value if u is None else Verdict.WITNESS.value,
        values=[f(s) for s in values],
        stats=SearchStats(tested=1, witnessed=0 if u is None else 1, scan_order=order.value),
        provenance=Provenance(seed=seed if order == WitnessOrder.RANDOM else None),
    )
    if norm is not None:
        cert.normalization = Normalization(f(norm.left), f(norm.right), norm.slot)
        if u is not None:
            # U (w + s) V = U w V + U s V
            u = ring.mul(ring.mul(ring.try_invert(norm.left), u), ring.try_invert(norm.right))
    if u is not None:
        cert.witness = f(u)
    cert.stats.elapsed_ms = _elapsed_ms(start)
    return cert.stamp()


def stabilizer_dedup_enabled(ring: Ring, k: int) -> bool:
    """
    Default for second-slot stabilizer reduction. Needs k >= 3 and
    |U|^2 <= search.stabilizer_limit, because stabilizers are found by
    scanning all pairs (U, V). With the default limit it is on for
    M_2 F_3 and M_3 F_2 and off for M_4 F_2.
    """
    return k >= 3 and unit_count(ring) ** 2 <= get_settings().search.stabilizer_limit


def tuple_space(ring: Ring, k: int, dedup: Optional[bool] = None) -> Iterator[Tuple]:
    """
    Every (k-1)-tuple up to normalization: the first slot runs over orbit
    representatives and the rest over multisets of ring elements, the second
    slot optionally reduced modulo the stabilizer of the first.
    """
    elements = list(ring.elements())
    if dedup is None:
        dedup = stabilizer_dedup_enabled(ring, k)
    for rep in orbit_representatives(ring):
        if k == 2:
            yield (rep,)
            continue
        if not dedup:
            for rest in itertools.combinations_with_replacement(elements, k - 2):
                yield (rep,) + rest
            continue
        seconds = stabilizer_orbit_reps(ring, stabilizer(ring, rep))
        logger.debug(f"{len(seconds)} second-slot orbits for representative {ring.format_value(rep)}")
        for second in seconds:
            for rest in itertools.combinations_with_replacement(elements, k - 3):
                yield (rep, second) + rest


def sampled_tuples(ring: Ring, k: int, samples: int, seed: int, shard_id: int = 0,
                   shards: int = 1) -> Iterator[Tuple]:
    rng = np.random.default_rng([seed, shard_id])
    count = samples // shards + (1 if shard_id < samples % shards else 0)
    for _ in range(count):
        yield tuple(ring.random_value(rng) for _ in range(k - 1))


def check_gui(ring: Ring, k: int, order: WitnessOrder = WitnessOrder.SUBFIELD_FIRST,
              samples: Optional[int] = None, seed: int = 0, shards: int = 1, shard_id: int = 0,
              dedup: Optional[bool] = None, limit: Optional[int] = None) -> WitnessCertificate:
    """
    Decide whether every (k-1)-tuple of ``ring`` has a common unit translate.

    Args:
        ring: a finite ring
        k: the property index, at least 2
        order: witness scan order
        samples: sample this many random tuples instead of enumerating
        seed: seed for sampled tuples and random witness order
        shards: split the tuple stream into this many slices
        shard_id: the slice to run
        dedup: reduce the second slot modulo a stabilizer (default from config)
        limit: refuse exhaustive runs over more than ``limit`` raw tuples

    Returns:
        WitnessCertificate: exhaustive-pass, sampled-pass, or exhausted-failure
        with the first failing (normalized) tuple

    Raises:
        PreconditionError: if k < 2 or the shard layout is invalid
        SearchBudgetExceededError: if the exhaustive tuple space is too large
    """
    ring.require_finite()
    if k < 2:
        raise PreconditionError("the unit-translate property needs k >= 2")
    if shards < 1 or not 0 <= shard_id < shards:
        raise PreconditionError(f"invalid shard {shard_id} of {shards}")
    limit = get_settings().search.exhaustive_limit if limit is None else limit

    start = time.perf_counter()
    if samples is None:
        raw = len(orbit_representatives(ring)) * ring.size ** (k - 2)
        if raw > limit:
            raise SearchBudgetExceededError(
                f"{raw} normalized tuples over {ring} exceed the exhaustive limit {limit}")
        space = itertools.islice(tuple_space(ring, k, dedup), shard_id, None, shards)
        mode = "exhaustive"
    else:
        space = sampled_tuples(ring, k, samples, seed, shard_id, shards)
        mode = "sampled"
    logger.info(f"gui check over {ring}, k={k}: {mode} scan, order {order.value}")

    rng = np.random.default_rng([seed, shard_id, 1])
    stats = SearchStats(scan_order=order.value)
    failure = None
    for values in space:
        if mode == "sampled":
            values, _ = normalize_tuple(ring, list(values))
        stats.tested += 1
        if find_witness(ring, values, order, rng) is None:
            failure = list(values)
            break
        stats.witnessed += 1
    stats.elapsed_ms = _elapsed_ms(start)

    if failure is not None:
        verdict = Verdict.EXHAUSTED_FAILURE
    else:
        verdict = Verdict.EXHAUSTIVE_PASS if mode == "exhaustive" else Verdict.SAMPLED_PASS
    cert = WitnessCertificate(
        command="gui check", ring=str(ring), k=k, verdict=verdict.value,
        values=None if failure is None else [ring.format_value(s) for s in failure],
        stats=stats,
        provenance=Provenance(seed=seed, samples=samples, shards=shards, shard_id=shard_id),
        details={"mode": mode},
    )
    logger.info(f"gui check over {ring}, k={k}: {verdict.value} after {stats.tested} tuples")
    return cert.stamp()


def satisfies_gui(ring: Ring, k: int, **kwargs) -> bool:
    return check_gui(ring, k, **kwargs).passed


def merge_shards(certs: Iterable[WitnessCertificate]) -> WitnessCertificate:
    """Combine shard certificates of one run; the aggregate needs every shard to pass"""
    certs = sorted(certs, key=lambda c: c.provenance.shard_id)
    if not certs:
        raise PreconditionError("no shard certificates to merge")
    shards = certs[0].provenance.shards
    if [c.provenance.shard_id for c in certs] != list(range(shards)):
        raise PreconditionError(f"expected shards 0..{shards - 1}")
    failed = next((c for c in certs if not c.passed), None)
    verdict = certs[0].verdict if failed is None else failed.verdict
    stats = SearchStats(tested=sum(c.stats.tested for c in certs),
                        witnessed=sum(c.stats.witnessed for c in certs),
                        elapsed_ms=sum(c.stats.elapsed_ms for c in certs),
                        scan_order=certs[0].stats.scan_order)
    return WitnessCertificate(
        command=certs[0].command, ring=certs[0].ring, k=certs[0].k, verdict=verdict,
        values=None if failed is None else failed.values, stats=stats,
        provenance=Provenance(seed=certs[0].provenance.seed, samples=certs[0].provenance.samples,
                              shards=1, shard_id=0),
        details=dict(certs[0].details, merged_shards=shards),
    ).stamp()


def unit_difference_set(ring: Ring) -> frozenset:
    """V(R) = {u - v : u, v units}"""
    unit_values = units(ring)
    return frozenset(ring.sub(u, v) for u in unit_values for v in unit_values)


def is_two_good(ring: Ring) -> bool:
    """Every element is a sum of two units, i.e. V(R) = R"""
    ring.require_finite()
    return len(unit_difference_set(ring)) == ring.size


def witness_table(ring: Ring, values: Sequence) -> Dict[str, List]:
    """All witnesses for one tuple; handy for small rings and tests"""
    f = ring.format_value
    return {"values": [f(s) for s in values],
            "witnesses": [f(u) for u in units(ring) if is_witness(ring, u, values)]}
