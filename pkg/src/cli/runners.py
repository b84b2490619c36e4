"""
Certificate-producing commands as plain functions of their manifest
arguments, shared by the CLI and by replay so a stored manifest re-runs
exactly the code that produced it.
"""

from typing import Any, Callable, Dict, Optional

from joblib import Parallel, delayed
from loguru import logger

from ..config import get_settings
from ..errors import CertificateSchemaError
from ..ring_core import ring_from_text
from ..unit_translate import (WitnessCertificate, WitnessOrder, check_gui, failure_family_Antn,
                              failure_family_Atwh, merge_shards, verify_prop_Bone)
from ..unit_translate.search import check_instance, orbit_representatives


def resolve_samples(ring_text: str, k: int, exhaustive: bool, samples: Optional[int]) -> Optional[int]:
    """
    The sample count a ``gui check`` run will use: None for exhaustive runs,
    the configured default when the tuple space is over the exhaustive limit
    and neither mode was asked for.
    """
    if exhaustive or samples is not None:
        return None if exhaustive else samples
    ring = ring_from_text(ring_text)
    settings = get_settings().search
    raw = len(orbit_representatives(ring)) * ring.size ** max(k - 2, 0)
    if raw > settings.exhaustive_limit:
        logger.warning(f"{raw} tuples over {ring_text} exceed the exhaustive limit, "
                       f"sampling {settings.default_samples}")
        return settings.default_samples
    return None


def _check_shard(ring_text: str, k: int, order: str, samples: Optional[int], seed: int, shards: int,
                 shard_id: int) -> WitnessCertificate:
    return check_gui(ring_from_text(ring_text), k, WitnessOrder(order), samples=samples, seed=seed,
                     shards=shards, shard_id=shard_id)


def run_gui_check(args: Dict[str, Any], jobs: int = 1, timeout: Optional[float] = None) -> WitnessCertificate:
    """
    args: ring, k, order, seed and either ``values`` (one instance) or
    samples/shards/shard_id. With shards > 1 and no shard_id every shard is
    run and the results merged.
    """
    ring_text, order, seed = args["ring"], args.get("order", WitnessOrder.SUBFIELD_FIRST.value), args.get("seed", 0)
    if args.get("values") is not None:
        ring = ring_from_text(ring_text)
        values = [ring.parse_value(v) for v in args["values"]]
        return check_instance(ring, values, WitnessOrder(order), seed=seed)

    k, samples, shards = args["k"], args.get("samples"), args.get("shards", 1)
    shard_id = args.get("shard_id")
    if shard_id is not None or shards == 1:
        return _check_shard(ring_text, k, order, samples, seed, shards, shard_id or 0)
    parts = Parallel(n_jobs=jobs, timeout=timeout)(
        delayed(_check_shard)(ring_text, k, order, samples, seed, shards, i) for i in range(shards))
    return merge_shards(parts)


def run_gui_bone(args: Dict[str, Any], jobs: int = 1, timeout: Optional[float] = None) -> WitnessCertificate:
    return verify_prop_Bone(args["n"], samples=args.get("samples"), seed=args.get("seed", 0), jobs=jobs,
                            shard_bits=args.get("shard_bits"), timeout=timeout)


def run_family_antn(args: Dict[str, Any], jobs: int = 1, timeout: Optional[float] = None) -> WitnessCertificate:
    return failure_family_Antn(args["n"], args["q"])


def run_family_atwh(args: Dict[str, Any], jobs: int = 1, timeout: Optional[float] = None) -> WitnessCertificate:
    base = ring_from_text(args["base"])
    a = None if args.get("a") is None else base.parse_value(args["a"])
    return failure_family_Atwh(base, args["n"], a)


RUNNERS: Dict[str, Callable[..., WitnessCertificate]] = {
    "gui check": run_gui_check,
    "gui bone": run_gui_bone,
    "gui families antn": run_family_antn,
    "gui families atwh": run_family_atwh,
}


def run(command: str, args: Dict[str, Any], jobs: int = 1, timeout: Optional[float] = None) -> WitnessCertificate:
    """
    Raises:
        CertificateSchemaError: if ``command`` does not produce certificates
    """
    runner = RUNNERS.get(command)
    if runner is None:
        raise CertificateSchemaError(f"No runner for command {command!r}")
    return runner(args, jobs=jobs, timeout=timeout)
