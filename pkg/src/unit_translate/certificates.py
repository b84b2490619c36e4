"""
Witness certificates for unit-translate searches.

A certificate is a JSON document that can be re-verified without the code
that produced it: a witness is re-checked directly, an exhausted failure is
re-scanned in the opposite unit order.
"""

from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum
from typing import Any, Dict, List, Optional

import jsonschema
from dataclasses_json import dataclass_json
from loguru import logger

from .. import __version__
from ..errors import CertificateSchemaError
from ..ring_core import Ring, ring_from_text
from ..ring_core.units import units

SCHEMA_VERSION = 1


class Verdict(Enum):
    WITNESS = "witness"
    EXHAUSTED_FAILURE = "exhausted-failure"
    SAMPLED_PASS = "sampled-pass"
    EXHAUSTIVE_PASS = "exhaustive-pass"
    NOT_APPLICABLE = "not-applicable"


@dataclass_json
@dataclass
class Normalization:
    """x -> left * x * right applied to every slot"""
    left: Any
    right: Any
    slot: int = 0


@dataclass_json
@dataclass
class SearchStats:
    tested: int = 0
    witnessed: int = 0
    elapsed_ms: int = 0
    scan_order: str = "subfield-first"


@dataclass_json
@dataclass
class Provenance:
    version: str = __version__
    seed: Optional[int] = None
    samples: Optional[int] = None
    shards: int = 1
    shard_id: int = 0
    created_at: str = ""


@dataclass_json
@dataclass
class WitnessCertificate:
    """
    Outcome of a search for a unit u with u + s_i a unit for every s_i.

    For a single instance ``values`` holds the tuple and ``witness`` the unit;
    for an aggregate run ``values`` holds the first failing tuple, if any.
    """
    command: str
    ring: str
    k: int
    verdict: str
    values: Optional[List[Any]] = None
    witness: Optional[Any] = None
    normalization: Optional[Normalization] = None
    stats: SearchStats = field(default_factory=SearchStats)
    provenance: Provenance = field(default_factory=Provenance)
    details: Dict[str, Any] = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    @property
    def kind(self) -> Verdict:
        return Verdict(self.verdict)

    @property
    def passed(self) -> bool:
        return self.kind in (Verdict.WITNESS, Verdict.SAMPLED_PASS, Verdict.EXHAUSTIVE_PASS)

    def stamp(self) -> "WitnessCertificate":
        self.provenance.created_at = datetime.now(timezone.utc).isoformat()
        return self


CERTIFICATE_SCHEMA = {
    "type": "object",
    "required": ["schema_version", "command", "ring", "k", "verdict", "stats", "provenance"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "command": {"type": "string"},
        "ring": {"type": "string"},
        "k": {"type": "integer", "minimum": 1},
        "verdict": {"enum": [v.value for v in Verdict]},
        "values": {"type": ["array", "null"]},
        "witness": {},
        "normalization": {
            "type": ["object", "null"],
            "required": ["left", "right"],
        },
        "stats": {
            "type": "object",
            "required": ["tested", "elapsed_ms"],
            "properties": {
                "tested": {"type": "integer", "minimum": 0},
                "witnessed": {"type": "integer", "minimum": 0},
                "elapsed_ms": {"type": "integer", "minimum": 0},
                "scan_order": {"type": "string"},
            },
        },
        "provenance": {
            "type": "object",
            "required": ["version"],
            "properties": {
                "version": {"type": "string"},
                "seed": {"type": ["integer", "null"]},
                "samples": {"type": ["integer", "null"]},
                "shards": {"type": "integer", "minimum": 1},
                "shard_id": {"type": "integer", "minimum": 0},
            },
        },
        "details": {"type": "object"},
    },
    "allOf": [
        {
            "if": {"properties": {"verdict": {"const": Verdict.WITNESS.value}}},
            "then": {"required": ["values", "witness"],
                     "properties": {"values": {"type": "array"}}},
        },
    ],
}


def validate_certificate(data: dict) -> None:
    """
    Raises:
        CertificateSchemaError: if ``data`` does not match CERTIFICATE_SCHEMA
    """
    try:
        jsonschema.validate(instance=data, schema=CERTIFICATE_SCHEMA)
    except jsonschema.ValidationError as e:
        raise CertificateSchemaError(f"Invalid certificate: {e.message}") from e


def certificate_to_dict(cert: WitnessCertificate) -> dict:
    data = cert.to_dict()
    validate_certificate(data)
    return data


def certificate_from_dict(data: dict) -> WitnessCertificate:
    validate_certificate(data)
    return WitnessCertificate.from_dict(data)


def is_witness(ring: Ring, u, values) -> bool:
    return ring.is_unit(u) and all(ring.is_unit(ring.add(u, s)) for s in values)


def reverify(cert: WitnessCertificate) -> bool:
    """
    Check a single-instance certificate from its serialized values only.

    Witnesses are re-checked with try_invert; exhausted failures are re-scanned
    over every unit in reverse enumeration order. Aggregate verdicts are not
    handled here; replay re-runs them.
    """
    ring = ring_from_text(cert.ring)
    if cert.kind == Verdict.WITNESS:
        values = [ring.parse_value(v) for v in cert.values]
        u = ring.parse_value(cert.witness)
        ok = ring.try_invert(u) is not None and all(
            ring.try_invert(ring.add(u, s)) is not None for s in values)
        logger.debug(f"witness re-check over {ring}: {ok}")
        return ok
    if cert.kind == Verdict.EXHAUSTED_FAILURE and cert.values is not None:
        values = [ring.parse_value(v) for v in cert.values]
        found = next((u for u in reversed(units(ring)) if is_witness(ring, u, values)), None)
        if found is not None:
            logger.error(f"reverse scan over {ring} found witness {ring.format_value(found)}")
        return found is None
    raise CertificateSchemaError(f"verdict {cert.verdict} has no instance-level re-check")
