"""
Run manifests and the on-disk artifact store.

Every command writes one JSON document ``{"manifest": ..., "certificate": ...}``
(or ``"report"`` for non-certificate output) to
``<output>/certs/<ring>/<command>/<hash>.json``. The hash covers the manifest
without its timestamps and raw command line, so identical runs land on the
same file.
"""

import hashlib
import json
import re
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional

from dataclasses_json import dataclass_json
from loguru import logger

from .. import __version__
from ..errors import CertificateSchemaError
from ..unit_translate.certificates import WitnessCertificate, certificate_from_dict, certificate_to_dict

# left out of the manifest hash
VOLATILE_FIELDS = ("argv", "started_at", "finished_at")


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


@dataclass_json
@dataclass
class RunManifest:
    """Everything needed to re-run a command to the same verdict"""
    command: str
    ring: Optional[str] = None
    args: Dict[str, Any] = field(default_factory=dict)
    seed: Optional[int] = None
    shards: int = 1
    shard_id: Optional[int] = None
    version: str = __version__
    argv: List[str] = field(default_factory=list)
    started_at: str = field(default_factory=_now)
    finished_at: str = ""

    def finish(self) -> "RunManifest":
        self.finished_at = _now()
        return self

    def identity(self) -> Dict[str, Any]:
        data = self.to_dict()
        for key in VOLATILE_FIELDS:
            data.pop(key, None)
        return data

    def digest(self) -> str:
        canonical = json.dumps(self.identity(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


@dataclass
class StoredArtifact:
    path: Path
    manifest: RunManifest
    certificate: Optional[WitnessCertificate] = None
    report: Optional[Dict[str, Any]] = None


def slug(text: str) -> str:
    """Filesystem-safe form of a ring descriptor or command name"""
    return re.sub(r"[^A-Za-z0-9]+", "_", text).strip("_") or "none"


class CertificateStore:
    """Append-only JSON store rooted at the output directory"""

    def __init__(self, root: str):
        self.root = Path(root)

    def path_for(self, manifest: RunManifest) -> Path:
        return (self.root / "certs" / slug(manifest.ring or "none") / slug(manifest.command)
                / f"{manifest.digest()}.json")

    def save(self, manifest: RunManifest, certificate: Optional[WitnessCertificate] = None,
             report: Optional[Dict[str, Any]] = None) -> Path:
        """
        Write one artifact; certificates are schema-checked before writing.

        Raises:
            CertificateSchemaError: if the certificate fails validation
        """
        document: Dict[str, Any] = {"manifest": manifest.to_dict()}
        if certificate is not None:
            document["certificate"] = certificate_to_dict(certificate)
        if report is not None:
            document["report"] = report
        path = self.path_for(manifest)
        path.parent.mkdir(parents=True, exist_ok=True)
        if path.exists():
            logger.debug(f"Overwriting artifact with identical manifest {path}")
        with open(path, "w") as f:
            json.dump(document, f, indent=2, sort_keys=True)
        logger.info(f"Saved {manifest.command} artifact to {path}")
        return path

    def list(self, command: Optional[str] = None) -> List[Path]:
        pattern = f"certs/*/{slug(command)}/*.json" if command else "certs/*/*/*.json"
        return sorted(self.root.glob(pattern))


def load_artifact(path: str) -> StoredArtifact:
    """
    Read an artifact back; a bare certificate document (no manifest) is
    accepted too and gets a manifest rebuilt from the certificate fields.

    Raises:
        CertificateSchemaError: if the file is not valid JSON or the
            certificate fails validation
    """
    try:
        with open(path, "r") as f:
            document = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise CertificateSchemaError(f"Cannot read artifact {path}: {e}") from e
    if not isinstance(document, dict):
        raise CertificateSchemaError(f"Artifact {path} is not a JSON object")

    if "manifest" not in document:
        certificate = certificate_from_dict(document)
        manifest = RunManifest(command=certificate.command, ring=certificate.ring)
        return StoredArtifact(Path(path), manifest, certificate=certificate)

    try:
        manifest = RunManifest.from_dict(document["manifest"])
    except (KeyError, TypeError) as e:
        raise CertificateSchemaError(f"Invalid manifest in {path}: {e}") from e
    certificate = None
    if "certificate" in document:
        certificate = certificate_from_dict(document["certificate"])
    return StoredArtifact(Path(path), manifest, certificate=certificate, report=document.get("report"))
