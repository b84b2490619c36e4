"""
Replay of stored certificates.

A witness is re-checked directly. Every other verdict is re-run from its
manifest and compared with the stored body; an exhausted failure is also
re-scanned in reverse unit order. Any divergence means the artifact is
corrupt.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from deepdiff import DeepDiff
from loguru import logger

from ..errors import CertificateCorruptionError, CertificateSchemaError
from ..unit_translate import Verdict, certificate_to_dict, reverify
from .artifacts import StoredArtifact, load_artifact
from .runners import RUNNERS, run

# never compared between runs
VOLATILE_PATHS = [r"\['created_at'\]", r"\['elapsed_ms'\]"]


@dataclass
class ReplayResult:
    path: str
    command: str
    verdict: str
    methods: List[str] = field(default_factory=list)
    differences: Dict[str, Any] = field(default_factory=dict)

    @property
    def matches(self) -> bool:
        return not self.differences

    def to_dict(self) -> dict:
        return {"path": self.path, "command": self.command, "verdict": self.verdict,
                "methods": self.methods, "matches": self.matches, "differences": self.differences}


def compare_certificates(stored: dict, fresh: dict) -> Dict[str, Any]:
    """Differences between two certificate bodies, ignoring timestamps and timings"""
    diff = DeepDiff(stored, fresh, exclude_regex_paths=VOLATILE_PATHS, ignore_order=False)
    return diff.to_dict() if diff else {}


def replay_artifact(artifact: StoredArtifact, jobs: int = 1, timeout: Optional[float] = None) -> ReplayResult:
    """
    Raises:
        CertificateSchemaError: if the artifact holds no certificate
        CertificateCorruptionError: if re-verification or the re-run diverges
    """
    cert = artifact.certificate
    if cert is None:
        raise CertificateSchemaError(f"{artifact.path} holds no certificate")
    result = ReplayResult(path=str(artifact.path), command=cert.command, verdict=cert.verdict)

    if cert.kind == Verdict.WITNESS:
        result.methods.append("witness-recheck")
        if not reverify(cert):
            raise CertificateCorruptionError(f"witness in {artifact.path} does not verify")
        logger.info(f"Replayed {artifact.path}: witness re-verified")
        return result

    if cert.kind == Verdict.EXHAUSTED_FAILURE and cert.values is not None:
        result.methods.append("reverse-scan")
        if not reverify(cert):
            raise CertificateCorruptionError(f"failing tuple in {artifact.path} has a witness")

    if artifact.manifest.command in RUNNERS and artifact.manifest.args:
        result.methods.append("rerun")
        fresh = run(artifact.manifest.command, artifact.manifest.args, jobs=jobs, timeout=timeout)
        result.differences = compare_certificates(certificate_to_dict(cert), certificate_to_dict(fresh))
        if result.differences:
            logger.error(f"Replay of {artifact.path} diverged: {result.differences}")
            raise CertificateCorruptionError(f"re-run of {artifact.path} diverged from the stored certificate")
    elif not result.methods:
        raise CertificateSchemaError(f"{artifact.path} has no manifest to re-run verdict {cert.verdict}")

    logger.info(f"Replayed {artifact.path}: {', '.join(result.methods)} agree on {cert.verdict}")
    return result


def replay(path: str, jobs: int = 1, timeout: Optional[float] = None) -> ReplayResult:
    return replay_artifact(load_artifact(path), jobs=jobs, timeout=timeout)
