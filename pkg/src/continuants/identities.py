"""
The seven continuant identity families, checked at every index 1..k.
"""

from dataclasses import asdict, dataclass, field
from typing import Callable, Dict, List, Optional

from ..ring_core import RingElement
from .quad import ContinuantQuad, sign


IdentityCheck = Callable[[ContinuantQuad, int], bool]


def _sign_check(lhs: Callable[[ContinuantQuad, int], RingElement]) -> IdentityCheck:
    return lambda quad, j: lhs(quad, j) == sign(quad.ring, j)


# name -> (statement, check(quad, j))
IDENTITIES: Dict[str, tuple] = {
    "i": ("P_k Qop_k = Q_k Pop_k",
          lambda t, j: t.p(j) * t.qop(j) == t.q(j) * t.pop(j)),
    "ii": ("P_{k-1} Qop_k - Q_{k-1} Pop_k = (-1)^k",
           _sign_check(lambda t, j: t.p(j - 1) * t.qop(j) - t.q(j - 1) * t.pop(j))),
    "iii": ("Q_k Pop_{k-1} - P_k Qop_{k-1} = (-1)^k",
            _sign_check(lambda t, j: t.q(j) * t.pop(j - 1) - t.p(j) * t.qop(j - 1))),
    "op-a": ("Qop_k P_{k-1} - Qop_{k-1} P_k = (-1)^k",
             _sign_check(lambda t, j: t.qop(j) * t.p(j - 1) - t.qop(j - 1) * t.p(j))),
    "op-b": ("Pop_{k-1} Q_k - Pop_k Q_{k-1} = (-1)^k",
             _sign_check(lambda t, j: t.pop(j - 1) * t.q(j) - t.pop(j) * t.q(j - 1))),
    "op-c": ("Qop_k Q_{k-1} = Qop_{k-1} Q_k",
             lambda t, j: t.qop(j) * t.q(j - 1) == t.qop(j - 1) * t.q(j)),
    "op-d": ("Pop_k P_{k-1} = Pop_{k-1} P_k",
             lambda t, j: t.pop(j) * t.p(j - 1) == t.pop(j - 1) * t.p(j)),
}


@dataclass
class IdentityResult:
    name: str
    statement: str
    passed: bool
    failing_k: Optional[int] = None


@dataclass
class IdentityReport:
    ring: str
    k: int
    results: List[IdentityResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> List[IdentityResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        return {"ring": self.ring, "k": self.k, "passed": self.passed,
                "results": [asdict(r) for r in self.results]}


def check_identities(quad: ContinuantQuad) -> IdentityReport:
    """
    Evaluate every identity family for j = 1..k.

    Failure is data: the report names the first failing index per family.
    k = 0 passes vacuously.
    """
    report = IdentityReport(ring=str(quad.ring), k=quad.k)
    for name, (statement, check) in IDENTITIES.items():
        failing = next((j for j in range(1, quad.k + 1) if not check(quad, j)), None)
        report.results.append(IdentityResult(name, statement, failing is None, failing))
    return report
