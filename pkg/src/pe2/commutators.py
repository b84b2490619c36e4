"""
Commutator identities in E(2,R) and solvers for translations rbs - b = a.
"""

import itertools
from dataclasses import asdict, dataclass, field
from typing import Any, List, Optional

import numpy as np
from loguru import logger

from ..ring_core import MatrixRing, Ring
from ..ring_core.canonical import companion
from ..ring_core.units import central_units, units
from .generators import M2, PE2Element, as_matrix, m2_prod, m_matrix, t_matrix
from .groups import derived_subgroup, pe_group
from .multipliers import multiplier_word


def lower_matrix(ring: Ring, a) -> M2:
    return (ring.one, ring.zero, a, ring.one)


def rotation(ring: Ring) -> M2:
    """((0, -1), (1, 0))"""
    return (ring.zero, ring.neg(ring.one), ring.one, ring.zero)


def rotation_inverse(ring: Ring) -> M2:
    return (ring.zero, ring.one, ring.neg(ring.one), ring.zero)


def translation_commutator(ring: Ring, r, s, b) -> bool:
    """diag(r, s^{-1}) t_b diag(r^{-1}, s) t_{-b} = t_{rbs - b}"""
    lhs = m2_prod(ring, [m_matrix(ring, r, ring.try_invert(s)), t_matrix(ring, b),
                         m_matrix(ring, ring.try_invert(r), s), t_matrix(ring, ring.neg(b))])
    rbs = ring.mul(ring.mul(r, b), s)
    return lhs == t_matrix(ring, ring.sub(rbs, b))


def translation_rotation(ring: Ring, a) -> bool:
    """t_a ((0,-1),(1,0)) = ((a,-1),(1,0))"""
    lhs = m2_prod(ring, [t_matrix(ring, a), rotation(ring)])
    return lhs == (a, ring.neg(ring.one), ring.one, ring.zero)


def swap_product(ring: Ring) -> bool:
    """((1,0),(1,1)) j ((1,0),(-1,1)) j = ((1,-1),(1,0))"""
    j = (ring.zero, ring.one, ring.one, ring.zero)
    lhs = m2_prod(ring, [lower_matrix(ring, ring.one), j, lower_matrix(ring, ring.neg(ring.one)), j])
    return lhs == (ring.one, ring.neg(ring.one), ring.one, ring.zero)


def square_root_of_minus_one(ring: Ring) -> Optional[Any]:
    minus_one = ring.neg(ring.one)
    return next((lam for lam in central_units(ring) if ring.mul(lam, lam) == minus_one), None)


def swap_from_central_root(ring: Ring, lam) -> bool:
    """
    With lam central and lam^2 = -1:
    ((1,0),(lam,1)) J ((1,0),(-lam,1)) J^{-1} = ((1,lam),(lam,0)) and
    t_lam times that is lam j.
    """
    x = m2_prod(ring, [lower_matrix(ring, lam), rotation(ring),
                       lower_matrix(ring, ring.neg(lam)), rotation_inverse(ring)])
    if x != (ring.one, lam, lam, ring.add(ring.one, ring.mul(lam, lam))):
        return False
    if x != (ring.one, lam, lam, ring.zero):
        return False
    return m2_prod(ring, [t_matrix(ring, lam), x]) == (ring.zero, lam, lam, ring.zero)


def rotation_in_derived(ring: Ring) -> bool:
    """((0,-1),(1,0)) lies in the derived subgroup of PE(2,R)"""
    return PE2Element.of(ring, rotation(ring)).matrix in derived_subgroup(pe_group(ring))


@dataclass
class TranslationSolution:
    a: Any
    r: Any
    s: Any
    b: Any
    method: str


def companion_unit(ring: MatrixRing):
    """
    Companion matrix A of x^n - x + 1; A and A - I = A^n are both invertible.
    """
    field = ring.inner
    n = ring.n
    coeffs = [field.one, field.neg(field.one)] + [field.zero] * (n - 2)
    return companion(coeffs, field).value


def solve_translation(ring: Ring, a, two_sided: bool = False) -> Optional[TranslationSolution]:
    """
    Find b and units r (and s) with r b s - b = a.

    Tries in order: the companion-matrix unit for matrix rings over fields,
    any unit r with r - 1 invertible (b = (r - 1)^{-1} a, s = 1), then a
    brute-force scan over r, b (and s when ``two_sided``).
    """
    ring.require_finite()
    one = ring.one
    if isinstance(ring, MatrixRing) and ring.inner.is_field and ring.n >= 2:
        r = companion_unit(ring)
        shifted_inv = ring.try_invert(ring.sub(r, one))
        if ring.is_unit(r) and shifted_inv is not None:
            return TranslationSolution(a, r, one, ring.mul(shifted_inv, a), "companion")
    for r in units(ring):
        shifted_inv = ring.try_invert(ring.sub(r, one))
        if shifted_inv is not None:
            return TranslationSolution(a, r, one, ring.mul(shifted_inv, a), "unit-shift")
    s_values = units(ring) if two_sided else [one]
    for r, s in itertools.product(units(ring), s_values):
        for b in ring.elements():
            if ring.sub(ring.mul(ring.mul(r, b), s), b) == a:
                return TranslationSolution(a, r, s, b, "search")
    return None


@dataclass
class CommutatorCheck:
    name: str
    statement: str
    passed: bool
    tested: int = 0


@dataclass
class CommutatorReport:
    ring: str
    seed: int
    checks: List[CommutatorCheck] = field(default_factory=list)
    rotation_in_derived: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"ring": self.ring, "seed": self.seed, "passed": self.passed,
                "checks": [asdict(c) for c in self.checks],
                "rotation_in_derived": self.rotation_in_derived}


def commutator_identities_check(ring: Ring, samples: int = 200, seed: int = 0,
                                with_groups: bool = True) -> CommutatorReport:
    """
    Matrix identities behind the commutator constructions, on sampled
    parameters, plus the 12-e word for a single commutator.
    """
    ring.require_finite()
    rng = np.random.default_rng(seed)
    unit_values = units(ring)
    report = CommutatorReport(ring=str(ring), seed=seed)

    def pick_unit():
        return unit_values[int(rng.integers(0, len(unit_values)))]

    def run(name: str, statement: str, trial) -> None:
        passed = all(trial() for _ in range(samples))
        report.checks.append(CommutatorCheck(name, statement, passed, samples))

    run("translation", "diag(r,s^-1) t_b diag(r^-1,s) t_-b = t_{rbs-b}",
        lambda: translation_commutator(ring, pick_unit(), pick_unit(), ring.random_value(rng)))
    run("rotation", "t_a ((0,-1),(1,0)) = ((a,-1),(1,0))",
        lambda: translation_rotation(ring, ring.random_value(rng)))
    report.checks.append(CommutatorCheck("swap", "((1,0),(1,1)) j ((1,0),(-1,1)) j = ((1,-1),(1,0))",
                                         swap_product(ring), 1))

    lam = square_root_of_minus_one(ring)
    if lam is not None:
        report.checks.append(CommutatorCheck(
            "central-root", "lam^2 = -1 turns the rotation commutator into lam j",
            swap_from_central_root(ring, lam), 1))

    def word_trial():
        x, y = pick_unit(), pick_unit()
        x_inv, y_inv = ring.try_invert(x), ring.try_invert(y)
        u = ring.mul(ring.mul(ring.mul(x_inv, y_inv), x), y)
        word = multiplier_word(ring, u, ring.one, [(x, y)])
        return word.e_count == 12 and as_matrix(ring, word.word) == PE2Element.of(
            ring, m_matrix(ring, u, ring.one))
    run("commutator-word", "diag([x,y], 1) is a product of 12 e's", word_trial)

    def solver_trial():
        a = ring.random_value(rng)
        sol = solve_translation(ring, a)
        if sol is None:
            return True
        return ring.sub(ring.mul(ring.mul(sol.r, sol.b), sol.s), sol.b) == a
    run("translation-solver", "solved translations satisfy rbs - b = a", solver_trial)

    if isinstance(ring, MatrixRing) and ring.inner.is_field and ring.n >= 2:
        a_mat = companion_unit(ring)
        ok = ring.is_unit(a_mat) and ring.is_unit(ring.sub(a_mat, ring.one))
        report.checks.append(CommutatorCheck("companion", "A and A - I invertible for x^n - x + 1", ok, 1))

    if with_groups:
        report.rotation_in_derived = rotation_in_derived(ring)
    logger.info(f"commutator checks over {ring}: {'pass' if report.passed else 'FAIL'}")
    return report
