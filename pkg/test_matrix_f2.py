#!/usr/bin/env python3
"""
Tests for the property at 3 over M_n F_2: worked witnesses, the N_2 table,
and exhaustive and sampled scans of all pairs (B, C)
"""

import sys
sys.path.insert(0, 'src')

import pytest

from src.errors import PreconditionError
from src.ring_core import GF2MatrixRing
from src.unit_translate import FIXTURES, Verdict, observation_Bthr, verify_fixtures, verify_prop_Bone
from src.unit_translate.matrix_f2 import bone_slice, n2, n3, n4


def test_named_matrices():
    assert (n2() ** 3).value == n2().ring.one
    assert n3(0, 1).is_unit and n3(1, 0).is_unit
    assert n4(1, 0, 0).is_unit
    assert (n3(0, 1) ** 3) == n3(0, 1) + n3(0, 1).ring.parse([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_all_worked_witnesses():
    results = verify_fixtures()
    assert len(results) == len(FIXTURES) == 18
    failing = [r.name for r in results if not r.passed]
    assert failing == []
    assert {r.n for r in results} == {3, 4}
    print(f"✅ {len(results)} worked witnesses verified")


def test_n2_table():
    obs = observation_Bthr()
    assert obs.targets == ["I", "N2", "N2^2", "diag(0,1)", "diag(1,0)"]
    assert obs.with_n2 == [True, False, True, True, False]
    assert obs.with_n2_squared == [True, True, False, False, True]
    assert obs.passed


def test_m2_f2_fails():
    cert = verify_prop_Bone(2)
    assert cert.kind == Verdict.EXHAUSTED_FAILURE
    assert len(cert.values) == 2
    assert cert.details["n"] == 2


def test_m3_f2_exhaustive():
    cert = verify_prop_Bone(3)
    assert cert.kind == Verdict.EXHAUSTIVE_PASS
    ranks = cert.details["ranks"]
    assert sorted(ranks) == ["0", "1", "2", "3"]
    assert all(t["tested"] == 512 for t in ranks.values())
    assert ranks["0"]["cyclic"] == 512
    assert cert.stats.tested == 4 * 512
    print("✅ M_3 F_2 satisfies the property at 3")


def test_m4_f2_sampled():
    cert = verify_prop_Bone(4, samples=32, seed=3)
    assert cert.kind == Verdict.SAMPLED_PASS
    assert cert.stats.tested == 5 * 32
    assert cert.provenance.seed == 3


def test_m4_f2_low_ranks_lift_through_corners():
    """Ranks 1 and 2 never need the direct search at n = 4"""
    cert = verify_prop_Bone(4, samples=50, seed=1, jobs=1)
    ranks = cert.details["ranks"]
    for r in ("1", "2"):
        assert ranks[r]["tested"] == 50
        assert ranks[r]["fallback"] == 0
        assert ranks[r]["corner"] == 50
        assert ranks[r]["failures"] == []


def test_bone_slice_bottom_corner_one():
    ring = GF2MatrixRing(4)
    # identity and N4 both have c_44 = 1
    codes = [ring.to_int(ring.one), ring.to_int(n4(1, 0, 0).value)]
    for r in (1, 2):
        tally = bone_slice(4, r, codes)
        assert tally.corner == 2 and tally.fallback == 0


def test_bone_slice_records_failure():
    ring = GF2MatrixRing(2)
    # C = E_12 against B = E_11
    code = ring.to_int(ring.unit_matrix(0, 1))
    tally = bone_slice(2, 1, [code])
    assert tally.failures == [code]


def test_size_limits():
    with pytest.raises(PreconditionError):
        verify_prop_Bone(1)
    with pytest.raises(PreconditionError):
        verify_prop_Bone(6)


if __name__ == "__main__":
    test_all_worked_witnesses()
    test_n2_table()
    test_m3_f2_exhaustive()
    print("\n✅ M_n F_2 checks completed")
