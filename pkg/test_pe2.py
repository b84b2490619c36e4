#!/usr/bin/env python3
"""
Tests for PE(2,R): words, normal forms, lengths, multipliers, stable range
and subgroup structure over small finite rings
"""

import sys
sys.path.insert(0, 'src')

import numpy as np
import pytest

from src.errors import (HypothesisNotSatisfiedError, NotNormalFormError, PreconditionError,
                        RingParseError)
from src.ring_core import ring_from_text, units
from src.continuants import build_quad, transfer_matrix
from src.pe2 import (Generator, GroupWord, OrdValue, PE2Element, as_matrix, build_ord_table,
                     commutator_identities_check, complete_to_multiplier, conjugate_to_shorter,
                     diagonal_word, invert_word, is_normal, is_unimodular, multiplier_word, random_word,
                     normalize, ord_of, ord_of_word, parse_word, qsr_condition, solve_translation,
                     stable_range_reduction, stable_range_report, subgroup_lattice_checks,
                     word_matrix)
from src.pe2.commutators import rotation_in_derived
from src.pe2.generators import e_matrix, m_matrix


def test_e0_is_swap():
    F3 = ring_from_text("gf(3)")
    assert word_matrix(F3, GroupWord.of_e([0])) == (0, 1, 1, 0)
    assert as_matrix(F3, GroupWord.of_e([0])) == as_matrix(F3, GroupWord((Generator.j(),)))


def test_word_matches_transfer_matrix():
    """S(a) = e_{a(k)} ... e_{a(1)} is the transfer matrix of a"""
    rng = np.random.default_rng(1)
    for text in ["zmod(8)", "mat(2,gf(3))", "mat(2,gf(2))"]:
        ring = ring_from_text(text)
        for k in range(0, 6):
            a = [ring.random_value(rng) for _ in range(k)]
            m = transfer_matrix(build_quad([ring.element(v) for v in a], ring))
            assert word_matrix(ring, GroupWord.from_tuple(a)) == (m.a.value, m.b.value, m.c.value, m.d.value)


def test_diagonal_word_for_every_unit():
    for text in ["gf(2)", "gf(3)", "gf(4)", "zmod(8)", "mat(2,gf(2))"]:
        ring = ring_from_text(text)
        for z in units(ring, use_disk=False):
            word = diagonal_word(ring, z)
            assert word.e_count() == 4
            assert word_matrix(ring, word) == m_matrix(ring, z, ring.try_invert(z))
    print("✅ diagonal words verified")


def test_normalize_examples():
    F5 = ring_from_text("gf(5)")
    assert normalize(F5, GroupWord.of_e([2, 0, 4])).e_args() == [1]
    assert len(normalize(F5, GroupWord.of_e([0, 0]))) == 0
    assert normalize(F5, GroupWord((Generator.t(3),))).e_args() == [0, 3]
    assert len(normalize(F5, GroupWord((Generator.t(0),)))) == 0
    word = normalize(F5, parse_word(F5, "e(1) e(0) e(2) m(2,3)"))
    assert word.e_args() == [3]
    assert word.gens[-1] == Generator.m(2, 3)


def test_normalize_preserves_class():
    rng = np.random.default_rng(2)
    for text in ["zmod(8)", "mat(2,gf(2))", "gf(4)"]:
        ring = ring_from_text(text)
        for _ in range(200):
            word = random_word(ring, rng, int(rng.integers(0, 9)))
            normal = normalize(ring, word)
            assert is_normal(ring, normal)
            assert as_matrix(ring, normal) == as_matrix(ring, word)


def test_relations_on_generators():
    rng = np.random.default_rng(3)
    ring = ring_from_text("mat(2,gf(3))")
    unit_values = units(ring, use_disk=False)
    for _ in range(50):
        r, s, r2, s2 = (unit_values[int(rng.integers(0, len(unit_values)))] for _ in range(4))
        a, b = ring.random_value(rng), ring.random_value(rng)
        # m m' = m(rr', ss')
        lhs = GroupWord((Generator.m(r, s), Generator.m(r2, s2)))
        assert as_matrix(ring, lhs) == as_matrix(ring, GroupWord((Generator.m(ring.mul(r, r2), ring.mul(s, s2)),)))
        # e_a e_0 e_b = e_{a+b}
        assert word_matrix(ring, GroupWord.of_e([a, ring.zero, b])) == e_matrix(ring, ring.add(a, b))
        # m_{r,s} e_a = e_{s a r^-1} m_{s,r}
        pushed = GroupWord((Generator.e(ring.mul(ring.mul(s, a), ring.try_invert(r))), Generator.m(s, r)))
        assert word_matrix(ring, GroupWord((Generator.m(r, s), Generator.e(a)))) == word_matrix(ring, pushed)
        word = random_word(ring, rng, 5)
        assert as_matrix(ring, word * invert_word(ring, word)) == PE2Element.of(ring, m_matrix(ring, ring.one, ring.one))


def test_parse_word_errors():
    F5 = ring_from_text("gf(5)")
    for bad in ["e(1", "x(1)", "m(1)", "e(1,2)"]:
        with pytest.raises(RingParseError):
            parse_word(F5, bad)
    with pytest.raises(PreconditionError):
        word_matrix(F5, parse_word(F5, "m(0,1)"))


def test_ord_value_chain():
    names = ["0", "1/2", "1-", "1", "3/2", "2-", "2", "5/2", "3-", "3"]
    values = [OrdValue.parse(n) for n in names]
    assert [v.rank for v in values] == list(range(10))
    assert [str(v) for v in values] == names
    assert OrdValue.parse("2-").successor() == OrdValue.integer(2)
    assert OrdValue.parse("1").predecessor() == OrdValue.minus(1)
    for bad in ["2/2", "-1", "x"]:
        with pytest.raises(RingParseError):
            OrdValue.parse(bad)


def test_ord_of_word_table():
    F3 = ring_from_text("gf(3)")
    assert str(ord_of_word(F3, normalize(F3, GroupWord((Generator.m(1, 2),))))) == "0"
    assert str(ord_of_word(F3, normalize(F3, GroupWord((Generator.t(1),))))) == "1/2"
    assert str(ord_of_word(F3, normalize(F3, GroupWord((Generator.j(),))))) == "1-"
    assert str(ord_of_word(F3, GroupWord.of_e([1]))) == "1"
    assert str(ord_of_word(F3, GroupWord.of_e([1, 0]))) == "2-"
    assert str(ord_of_word(F3, GroupWord.of_e([0, 1, 2]))) == "3/2"
    assert str(ord_of_word(F3, GroupWord.of_e([0, 1, 0]))) == "1"
    assert str(ord_of_word(F3, GroupWord.of_e([1, 2, 1]))) == "3"
    with pytest.raises(NotNormalFormError):
        ord_of_word(F3, GroupWord.of_e([1, 0, 1]))


def test_ord_tables_small_fields():
    F2, F3 = ring_from_text("gf(2)"), ring_from_text("gf(3)")
    t2, t3 = build_ord_table(F2), build_ord_table(F3)
    assert t2.order == 6 and t3.order == 24
    assert str(t2.max_ord) == "3/2" and str(t3.max_ord) == "3/2"
    assert str(ord_of(F3, m_matrix(F3, 1, 1))) == "0"
    # e_1 e_2 = e_0 e_1 e_0 m_{1,2} over F_3
    assert str(ord_of(F3, word_matrix(F3, GroupWord.of_e([1, 2])))) == "1"
    assert str(ord_of(F3, word_matrix(F3, GroupWord.of_e([1, 1])))) == "3/2"
    assert sum(t3.histogram().values()) == 24


def test_stable_range_reports():
    for text in ["gf(2)", "gf(3)", "zmod(4)", "zmod(8)"]:
        report = stable_range_report(ring_from_text(text))
        assert report.sr1 and report.q3_witnesses
        assert report.max_ord <= OrdValue.parse("5/2")
        assert report.consistent
    matrices = stable_range_report(ring_from_text("mat(2,gf(2))"), with_ord=False)
    assert matrices.sr1 and matrices.q3_witnesses and matrices.consistent is None
    print("✅ stable range one confirmed")


def test_unimodular_pairs():
    Z4 = ring_from_text("zmod(4)")
    assert not is_unimodular(Z4, 2, 0)
    assert not is_unimodular(Z4, 2, 2)
    assert is_unimodular(Z4, 2, 1)


def test_qsr_condition():
    report = qsr_condition(ring_from_text("gf(3)"), 1)
    assert report.holds and report.tested == 9
    assert report.consistent
    assert qsr_condition(ring_from_text("mat(2,gf(2))"), 1, cross_check=False).holds
    degenerate = qsr_condition(ring_from_text("gf(3)"), 0, cross_check=False)
    assert not degenerate.holds and degenerate.counterexample == [0]


def test_complete_to_multiplier_k3():
    F5 = ring_from_text("gf(5)")
    # prefix -b^{-1} with b = 2
    result = complete_to_multiplier(F5, [2])
    assert result.a == [2, 2, 2]
    assert (result.r, result.s) == (2, 2)
    with pytest.raises(PreconditionError):
        complete_to_multiplier(F5, [0])
    with pytest.raises(PreconditionError):
        complete_to_multiplier(F5, [])


def test_complete_to_multiplier_k4():
    ring = ring_from_text("mat(2,gf(3))")
    rng = np.random.default_rng(4)
    done = 0
    while done < 30:
        a1, a2 = ring.random_value(rng), ring.random_value(rng)
        s = ring.add(ring.one, ring.mul(a2, a1))
        if not ring.is_unit(s):
            continue
        result = complete_to_multiplier(ring, [a1, a2])
        assert result.s == s
        assert result.r == ring.try_invert(ring.add(ring.one, ring.mul(a1, a2)))
        done += 1


def test_stable_range_reduction():
    F2 = ring_from_text("gf(2)")
    for a1 in (0, 1):
        for a2 in (0, 1):
            reduction = stable_range_reduction(F2, a1, a2)
            assert len(reduction.completion.a) == 5
    ring = ring_from_text("mat(2,gf(2))")
    rng = np.random.default_rng(5)
    for _ in range(30):
        stable_range_reduction(ring, ring.random_value(rng), ring.random_value(rng))


def test_multiplier_words():
    F5 = ring_from_text("gf(5)")
    assert multiplier_word(F5, 2, 3, []).e_count == 4
    assert multiplier_word(F5, 2, 2, [], lam=2).e_count == 8
    with pytest.raises(HypothesisNotSatisfiedError):
        multiplier_word(F5, 2, 2, [])
    with pytest.raises(PreconditionError):
        multiplier_word(F5, 0, 2, [])

    ring = ring_from_text("mat(2,gf(3))")
    unit_values = units(ring, use_disk=False)
    rng = np.random.default_rng(6)
    for count in (1, 2):
        pairs = [(unit_values[int(rng.integers(0, len(unit_values)))],
                  unit_values[int(rng.integers(0, len(unit_values)))]) for _ in range(count)]
        u = ring.one
        for x, y in pairs:
            u = ring.mul(u, ring.mul(ring.mul(ring.mul(ring.try_invert(x), ring.try_invert(y)), x), y))
        word = multiplier_word(ring, u, ring.one, pairs)
        assert word.e_count == 8 * count + 4


def test_conjugate_to_shorter():
    F3 = ring_from_text("gf(3)")
    half = conjugate_to_shorter(F3, GroupWord.of_e([0, 1, 1]))
    assert str(half.ord_before) == "3/2"
    assert half.ord_after <= OrdValue.integer(1)
    minus = conjugate_to_shorter(F3, GroupWord(GroupWord.of_e([1, 1, 0]).gens + (Generator.m(1, 2),)))
    assert str(minus.ord_before) == "3-"
    assert minus.ord_after < minus.ord_before

    ring = ring_from_text("mat(2,gf(3))")
    unit_values = units(ring, use_disk=False)
    rng = np.random.default_rng(7)
    for k in (3, 4, 5):
        for _ in range(10):
            inner = [unit_values[int(rng.integers(0, len(unit_values)))] for _ in range(k - 1)]
            conjugate_to_shorter(ring, GroupWord.of_e([ring.zero] + inner))
            conjugate_to_shorter(ring, GroupWord.of_e(inner + [ring.zero]))

    with pytest.raises(PreconditionError):
        conjugate_to_shorter(F3, GroupWord.of_e([0, 1]))
    with pytest.raises(PreconditionError):
        conjugate_to_shorter(F3, GroupWord.of_e([1, 1, 1]))


def test_group_orders_and_indices():
    F2 = subgroup_lattice_checks(ring_from_text("gf(2)"))
    assert F2.order == 6 and F2.pe1_index == 1
    assert not F2.sixtwo_hypothesis
    F3 = subgroup_lattice_checks(ring_from_text("gf(3)"))
    assert F3.order == 24 and F3.pe2_order == 12 and F3.pe1_index == 2
    assert F3.pe2_equals_derived
    F5 = subgroup_lattice_checks(ring_from_text("gf(5)"), with_ord=False)
    assert F5.pe1_index == 1 and F5.pe2_order == 60


def test_pe2_over_f4_perfect_and_simple():
    report = subgroup_lattice_checks(ring_from_text("gf(4)"))
    assert report.pe2_order == 60
    assert report.pe2_perfect and report.pe2_simple
    print("✅ PE_2(2,F_4) is perfect and simple of order 60")


def test_commutator_identities():
    report = commutator_identities_check(ring_from_text("gf(5)"), samples=50, seed=1)
    assert report.passed
    assert "central-root" in [c.name for c in report.checks]
    matrices = commutator_identities_check(ring_from_text("mat(2,gf(3))"), samples=20, seed=2,
                                           with_groups=False)
    assert matrices.passed
    assert "companion" in [c.name for c in matrices.checks]
    assert rotation_in_derived(ring_from_text("gf(3)"))


def test_solve_translation():
    ring = ring_from_text("mat(2,gf(2))")
    for a in ring.elements():
        sol = solve_translation(ring, a)
        assert sol.method == "companion"
        assert ring.sub(ring.mul(sol.r, sol.b), sol.b) == a
    F2 = ring_from_text("gf(2)")
    assert solve_translation(F2, 1) is None
    assert solve_translation(F2, 0).b is not None


if __name__ == "__main__":
    test_diagonal_word_for_every_unit()
    test_stable_range_reports()
    test_pe2_over_f4_perfect_and_simple()
    print("\n✅ PE(2,R) checks completed")
