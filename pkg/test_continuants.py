#!/usr/bin/env python3
"""
Tests for continuants, their opposites, transfer matrices and word structure
"""

import sys
sys.path.insert(0, 'src')

import numpy as np
import pytest

from src.errors import PreconditionError
from src.ring_core import ring_from_text, units
from src.continuants import (Mat2, build_quad, check_identities, check_word_model, det_equality,
                             factorized_transfer, fibonacci, free_quad, gl_prime_remark,
                             invert_transfer, op_transfer_invertibility, opposite_transfer_relation,
                             shifted_p_identity, solve_prefix_equations, splitting_identity,
                             transfer_matrix, word_model, zero_transfer)
from src.continuants.sweeps import (identity_sweep, symbolic_identity_check, transfer_sweep,
                                    zero_transfer_sweep, det_sweep)
from src.continuants.words import free_tuple, free_ring_for, monomial_count


def _random_tuple(ring, k, rng):
    return [ring.element(ring.random_value(rng)) for _ in range(k)]


def test_build_quad_small_cases():
    a = free_tuple(1)
    quad = build_quad(a)
    assert quad.q(1) == a[0]
    assert quad.p(1).value == quad.ring.one
    assert quad.q(0).value == quad.ring.one and quad.p(0).value == quad.ring.zero

    quad3 = free_quad(3)
    assert str(quad3.q(3)) == "a1 + a3 + a3*a2*a1"
    assert str(quad3.q(2)) == "1 + a2*a1"
    assert str(quad3.qop(2)) == "1 + a1*a2"


def test_zero_tuple_continuants():
    F3 = ring_from_text("gf(3)")
    zero = F3.element(0)
    for k in range(0, 8):
        quad = build_quad([zero] * k, F3)
        expected = 1 if k % 2 == 0 else 0
        assert quad.q(k).value == expected
        assert quad.qop(k).value == expected


def test_qop_is_reversed_q():
    ring = ring_from_text("mat(2,gf(3))")
    rng = np.random.default_rng(4)
    for _ in range(50):
        a = _random_tuple(ring, 5, rng)
        forward = build_quad(a)
        backward = build_quad(list(reversed(a)))
        assert forward.qop(5) == backward.q(5)


def test_identities_symbolic():
    for report in symbolic_identity_check(8):
        assert report.passed, report.failures()
    print("✅ identities hold symbolically for k <= 8")


def test_identities_over_finite_rings():
    rng = np.random.default_rng(21)
    for text in ["mat(2,gf(3))", "mat(2,gf(2))", "zmod(8)"]:
        ring = ring_from_text(text)
        for _ in range(40):
            report = check_identities(build_quad(_random_tuple(ring, 6, rng)))
            assert report.passed, (text, report.failures())


def test_identities_vacuous_at_zero():
    report = check_identities(build_quad([], ring_from_text("gf(2)")))
    assert report.passed
    assert len(report.results) == 7


def test_transfer_factorization_and_inverse():
    a = free_tuple(1)
    quad = build_quad(a)
    ring = quad.ring
    inv = invert_transfer(quad)
    assert inv == Mat2.of(ring, -a[0], 1, 1, 0)

    empty = build_quad([], ring_from_text("zmod(8)"))
    assert invert_transfer(empty) == Mat2.identity(empty.ring)

    Z8 = ring_from_text("zmod(8)")
    rng = np.random.default_rng(8)
    for _ in range(30):
        a = _random_tuple(Z8, 5, rng)
        quad = build_quad(a)
        assert transfer_matrix(quad) == factorized_transfer(Z8, a)
        invert_transfer(quad)


def test_opposite_transfer_relation():
    rng = np.random.default_rng(9)
    for text in ["zmod(8)", "mat(2,gf(3))"]:
        ring = ring_from_text(text)
        for k in range(0, 6):
            assert opposite_transfer_relation(build_quad(_random_tuple(ring, k, rng), ring))
    for k in range(1, 5):
        assert opposite_transfer_relation(free_quad(k))


def test_shifted_p_identity():
    rng = np.random.default_rng(10)
    ring = ring_from_text("mat(2,gf(2))")
    for _ in range(30):
        assert shifted_p_identity(_random_tuple(ring, 6, rng))
    assert shifted_p_identity(free_tuple(5))


def test_invertibility_transfer_exhaustive():
    """1 + ab is invertible iff 1 + ba is, and the k = 3 transfer holds for every triple"""
    ring = ring_from_text("mat(2,gf(2))")
    two = transfer_sweep(ring, 2)
    three = transfer_sweep(ring, 3)
    assert two.mode == "exhaustive" and two.tested == 256 and two.passed
    assert three.mode == "exhaustive" and three.tested == 4096 and three.passed
    assert 0 < three.counters["invertible"] < 4096


def test_invertibility_transfer_zero_tuple():
    F5 = ring_from_text("gf(5)")
    result = op_transfer_invertibility([F5.element(0)] * 4, F5)
    assert result.both_invertible and result.holds
    assert result.closed_form_inverse.value == 1


def test_zero_transfer():
    F3 = ring_from_text("gf(3)")
    result = zero_transfer([F3.element(1), F3.element(2)])
    assert result.q_zero and result.qop_zero and result.holds

    report = zero_transfer_sweep(ring_from_text("mat(2,gf(2))"), 3)
    assert report.mode == "exhaustive" and report.passed
    assert report.counters["zero"] > 0

    sampled = zero_transfer_sweep(ring_from_text("mat(3,gf(2))"), 3, samples=2000, seed=3)
    assert sampled.mode == "sampled" and sampled.passed


def test_det_equality():
    ring = ring_from_text("mat(2,gf(5))")
    rng = np.random.default_rng(12)
    for k in (2, 3, 5):
        for _ in range(40):
            assert det_equality(_random_tuple(ring, k, rng))
    # singular Q_2: a1 = -a2^{-1} makes 1 + a2 a1 vanish
    a2 = ring.element(ring.from_entries([[1, 0], [0, 1]]))
    a1 = -a2
    quad = build_quad([a1, a2])
    assert quad.q(2).is_zero
    assert ring.determinant(quad.q(2).value) == 0 == ring.determinant(quad.qop(2).value)

    assert det_sweep(ring_from_text("mat(3,gf(3))"), 3, samples=100, seed=1).passed


def test_solve_prefix_equations():
    F5 = ring_from_text("gf(5)")
    assert solve_prefix_equations([F5.element(1)]) == [F5.element(1)]
    x = solve_prefix_equations([F5.element(2), F5.element(3)])
    assert x == [F5.element(2), F5.element(1)]

    ring = ring_from_text("mat(2,gf(3))")
    rng = np.random.default_rng(14)
    unit_values = units(ring, use_disk=False)
    chain = [ring.element(unit_values[int(rng.integers(0, len(unit_values)))]) for _ in range(4)]
    chain.append(ring.element(ring.random_value(rng)))
    x = solve_prefix_equations(chain)
    quad = build_quad(x)
    assert [quad.q(i) for i in range(1, 6)] == chain

    with pytest.raises(PreconditionError):
        solve_prefix_equations([F5.element(0), F5.element(1)])


def test_splitting_identity():
    check = splitting_identity(free_tuple(5), 2)
    assert check.holds and check.disjoint
    for n in range(2, 7):
        for m in range(1, n):
            assert splitting_identity(free_tuple(n), m).holds

    Z8 = ring_from_text("zmod(8)")
    rng = np.random.default_rng(15)
    b = _random_tuple(Z8, 6, rng)
    assert all(splitting_identity(b, m).holds for m in range(1, 6))

    with pytest.raises(ValueError):
        splitting_identity(free_tuple(3), 3)


def test_fibonacci_counts():
    assert [fibonacci(k) for k in range(8)] == [1, 1, 2, 3, 5, 8, 13, 21]
    assert fibonacci(8) == 34 and fibonacci(10) == 89
    for k in range(0, 13):
        assert monomial_count(k) == fibonacci(k)


def test_word_model():
    assert word_model(3) == [(1,), (3,), (3, 2, 1)]
    assert word_model(0) == [()]
    assert word_model(2) == [(), (2, 1)]
    assert len(word_model(8)) == 34
    for k in range(0, 11):
        check = check_word_model(k)
        assert check.matches and check.coefficients_one
        assert check.model_size == check.monomial_count == fibonacci(k)


def test_q4_monomials():
    ring = free_ring_for(4)
    q4 = free_quad(4).q(4)
    words = ring.words(q4.value)
    assert len(words) == 5
    assert words[0] == ((), 1)
    assert (("a4", "a3", "a2", "a1"), 1) in words


def test_identity_sweep_modes():
    exhaustive = identity_sweep(ring_from_text("mat(2,gf(2))"), 2)
    assert exhaustive.mode == "exhaustive" and exhaustive.tested == 256 and exhaustive.passed
    sampled = identity_sweep(ring_from_text("mat(2,gf(3))"), 6, samples=200, seed=5)
    assert sampled.mode == "sampled" and sampled.tested == 200 and sampled.passed
    shard0 = identity_sweep(ring_from_text("zmod(8)"), 3, shard_index=0, shard_count=2)
    shard1 = identity_sweep(ring_from_text("zmod(8)"), 3, shard_index=1, shard_count=2)
    assert shard0.tested + shard1.tested == 512


def test_gl_prime_remark_reports_quotient():
    ring = ring_from_text("mat(2,gf(3))")
    rng = np.random.default_rng(16)
    seen = 0
    for _ in range(20):
        obs = gl_prime_remark(_random_tuple(ring, 2, rng))
        if obs.quotient is not None:
            seen += 1
            assert obs.quotient.is_unit
            assert not obs.experimental
    assert seen > 0
    assert gl_prime_remark(_random_tuple(ring, 4, rng)).experimental


def test_gl_prime_remark_commutator_membership():
    """GL(2,3)' = SL(2,3), and every quotient lands there"""
    ring = ring_from_text("mat(2,gf(3))")
    sl = {x for x in units(ring, use_disk=False) if ring.determinant(x) == 1}
    assert len(sl) == 24
    rng = np.random.default_rng(21)
    for k in (2, 3):
        seen = 0
        for _ in range(40):
            obs = gl_prime_remark(_random_tuple(ring, k, rng), commutator_subgroup=sl)
            if obs.quotient is None:
                assert obs.in_commutator_subgroup is None
                continue
            seen += 1
            assert obs.in_commutator_subgroup is True
        assert seen > 0, k


if __name__ == "__main__":
    test_build_quad_small_cases()
    test_identities_symbolic()
    test_invertibility_transfer_exhaustive()
    test_word_model()
    print("\n✅ continuant checks completed")
