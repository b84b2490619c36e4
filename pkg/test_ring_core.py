#!/usr/bin/env python3
"""
Tests for exact ring arithmetic: descriptors, finite fields, packed GF(2)
matrices, the free ring, canonical matrices and unit groups
"""

import sys
sys.path.insert(0, 'src')

import numpy as np
import pytest

from src.errors import RingParseError, InfiniteRingError, UnsupportedOperationError
from src.ring_core import (RingDescriptor, RingElement, build_ring, parse_ring, ring_from_text,
                           units, unit_count, central_units, maximal_subfield, free_words)
from src.ring_core.canonical import (characteristic_polynomial, companion, companion_n, direct_sum,
                                     identity, jnf, jnf0, rank, rank_decomposition, rank_normal_form)
from src.ring_core.gf2 import GF2MatrixRing, from_array, reference_inverse, reference_mul, to_array
from src.ring_core.rings import MatrixRing, PrimeField


def _mat(ring, rows):
    return RingElement(ring, ring.from_entries(rows))


def test_descriptor_round_trip():
    """Canonical text survives parse and print"""
    for text in ["gf(4)", "mat(3,gf(2))", "zmod(8)", "prod(gf(2),mat(2,gf(3)))", "free(a,b,c)"]:
        assert str(parse_ring(text)) == text
    assert str(parse_ring(" prod( gf(2) , mat(2, gf(3)) ) ")) == "prod(gf(2),mat(2,gf(3)))"
    print("✅ descriptor round trip")


def test_descriptor_errors():
    for bad in ["gf(6)", "mat(0,gf(2))", "zmod(1)", "free(a,a)", "gf(2", "poly(3)", "gf(2) x"]:
        with pytest.raises(RingParseError):
            parse_ring(bad)


def test_basic_arithmetic_examples():
    F2 = ring_from_text("gf(2)")
    assert (F2.parse(1) + F2.parse(1)).is_zero

    free = ring_from_text("free(a,b)")
    a, b = free.parse("a"), free.parse("b")
    assert (a * b - a * b).is_zero
    assert a * b != b * a

    M = ring_from_text("mat(2,gf(2))")
    N2 = companion_n(2, PrimeField(2))
    assert N2.ring == M
    assert N2 * N2 == N2 + identity(2, PrimeField(2))


def test_try_invert_examples():
    F3 = ring_from_text("gf(3)")
    assert F3.parse(2).try_invert() == F3.parse(2)

    F2 = PrimeField(2)
    assert jnf0(2, F2).try_invert() is None

    N2 = companion_n(2, F2)
    inv = N2.try_invert()
    assert inv == _mat(N2.ring, [[1, 1], [1, 0]])
    assert inv == N2 * N2
    assert N2 * inv == identity(2, F2) and inv * N2 == identity(2, F2)


def test_try_invert_matches_units():
    """An element has an inverse exactly when it is listed as a unit"""
    for text in ["gf(4)", "zmod(12)", "mat(2,gf(2))", "mat(2,zmod(4))", "prod(gf(2),zmod(9))"]:
        ring = ring_from_text(text)
        unit_set = set(units(ring, use_disk=False))
        for x in ring.elements():
            inv = ring.try_invert(x)
            assert (inv is not None) == (x in unit_set), text
            if inv is not None:
                assert ring.mul(x, inv) == ring.one and ring.mul(inv, x) == ring.one


def test_unit_counts():
    assert len(units(ring_from_text("gf(4)"), use_disk=False)) == 3
    assert len(units(ring_from_text("mat(2,gf(2))"), use_disk=False)) == 6
    assert len(units(ring_from_text("mat(4,gf(2))"), use_disk=False)) == 20160
    print("✅ |GL(4,2)| = 20160")


def test_unit_count_closed_forms_match_enumeration():
    for text in ["gf(5)", "gf(8)", "zmod(12)", "zmod(8)", "mat(2,gf(3))", "mat(3,gf(2))",
                 "mat(2,zmod(4))", "prod(gf(3),mat(2,gf(2)))"]:
        ring = ring_from_text(text)
        enumerated = sum(1 for x in ring.elements() if ring.is_unit(x))
        assert unit_count(ring) == enumerated == len(units(ring, use_disk=False)), text


def test_units_are_distinct():
    ring = ring_from_text("mat(2,gf(3))")
    values = units(ring, use_disk=False)
    assert len(values) == len(set(values)) == 48


def test_infinite_ring_enumeration_rejected():
    with pytest.raises(InfiniteRingError):
        units(ring_from_text("free(a)"), use_disk=False)


def test_rank_examples():
    F2 = PrimeField(2)
    assert rank(identity(3, F2)) == 3
    assert rank(jnf0(3, F2)) == 2
    for r in range(5):
        assert rank(rank_normal_form(4, r, F2)) == r
    F3 = ring_from_text("gf(3)")
    assert rank(rank_normal_form(3, 2, F3)) == 2


def test_rank_decomposition():
    ring = ring_from_text("mat(3,gf(3))")
    rng = np.random.default_rng(7)
    for _ in range(200):
        x = ring.random_value(rng)
        X, Y, r = rank_decomposition(ring, x)
        assert r == ring.rank(x)
        assert ring.is_unit(X) and ring.is_unit(Y)
        assert ring.mul(ring.mul(X, x), Y) == rank_normal_form(3, r, ring.inner).value


def test_central_units():
    for n, q in [(2, 2), (2, 3), (3, 2), (2, 4)]:
        ring = ring_from_text(f"mat({n},gf({q}))")
        centre = central_units(ring)
        assert len(centre) == q - 1
        for z in centre:
            assert z == ring.scalar(ring.entries(z)[0][0])
            assert ring.is_unit(z)


def test_maximal_subfield():
    G = maximal_subfield(2, 2)
    N2 = companion_n(2, PrimeField(2)).value
    ring = G.ring
    assert G.generator == N2
    assert set(G.elements()) == {ring.zero, ring.one, N2, ring.mul(N2, N2)}
    assert len(G.nonzero_elements()) == 3

    G1 = maximal_subfield(1, 5)
    assert len(G1.nonzero_elements()) == 4

    G3 = maximal_subfield(3, 2)
    assert G3.modulus == (1, 1, 0, 1)
    assert G3.ring.pow(G3.generator, 7) == G3.ring.one
    assert len(G3.nonzero_elements()) == 7
    assert all(G3.ring.is_unit(d) for d in G3.nonzero_elements())


def test_extension_field_axioms():
    for q in [4, 8, 9]:
        F = ring_from_text(f"gf({q})")
        elems = list(F.elements())
        for x in elems:
            if x:
                assert F.mul(x, F.try_invert(x)) == 1
            for y in elems:
                assert F.mul(x, y) == F.mul(y, x)
                for z in elems[:4]:
                    assert F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z))
    assert ring_from_text("gf(4)").modulus == (1, 1, 1)
    assert ring_from_text("gf(16)").modulus == (1, 1, 0, 0, 1)


def test_canonical_constructors():
    F2 = PrimeField(2)
    assert companion_n(2, F2).value == GF2MatrixRing(2).from_entries([[0, 1], [1, 1]])
    assert companion_n(3, F2, [1, 0]).value == GF2MatrixRing(3).from_entries(
        [[0, 0, 1], [1, 0, 0], [0, 1, 1]])
    assert jnf(3, F2).value == GF2MatrixRing(3).from_entries([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    block = direct_sum(companion_n(2, F2), identity(1, F2))
    assert block.value == GF2MatrixRing(3).from_entries([[0, 1, 0], [1, 1, 0], [0, 0, 1]])


def test_characteristic_polynomials():
    F2 = PrimeField(2)
    for a in (0, 1):
        for b in (0, 1):
            assert characteristic_polynomial(companion_n(3, F2, [a, b])) == (1, b, a, 1)
    F5 = ring_from_text("gf(5)")
    rng = np.random.default_rng(3)
    for k in range(1, 6):
        coeffs = [F5.random_value(rng) for _ in range(k)]
        assert characteristic_polynomial(companion(coeffs, F5)) == tuple(coeffs) + (1,)
    assert characteristic_polynomial(jnf0(4, F2)) == (0, 0, 0, 0, 1)


def test_packed_gf2_matches_reference():
    """Packed and unpacked GF(2) kernels agree on add, mul and invert"""
    rng = np.random.default_rng(11)
    for n in (2, 3, 5, 8):
        ring = GF2MatrixRing(n)
        for _ in range(2500):
            x, y = ring.random_value(rng), ring.random_value(rng)
            ax, ay = to_array(x, n), to_array(y, n)
            assert from_array(reference_mul(ax, ay)) == ring.mul(x, y)
            assert from_array((ax ^ ay)) == ring.add(x, y)
            ref = reference_inverse(ax)
            inv = ring.try_invert(x)
            assert (ref is None) == (inv is None)
            if inv is not None:
                assert from_array(ref) == inv


def test_packed_gf2_matches_generic_matrix_ring():
    packed = GF2MatrixRing(3)
    generic = MatrixRing(3, PrimeField(2))
    rng = np.random.default_rng(5)
    for _ in range(300):
        x, y = packed.random_value(rng), packed.random_value(rng)
        gx, gy = generic.from_entries(packed.entries(x)), generic.from_entries(packed.entries(y))
        assert packed.entries(packed.mul(x, y)) == generic.entries(generic.mul(gx, gy))
        assert packed.rank(x) == generic.rank(gx)


def test_block_matrix_inverse():
    ring = ring_from_text("mat(2,mat(2,gf(2)))")
    rng = np.random.default_rng(2)
    found = 0
    for _ in range(200):
        x = ring.random_value(rng)
        inv = ring.try_invert(x)
        if inv is not None:
            found += 1
            assert ring.mul(x, inv) == ring.one and ring.mul(inv, x) == ring.one
    assert found > 0


def test_free_ring_words_and_associativity():
    free = ring_from_text("free(a1,a2)")
    q2 = free.parse("1 + a2*a1")
    assert free.words(q2.value) == [((), 1), (("a2", "a1"), 1)]
    assert free.words(free.zero) == []
    assert free_words(q2) == [((), 1), (("a2", "a1"), 1)]
    with pytest.raises(UnsupportedOperationError):
        free_words(ring_from_text("gf(3)").parse(1))
    assert str(free.parse("a1*a2 - 2*a2 + 3")) == "3 - 2*a2 + a1*a2"

    rng = np.random.default_rng(13)
    for _ in range(300):
        x, y, z = (free.random_value(rng) for _ in range(3))
        assert free.mul(free.mul(x, y), z) == free.mul(x, free.mul(y, z))


def test_element_json_round_trip():
    ring = ring_from_text("prod(gf(4),mat(2,gf(3)))")
    rng = np.random.default_rng(1)
    for _ in range(20):
        x = ring.element(ring.random_value(rng))
        assert ring.parse(x.to_json()) == x


if __name__ == "__main__":
    test_descriptor_round_trip()
    test_unit_counts()
    test_maximal_subfield()
    test_packed_gf2_matches_reference()
    print("\n✅ ring core checks completed")
