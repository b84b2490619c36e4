#!/usr/bin/env python3
"""
Tests for unit-translate searches, certificates, failure families, explicit
witness constructions, counting bounds, corner lifts and the classifier
"""

import sys
sys.path.insert(0, 'src')

from fractions import Fraction

import numpy as np
import pytest

from src.errors import (CertificateSchemaError, HypothesisNotSatisfiedError, PreconditionError,
                        SearchBudgetExceededError)
from src.ring_core import maximal_subfield, ring_from_text
from src.ring_core.canonical import companion_n, direct_sum, identity
from src.unit_translate import (Verdict, additivity_witness, artinian_classifier, certificate_from_dict,
                                certificate_to_dict, check_gui, conjecture_Affn_probe, corner_composition,
                                density_bounds, f_n, failure_family_Antn, failure_family_Atwh,
                                gl_density, is_two_good, lemma_Btwo_lift, measure_intersection,
                                merge_shards, normalize_tuple, product_law, quotient_law, reverify,
                                subfield_kernel_bound, triangular_witness_Atwn, two_good_witness,
                                unit_difference_set, validate_certificate)
from src.unit_translate.certificates import is_witness
from src.unit_translate.corners import (btwo_dispatch, lower_corner_twist, relative_inverse,
                                        standard_idempotent)
from src.unit_translate.search import (check_instance, orbit_representatives, stabilizer_dedup_enabled,
                                       witness_table)


def test_fields_at_small_k():
    assert not check_gui(ring_from_text("gf(2)"), 2).passed
    assert check_gui(ring_from_text("gf(3)"), 2).passed
    assert not check_gui(ring_from_text("gf(3)"), 3).passed
    cert = check_gui(ring_from_text("gf(4)"), 3)
    assert cert.kind == Verdict.EXHAUSTIVE_PASS
    assert cert.details["mode"] == "exhaustive"
    print("✅ small fields")


def test_gf3_fails_on_one_two():
    F3 = ring_from_text("gf(3)")
    cert = check_instance(F3, [1, 2])
    assert cert.kind == Verdict.EXHAUSTED_FAILURE
    assert cert.k == 3
    assert reverify(cert)


def test_first_row_pair_fails_in_m2_f2():
    ring = ring_from_text("mat(2,gf(2))")
    cert = check_instance(ring, [ring.unit_matrix(0, 0), ring.unit_matrix(0, 1)])
    assert cert.kind == Verdict.EXHAUSTED_FAILURE
    assert cert.witness is None
    assert reverify(cert)
    assert not check_gui(ring, 3).passed


def test_m2_f3_passes_at_3():
    cert = check_gui(ring_from_text("mat(2,gf(3))"), 3)
    assert cert.kind == Verdict.EXHAUSTIVE_PASS
    assert cert.values is None
    assert cert.stats.tested == cert.stats.witnessed


def test_normalization_keeps_answer():
    """Searching the normalized tuple and the raw tuple agree, and the pulled back witness verifies"""
    ring = ring_from_text("mat(2,gf(3))")
    rng = np.random.default_rng(7)
    reps = orbit_representatives(ring)
    for _ in range(30):
        values = [ring.random_value(rng) for _ in range(2)]
        moved, norm = normalize_tuple(ring, values)
        assert moved[0] in reps
        normalized = check_instance(ring, values)
        raw = check_instance(ring, values, normalize=False)
        assert normalized.passed == raw.passed
        if normalized.passed:
            u = ring.parse_value(normalized.witness)
            assert is_witness(ring, u, values)
            assert reverify(normalized)


def test_stabilizer_dedup_cutoff():
    """Second-slot reduction follows the unit group size, not n"""
    assert stabilizer_dedup_enabled(ring_from_text("mat(2,gf(3))"), 3)
    assert stabilizer_dedup_enabled(ring_from_text("mat(3,gf(2))"), 3)
    # 20160^2 > 100000
    assert not stabilizer_dedup_enabled(ring_from_text("mat(4,gf(2))"), 3)
    assert not stabilizer_dedup_enabled(ring_from_text("mat(2,gf(3))"), 2)


def test_certificate_round_trip():
    ring = ring_from_text("mat(2,gf(3))")
    cert = check_instance(ring, [ring.unit_matrix(0, 1), ring.one])
    data = certificate_to_dict(cert)
    again = certificate_from_dict(data)
    assert again.verdict == cert.verdict == "witness"
    assert again.values == cert.values
    assert again.witness == cert.witness
    assert again.normalization.slot == 0
    assert reverify(again)


def test_certificate_schema_errors():
    cert = check_gui(ring_from_text("gf(5)"), 3)
    data = certificate_to_dict(cert)

    bad = dict(data, verdict="maybe")
    with pytest.raises(CertificateSchemaError):
        validate_certificate(bad)

    bad = dict(data, verdict="witness")
    bad.pop("values", None)
    with pytest.raises(CertificateSchemaError):
        validate_certificate(bad)

    # aggregate verdicts are replayed, not re-checked per instance
    with pytest.raises(CertificateSchemaError):
        reverify(cert)


def test_tampered_witness_detected():
    ring = ring_from_text("mat(2,gf(3))")
    cert = check_instance(ring, [ring.unit_matrix(0, 0)])
    assert reverify(cert)
    cert.witness = ring.format_value(ring.zero)
    assert not reverify(cert)


def test_check_gui_errors():
    ring = ring_from_text("gf(5)")
    with pytest.raises(PreconditionError):
        check_gui(ring, 1)
    with pytest.raises(PreconditionError):
        check_gui(ring, 3, shards=2, shard_id=2)
    with pytest.raises(SearchBudgetExceededError):
        check_gui(ring, 3, limit=1)


def test_sampled_run():
    cert = check_gui(ring_from_text("mat(3,gf(3))"), 3, samples=20, seed=1)
    assert cert.kind == Verdict.SAMPLED_PASS
    assert cert.stats.tested == 20
    assert cert.provenance.samples == 20


def test_merge_shards():
    ring = ring_from_text("gf(5)")
    full = check_gui(ring, 3)
    parts = [check_gui(ring, 3, shards=2, shard_id=i) for i in range(2)]
    merged = merge_shards(parts)
    assert merged.kind == Verdict.EXHAUSTIVE_PASS
    assert merged.stats.tested == full.stats.tested
    assert merged.details["merged_shards"] == 2
    with pytest.raises(PreconditionError):
        merge_shards(parts[1:])


def test_two_good_rings():
    assert not is_two_good(ring_from_text("gf(2)"))
    assert is_two_good(ring_from_text("gf(3)"))
    assert unit_difference_set(ring_from_text("zmod(4)")) == frozenset({0, 2})
    assert not is_two_good(ring_from_text("zmod(4)"))
    assert is_two_good(ring_from_text("zmod(9)"))
    assert is_two_good(ring_from_text("mat(2,gf(2))"))


def test_witness_table():
    F5 = ring_from_text("gf(5)")
    table = witness_table(F5, [1, 2])
    assert table["witnesses"] == [1, 2]


def test_first_row_families():
    for n, q in [(2, 2), (3, 2), (2, 3)]:
        cert = failure_family_Antn(n, q)
        assert cert.kind == Verdict.EXHAUSTED_FAILURE
        assert len(cert.values) == (q - 1) * n
        assert cert.details["fails_k"] == (q - 1) * n + 1
        assert reverify(cert)
    print("✅ first-row families")


def test_annihilated_first_row_family():
    cert = failure_family_Atwh(ring_from_text("gf(2)"), 2, a=1)
    assert cert.kind == Verdict.EXHAUSTED_FAILURE
    assert cert.details["fails_k"] == 3
    with pytest.raises(HypothesisNotSatisfiedError):
        failure_family_Atwh(ring_from_text("gf(3)"), 2)
    with pytest.raises(HypothesisNotSatisfiedError):
        failure_family_Atwh(ring_from_text("zmod(4)"), 2)


def test_cyclic_witness_every_matrix():
    for text in ["mat(2,gf(3))", "mat(3,gf(2))"]:
        ring = ring_from_text(text)
        for b in ring.elements():
            u = two_good_witness(ring, b)
            assert is_witness(ring, u, [b])


def test_triangular_witness():
    ring = ring_from_text("mat(3,gf(3))")
    rng = np.random.default_rng(11)
    checked = 0
    while checked < 25:
        b, c = ring.random_value(rng), ring.random_value(rng)
        if ring.rank(b) == 3:
            continue
        w = triangular_witness_Atwn(ring, b, c)
        assert w is not None
        assert w.rank == ring.rank(b)
        assert is_witness(ring, w.u, [b, c])
        checked += 1

    with pytest.raises(PreconditionError):
        triangular_witness_Atwn(ring, ring.one, ring.zero)

    F2 = ring_from_text("mat(3,gf(2))")
    assert triangular_witness_Atwn(F2, F2.zero, F2.one) is None


def test_density_values():
    assert f_n(2, 2) == Fraction(3, 8)
    assert gl_density(2, 2) == Fraction(3, 8)
    assert gl_density(3, 3) == f_n(3, 3)
    low = density_bounds(2, 2)
    assert low.consistent and low.threshold is None

    for n, q in [(2, 4), (3, 4), (2, 5), (4, 5)]:
        report = density_bounds(n, q)
        assert report.consistent
        assert report.above_threshold
        assert report.intersection_guaranteed
        assert report.measure_total == (q - 1) * report.product
    assert density_bounds(2, 4).to_dict()["f_n"] == "45/64"

    with pytest.raises(PreconditionError):
        density_bounds(0, 2)


def test_measure_intersection():
    universe = range(10)
    report = measure_intersection([set(range(9)), set(range(1, 10))], universe)
    assert report.total == Fraction(9, 5)
    assert report.guaranteed
    assert report.intersection_size == 8

    halves = measure_intersection([set(range(5)), set(range(5, 10))], universe)
    assert not halves.guaranteed
    assert halves.intersection_size == 0


def test_subfield_kernel_bound():
    ring = ring_from_text("mat(3,gf(2))")
    subfield = maximal_subfield(3, 2)
    for v in ring.elements():
        report = subfield_kernel_bound(v, subfield)
        assert report.holds
        assert len(report.singular) <= report.bound
    assert subfield_kernel_bound(ring.zero, subfield).bound == 0


def test_relative_inverse():
    ring = ring_from_text("mat(2,gf(3))")
    e = standard_idempotent(ring, 1)
    x = ring.unit_matrix(0, 0, 2)
    assert relative_inverse(ring, e, x) == x
    assert relative_inverse(ring, e, ring.zero) is None


def test_corner_lift_dispatch():
    F2 = ring_from_text("gf(2)")
    ring = ring_from_text("mat(4,gf(2))")
    c = direct_sum(companion_n(2, F2), identity(2, F2))
    data = btwo_dispatch(ring, 2, c.value)
    assert data is not None
    e = standard_idempotent(ring, 2)
    assert data.e == e
    assert is_witness(ring, data.u, [c.value, e])
    with pytest.raises(PreconditionError):
        btwo_dispatch(ring, 0, c.value)


def test_corner_lift_dispatch_rank_one():
    ring = ring_from_text("mat(4,gf(2))")
    c = identity(4, ring_from_text("gf(2)")).value
    b = standard_idempotent(ring, 1)
    data = btwo_dispatch(ring, 1, c)
    assert data is not None
    assert data.twist is not None
    assert data.e == standard_idempotent(ring, 3)
    assert is_witness(ring, data.u, [c, b])
    assert "twist" in data.to_dict(ring)


def test_lower_corner_twist():
    ring = ring_from_text("mat(3,gf(3))")
    e1 = standard_idempotent(ring, 1)
    c = ring.from_entries([[1, 0, 0], [0, 0, 0], [0, 1, 2]])
    y = lower_corner_twist(ring, 1, c)
    assert ring.is_unit(y)
    assert ring.entries(ring.mul(c, y))[2][2] == 0
    assert ring.mul(e1, y) == e1

    # last row (0, 0, 2): columns 2 and 3 swap
    c = ring.from_entries([[1, 0, 0], [0, 1, 0], [0, 0, 2]])
    y = lower_corner_twist(ring, 1, c)
    assert ring.entries(ring.mul(c, y))[2][2] == 0
    assert ring.mul(e1, y) == e1

    with pytest.raises(PreconditionError):
        lower_corner_twist(ring, 2, c)


def test_corner_lift_preconditions():
    ring = ring_from_text("mat(2,gf(3))")
    e = standard_idempotent(ring, 1)
    c = ring.unit_matrix(1, 0)
    with pytest.raises(PreconditionError):
        lemma_Btwo_lift(ring, e, ring.zero, c, e, ring.sub(ring.one, e))


def test_corner_composition():
    ring = ring_from_text("mat(4,gf(3))")
    rng = np.random.default_rng(5)
    for _ in range(5):
        values = [ring.random_value(rng) for _ in range(2)]
        w = corner_composition(ring, 2, values)
        assert is_witness(ring, w.u, values)
        assert len(w.corrections) == 2
    values = [ring.random_value(rng) for _ in range(2)]
    assert is_witness(ring, additivity_witness(2, 2, 3, values).u, values)


def test_classifier():
    report = artinian_classifier(ring_from_text("prod(gf(4),mat(2,gf(3)))"), confirm=False)
    assert report.factors == ["gf(4)", "mat(2,gf(3))"]
    assert report.satisfies and report.confirmed is None

    report = artinian_classifier(ring_from_text("prod(gf(2),gf(5))"))
    assert report.offending == ["gf(2)"]
    assert not report.satisfies
    assert report.confirmed is False and report.consistent

    report = artinian_classifier(ring_from_text("mat(2,gf(2))"))
    assert report.offending == ["mat(2,gf(2))"]
    assert report.consistent

    report = artinian_classifier(ring_from_text("zmod(12)"), confirm=False)
    assert report.offending == ["gf(2)", "gf(3)"]
    print("✅ classifier")


def test_product_and_quotient_laws():
    law = product_law([ring_from_text("gf(4)"), ring_from_text("gf(5)")], 3)
    assert law.combined and law.holds
    law = product_law([ring_from_text("gf(4)"), ring_from_text("gf(3)")], 3)
    assert law.combined is False and law.holds

    assert quotient_law(5, 2, 3).holds
    assert quotient_law(5, 2, 3).combined
    assert quotient_law(2, 3, 3).holds


def test_matrix_probe():
    excluded = conjecture_Affn_probe(ring_from_text("zmod(4)"), 2)
    assert excluded.status == "excluded"
    assert excluded.certificate is None

    probe = conjecture_Affn_probe(ring_from_text("gf(3)"), 2)
    assert probe.status == "no-counterexample"
    assert probe.certificate.kind == Verdict.EXHAUSTIVE_PASS


if __name__ == "__main__":
    test_fields_at_small_k()
    test_first_row_families()
    test_classifier()
    print("\n✅ unit-translate checks completed")
