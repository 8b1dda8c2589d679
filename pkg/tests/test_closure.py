import random

import pytest

from enspin.clifford import Multivector, blades_anticommute
from enspin.closure import (
    ClosureBasis,
    blade_closure,
    general_closure,
    lemma_containment_check,
    predicted_masks,
)
from enspin.deltas import lower_bound_dim
from enspin.spinrep import spin_generators

EXPECTED_DIMS = {3: 4, 4: 10, 5: 20, 6: 36, 7: 63, 8: 120, 9: 240, 10: 496, 11: 1023, 12: 2080}


def spin_closure(n):
    return blade_closure(n, spin_generators(n).masks)


def test_three_generator_case_by_hand():
    basis = spin_closure(3)
    assert basis.masks == (0b011, 0b101, 0b110, 0b111)
    assert basis.dim == 4


def test_dimensions_match_binomial_count():
    for n, want in EXPECTED_DIMS.items():
        basis = spin_closure(n)
        assert basis.dim == want, n
        assert basis.dim == lower_bound_dim(n), n


def test_result_is_a_fixpoint():
    for n in (3, 5, 6, 8):
        assert spin_closure(n).is_closed()


def test_closing_the_closure_changes_nothing():
    for n in (4, 6, 7):
        basis = spin_closure(n)
        again = blade_closure(n, basis.masks)
        assert again.masks == basis.masks


def test_generator_order_does_not_matter():
    rng = random.Random(13)
    for n in (4, 6, 9):
        reference = spin_closure(n)
        gens = list(spin_generators(n).masks)
        for _ in range(5):
            rng.shuffle(gens)
            assert blade_closure(n, gens).masks == reference.masks


def test_masks_are_sorted_and_unique():
    for n in (5, 8, 10):
        masks = spin_closure(n).masks
        assert list(masks) == sorted(set(masks))


def test_scalar_never_appears():
    for n in range(3, 13):
        assert 0 not in spin_closure(n).masks


def test_all_masks_have_grade_two_or_three_mod_four():
    for n in range(3, 13):
        for m in spin_closure(n).masks:
            assert m.bit_count() % 4 in (2, 3), (n, hex(m))


def test_full_mask_membership_follows_n_mod_four():
    # reachable exactly when the total grade n sits in the right residues
    for n in range(3, 13):
        basis = spin_closure(n)
        full = (1 << n) - 1
        present = full in basis.masks
        expect = n == 3 or (n % 4 == 2 and n >= 6)
        assert present == expect, n


def test_lemma_containment_exact_match():
    for n in range(3, 13):
        basis = spin_closure(n)
        rec = lemma_containment_check(n, basis)
        assert rec.passed, (n, rec)
        assert rec.all_expected_present
        assert rec.wrong_grade_masks == 0
        assert rec.missing_masks == 0 and rec.extra_masks == 0


def test_predicted_masks_cardinality():
    for n in range(3, 13):
        assert len(predicted_masks(n)) == lower_bound_dim(n)


def test_closure_validates_input():
    with pytest.raises(ValueError):
        blade_closure(0, [1])
    with pytest.raises(ValueError):
        blade_closure(3, [])
    with pytest.raises(ValueError):
        blade_closure(3, [0])
    with pytest.raises(ValueError):
        blade_closure(3, [1 << 3])
    with pytest.raises(ValueError):
        blade_closure(17, [3])  # needs allow_large
    with pytest.raises(ValueError):
        blade_closure(25, [3], allow_large=True)  # beyond the hard ceiling


def test_closure_of_commuting_blades_is_just_the_generators():
    # v1v2 and v3v4 commute, so nothing new appears
    basis = blade_closure(4, [0b0011, 0b1100])
    assert basis.masks == (0b0011, 0b1100)


def test_provenance_records_sorted_generators():
    basis = blade_closure(4, [0b1100, 0b0011])
    assert basis.provenance == (0b0011, 0b1100)


def test_json_serialization_round_trips_masks():
    basis = spin_closure(5)
    blob = basis.to_json()
    assert blob["n"] == 5 and blob["dim"] == 20
    assert [int(s, 16) for s in blob["masks"]] == list(basis.masks)


def test_general_closure_agrees_with_blade_closure():
    for n in range(3, 9):
        fast = spin_closure(n)
        gens = [Multivector({m: 1}, n) for m in spin_generators(n).masks]
        general = general_closure(n, gens)
        assert general.rank == fast.dim, n
        for m in fast.masks:
            assert general.contains_mask(m), (n, hex(m))


def test_general_closure_handles_non_blade_generators():
    # v1v2 + v1v2v3 and v2v3: brackets recover v1v3 and v1v2, and the
    # top blade falls out as the difference, so the span is all four
    gens = [Multivector({0b011: 1, 0b111: 1}, 3), Multivector({0b110: 1}, 3)]
    general = general_closure(3, gens)
    assert general.rank == 4
    for m in (0b011, 0b101, 0b110, 0b111):
        assert general.contains_mask(m)


def test_general_closure_respects_central_elements():
    # the top blade is central at n=3, so it adds nothing to v1v2 + v2v3
    gens = [Multivector({0b011: 1, 0b110: 1}, 3), Multivector({0b111: 1}, 3)]
    assert general_closure(3, gens).rank == 2


def test_general_closure_rejects_bad_input():
    with pytest.raises(ValueError):
        general_closure(3, [])
    with pytest.raises(ValueError):
        general_closure(3, [Multivector.zero(3)])
    with pytest.raises(ValueError):
        general_closure(3, [Multivector({1: 1}, 4)])


def test_is_closed_detects_a_hole():
    # v1v2 and v2v3 anticommute; dropping their bracket target breaks closure
    broken = ClosureBasis(n=3, masks=(0b011, 0b110), provenance=(0b011, 0b110))
    assert blades_anticommute(0b011, 0b110)
    assert not broken.is_closed()
