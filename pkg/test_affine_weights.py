#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Test script for affine weights, reflections and Demazure labels
"""

import random

import pytest

from algebra.affine_weights import (
    ALPHA0, ALPHA1, DELTA, LAMBDA0, LAMBDA1, GammaEntry, Weight, apply_automorphism,
    apply_word, diagram_automorphism, dominance_diff, fundamental, gamma_branch_entry, gamma_set,
    orbit_segment, parse_weight, reflect, sigma_k, sigma_k_word
)
from validation import DomainError, ValidationError

def test_weight_basics():
    """Test coordinates, evaluations and dominance"""
    print("\n=== Testing Weight Basics ===")

    w = Weight(3, 1, -2)
    assert w.level == 3
    assert w.eval_h(0) == 2
    assert w.eval_h(1) == 1
    assert w.eval_d() == -2
    assert w.shift_delta(5) == Weight(3, 1, 3)
    assert ALPHA0 + ALPHA1 == DELTA
    assert fundamental(1) == LAMBDA1
    assert 2 * LAMBDA0 - DELTA == Weight(2, 0, -1)

    dominance = [
        (LAMBDA0, True, "Lambda0"),
        (LAMBDA1, True, "Lambda1"),
        (Weight(2, 2, -7), True, "2*Lambda1 - 7*delta"),
        (Weight(2, 3, 0), False, "Too much omega1"),
        (Weight(1, -1, 0), False, "Negative omega1"),
    ]
    for weight, expected, description in dominance:
        result = weight.is_dominant()
        status = "✅" if result == expected else "❌"
        print(f"{status} {description}: dominant={result}")
        assert result == expected

    with pytest.raises(DomainError):
        Weight(1.5, 0, 0)

def test_weight_text_round_trip():
    """Printed weights parse back to themselves"""
    print("\n=== Testing Weight Text ===")

    assert str(Weight(2, 1, -1)) == "2*Lambda0 + omega1 - delta"
    assert str(Weight(0, 0, 0)) == "0*delta"
    assert parse_weight("Lambda1 - 3*delta") == Weight(1, 1, -3)

    for w in (LAMBDA0, LAMBDA1, Weight(0, 0, 0), Weight(-2, 5, 3), Weight(3, -1, -10)):
        assert parse_weight(str(w)) == w
        print(f"✅ {w}")

    with pytest.raises(ValidationError):
        parse_weight("Lambda2")

def test_reflections():
    """Simple reflections on small weights"""
    print("\n=== Testing Reflections ===")

    test_cases = [
        (LAMBDA0, 0, Weight(1, 2, -1), "s0 Lambda0"),
        (LAMBDA0, 1, LAMBDA0, "s1 fixes Lambda0"),
        (LAMBDA1, 1, Weight(1, -1, 0), "s1 Lambda1"),
        (LAMBDA1, 0, LAMBDA1, "s0 fixes Lambda1"),
        (ALPHA1, 1, -ALPHA1, "s1 alpha1"),
        (ALPHA0, 0, -ALPHA0, "s0 alpha0"),
    ]
    for weight, i, expected, description in test_cases:
        result = reflect(weight, i)
        status = "✅" if result == expected else "❌"
        print(f"{status} {description}: {result}")
        assert result == expected

    for a in range(4):
        for b in range(-3, 4):
            w = Weight(a, b, 1)
            assert reflect(reflect(w, 0), 0) == w
            assert reflect(reflect(w, 1), 1) == w

def test_sigma_k_closed_form():
    """Closed-form orbit elements agree with reflection words"""
    print("\n=== Testing Orbit Closed Forms ===")

    assert sigma_k_word(2, False) == (1, 0, 1, 0, 1)
    assert sigma_k_word(-1, True) == (0, 1)
    assert sigma_k(LAMBDA0, 1) == Weight(1, -2, -1)
    assert sigma_k(LAMBDA0, -1) == Weight(1, 2, -1)

    for Lambda in (LAMBDA0, LAMBDA1, Weight(2, 1, -3), Weight(3, 2, 4)):
        for k in range(-6, 7):
            for with_s1 in (False, True):
                assert sigma_k(Lambda, k, with_s1) == apply_word(Lambda, sigma_k_word(k, with_s1)), (Lambda, k)
        print(f"✅ {Lambda}: |k| <= 6")

    assert len(orbit_segment(LAMBDA0, 2)) == 10
    with pytest.raises(DomainError):
        sigma_k(Weight(1, 2, 0), 1)
    with pytest.raises(DomainError):
        sigma_k(DELTA, 1)

def test_gamma_set():
    """Test Demazure label sets"""
    print("\n=== Testing Demazure Labels ===")

    test_cases = [
        (Weight(2, 1, -1), 5, [(1, -1), (3, -2), (5, -4)], "2*Lambda0 + omega1 - delta"),
        (LAMBDA0, 4, [(0, 0), (2, -1), (4, -4)], "Lambda0"),
        (Weight(2, 0, -4), 8, [(0, -4), (4, -6), (8, -12)], "2*Lambda0 - 4*delta"),
        (Weight(0, 0, 3), 10, [(0, 3)], "Level zero"),
    ]

    for Phi, lambda_max, expected, description in test_cases:
        result = gamma_set(Phi, lambda_max)
        status = "✅" if result == expected else "❌"
        print(f"{status} {description}: {result}")
        assert result == expected
        assert all(isinstance(entry, GammaEntry) for entry in result)

    # every label is an orbit element l*Lambda0 + lam*omega1 + r*delta
    Phi = Weight(3, 1, 2)
    orbit = {w for _, _, w in orbit_segment(Phi, 10)}
    for entry in gamma_set(Phi, 30):
        assert Weight(3, entry.lam, entry.r) in orbit

    Phi = Weight(2, 1, -1)
    assert gamma_branch_entry(Phi, 0, '+') == GammaEntry(1, -1)
    assert gamma_branch_entry(Phi, 1, '+') == GammaEntry(5, -4)
    assert gamma_branch_entry(Phi, 1, '-') == GammaEntry(3, -2)
    with pytest.raises(DomainError):
        gamma_branch_entry(Phi, 1, '*')

    with pytest.raises(DomainError):
        gamma_set(Weight(1, 2, 0), 5)

def test_reflections_random_weights():
    """Each simple reflection is an involution and keeps the level"""
    print("\n=== Testing Reflections On Random Weights ===")

    rng = random.Random(7)
    for _ in range(10_000):
        w = Weight(rng.randint(-50, 50), rng.randint(-50, 50), rng.randint(-50, 50))
        for i in (0, 1):
            reflected = reflect(w, i)
            assert reflect(reflected, i) == w, (w, i)
            assert reflected.level == w.level
        assert diagram_automorphism(w).level == w.level
    print("✅ 10000 random weights")

def _dominant_weights(levels, c_range):
    return [Weight(a, b, c) for a in levels for b in range(a + 1) for c in c_range]

def test_sigma_k_closed_form_far_out():
    """Closed-form orbit elements match reflection words for |k| <= 50"""
    for Lambda in _dominant_weights((1, 2, 3), range(-3, 4)):
        for k in range(-50, 51):
            for with_s1 in (False, True):
                result = sigma_k(Lambda, k, with_s1)
                assert result == apply_word(Lambda, sigma_k_word(k, with_s1)), (Lambda, k, with_s1)
                assert result.level == Lambda.level
    print("✅ sigma_k closed form for levels 1..3, |k| <= 50")

def test_gamma_sets_are_disjoint():
    """Distinct dominant weights of one level never share a label"""
    print("\n=== Testing Label Disjointness ===")

    for level in (0, 1, 2, 3):
        owners = {}
        for Phi in _dominant_weights((level,), range(-5, 6)):
            for entry in gamma_set(Phi, 40):
                assert entry not in owners, f"{entry} in both {owners.get(entry)} and {Phi}"
                owners[entry] = Phi
        print(f"✅ level {level}: {len(owners)} labels, no overlaps")

def test_gamma_labels_keep_parity():
    """Every label lambda has the parity of Phi(h1)"""
    test_cases = [
        (Phi, "level 2") for Phi in _dominant_weights((2,), range(-5, 6))
    ] + [
        (Phi, "other levels") for Phi in _dominant_weights((1, 3), range(-2, 3))
    ]

    for Phi, description in test_cases:
        entries = gamma_set(Phi, 40)
        assert entries, Phi
        assert all((entry.lam - Phi.eval_h(1)) % 2 == 0 for entry in entries), (description, Phi)
    print(f"✅ {len(test_cases)} weights keep label parity")

def test_diagram_automorphism():
    """The automorphism swaps Lambda0 and Lambda1 and is an involution"""
    assert diagram_automorphism(LAMBDA0) == LAMBDA1
    assert diagram_automorphism(LAMBDA1) == LAMBDA0
    assert apply_automorphism(Weight(2, 0, -1), 2) == Weight(2, 0, -1)
    for w in (Weight(2, 1, 3), Weight(3, 0, -1), DELTA):
        assert diagram_automorphism(diagram_automorphism(w)) == w
    assert diagram_automorphism(DELTA) == DELTA

def test_dominance_diff():
    """Test Lambda_j + upper - lower in the simple root basis"""
    print("\n=== Testing Dominance Differences ===")

    test_cases = [
        (LAMBDA1, Weight(2, 0, 0), 1, (0, 1), "Lambda1 + Lambda1 - 2*Lambda0"),
        (LAMBDA0, Weight(2, 0, 0), 0, (0, 0), "Top of Lambda0 x Lambda0"),
        (LAMBDA0, Weight(2, 0, -1), 0, (1, 1), "One delta down"),
        (LAMBDA0, Weight(2, 2, 0), 0, None, "Above the top"),
        (LAMBDA0, Weight(2, 1, 0), 0, None, "Wrong parity"),
        (LAMBDA0, Weight(3, 0, 0), 0, None, "Wrong level"),
    ]

    for upper, lower, j, expected, description in test_cases:
        result = dominance_diff(upper, lower, j)
        status = "✅" if result == expected else "❌"
        print(f"{status} {description}: {result}")
        assert result == expected

def main():
    """Run all affine weight tests"""
    print("🧪 Running Affine Weight Tests")
    print("=" * 50)

    test_weight_basics()
    test_weight_text_round_trip()
    test_reflections()
    test_sigma_k_closed_form()
    test_gamma_set()
    test_reflections_random_weights()
    test_sigma_k_closed_form_far_out()
    test_gamma_sets_are_disjoint()
    test_gamma_labels_keep_parity()
    test_diagram_automorphism()
    test_dominance_diff()

    print("\n✅ All affine weight tests completed!")

if __name__ == "__main__":
    main()
