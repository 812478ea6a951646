#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Test script for the brute-force character oracle
"""

import pytest

from algebra.affine_weights import ALPHA0, ALPHA1, DELTA, LAMBDA0, LAMBDA1, Weight, reflect
from algebra.char_oracle import (
    WeightMultMap, decompose, freudenthal, inner, oracle_tensor_table, tensor_character
)
from algebra.outer_mult import candidate_phis, outer_mult_11, outer_mult_closed_form
from validation import DomainError, IntegrityError, ResourceError

def test_invariant_form():
    """Normalization of the invariant form"""
    assert inner(ALPHA1, ALPHA1) == 2
    assert inner(ALPHA0, ALPHA0) == 2
    assert inner(ALPHA0, ALPHA1) == -2
    assert inner(LAMBDA0, DELTA) == 1
    assert inner(DELTA, DELTA) == 0

def test_basic_representation():
    """V(Lambda0) has string function 1/(q;q)_infinity"""
    print("\n=== Testing Basic Representation ===")

    character = freudenthal(LAMBDA0, 6)
    test_cases = [
        (Weight(1, 0, -n), expected, f"Lambda0 - {n}*delta")
        for n, expected in enumerate([1, 1, 2, 3, 5, 7, 11])
    ]
    test_cases += [
        (Weight(1, 2, -1), 1, "s0 Lambda0"),
        (Weight(1, 2, -2), 1, "s0 Lambda0 - delta"),
        (Weight(1, 2, -3), 2, "s0 Lambda0 - 2*delta"),
        (Weight(1, -2, -1), 1, "s1 s0 Lambda0"),
        (Weight(1, 1, -1), 0, "Wrong parity"),
    ]

    for weight, expected, description in test_cases:
        result = character.mult(weight)
        status = "✅" if result == expected else "❌"
        print(f"{status} {description}: {result}")
        assert result == expected

    assert freudenthal(LAMBDA0, 1).total() == 4

    with pytest.raises(DomainError):
        character.mult(Weight(1, 0, -7))

def test_weyl_invariance():
    """Characters are invariant under both simple reflections"""
    for Lambda in (LAMBDA1, Weight(2, 1, 0), Weight(3, 0, 2)):
        depth = 4
        character = freudenthal(Lambda, depth)
        for mu, mult in character.entries.items():
            for i in (0, 1):
                image = reflect(mu, i)
                if character.depth_of(image) <= depth:
                    assert character.mult(image) == mult, (Lambda, mu, i)
        print(f"✅ V({Lambda}) is Weyl invariant to depth {depth}")

def test_freudenthal_guards():
    """Bad highest weights and depths are refused"""
    with pytest.raises(DomainError):
        freudenthal(Weight(1, 2, 0), 2)
    with pytest.raises(DomainError):
        freudenthal(DELTA, 2)
    with pytest.raises(ResourceError):
        freudenthal(LAMBDA0, 1000)

def test_cached_character_is_a_copy():
    """Mutating a returned character leaves the memo intact"""
    first = freudenthal(LAMBDA1, 2)
    first.entries.clear()
    assert freudenthal(LAMBDA1, 2).mult(LAMBDA1) == 1

def test_tensor_character():
    """Products of truncated characters"""
    product = tensor_character(freudenthal(LAMBDA0, 1), freudenthal(LAMBDA0, 3))
    assert product.depth == 1
    assert product.level == 2
    assert product.mult(Weight(2, 0, 0)) == 1
    assert product.mult(Weight(2, 0, -1)) == 2
    assert product.mult(Weight(2, 2, -1)) == 2

def test_decompose():
    """Decomposition of Lambda0 x Lambda0 at small depth"""
    print("\n=== Testing Decomposition ===")

    product = tensor_character(freudenthal(LAMBDA0, 2), freudenthal(LAMBDA0, 2))
    table = decompose(product)
    expected = {
        Weight(2, 0, 0): 1,
        Weight(2, 2, -1): 1,
        Weight(2, 0, -2): 1,
        Weight(2, 2, -2): 1,
    }
    status = "✅" if table == expected else "❌"
    print(f"{status} {table}")
    assert table == expected
    assert decompose(product, depth=1) == {Weight(2, 0, 0): 1, Weight(2, 2, -1): 1}

    for seed in range(3):
        assert decompose(product, seed=seed) == expected

def test_oracle_matches_closed_forms():
    """The oracle agrees with the closed forms"""
    print("\n=== Testing Oracle Against Closed Forms ===")

    depth = 6
    for i, Lambda in ((0, LAMBDA0), (1, LAMBDA0), (0, LAMBDA1)):
        table = oracle_tensor_table(i, Lambda, depth)
        expected = {}
        for Phi in candidate_phis(i, Lambda, depth):
            value = outer_mult_closed_form(i, Lambda, Phi)
            if value:
                expected[Phi] = value
        assert table == expected, (i, Lambda)
        print(f"✅ V(Lambda{i}) x V({Lambda}) to depth {depth}")

    table = oracle_tensor_table(1, LAMBDA1, depth)
    for Phi in candidate_phis(1, LAMBDA1, depth):
        assert table.get(Phi, 0) == outer_mult_11(Phi)
    print(f"✅ V(Lambda1) x V(Lambda1) to depth {depth}")

def test_decompose_integrity():
    """Characters that are not sums of irreducibles are rejected"""
    with pytest.raises(IntegrityError):
        decompose(WeightMultMap(1, 0, 1, {LAMBDA0: 1}))
    with pytest.raises(IntegrityError):
        decompose(WeightMultMap(1, 0, 0, {Weight(1, -1, 0): 1}))

def test_json_form():
    """Characters serialize top weight first with string multiplicities"""
    rows = freudenthal(LAMBDA0, 1).to_json()
    assert rows[0] == {'weight': {'L0': 1, 'w1': 0, 'delta': 0}, 'mult': '1'}
    assert len(rows) == 4

def main():
    """Run all oracle tests"""
    print("🧪 Running Character Oracle Tests")
    print("=" * 50)

    test_invariant_form()
    test_basic_representation()
    test_weyl_invariance()
    test_freudenthal_guards()
    test_cached_character_is_a_copy()
    test_tensor_character()
    test_decompose()
    test_oracle_matches_closed_forms()
    test_decompose_integrity()
    test_json_form()

    print("\n✅ All oracle tests completed!")

if __name__ == "__main__":
    main()
