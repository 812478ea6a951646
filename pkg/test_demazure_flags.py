#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Test script for flag multiplicities, beta families and their limits
"""

from fractions import Fraction

import pytest

from algebra.demazure_flags import (
    FlagMultQuery, LevelOneFlagProvider, alpha1, alpha1_via_beta, beta, beta_sequence,
    flag_generating_series, flag_multiplicity, paired_limit_plus, provider_for_level,
    stabilized_limit, weyl_flag_poly
)
from algebra.partitions import rho_bounded
from algebra.qseries import QPoly
from validation import ConsistencyError, DomainError, UnsupportedLevelError

def test_weyl_flag_poly():
    """Test graded flag multiplicities of small Weyl modules"""
    print("\n=== Testing Flag Polynomials ===")

    test_cases = [
        (2, 0, QPoly({1: 1}), "q"),
        (3, 1, QPoly({2: 1}), "q^2"),
        (4, 0, QPoly({4: 1}), "q^4"),
        (4, 2, QPoly({2: 1, 3: 1}), "q^2 + q^3"),
        (4, 4, QPoly({0: 1}), "Top component"),
        (3, 0, QPoly(), "Parity mismatch"),
        (2, 3, QPoly(), "lam above mu"),
    ]

    for mu, lam, expected, description in test_cases:
        result = weyl_flag_poly(mu, lam)
        status = "✅" if result == expected else "❌"
        print(f"{status} {description}: [W({mu}):D(2,{lam})] = {result}")
        assert result == expected

    assert flag_multiplicity(FlagMultQuery(mu=4, lam=2, r=3)) == 1
    assert flag_multiplicity(FlagMultQuery(mu=4, lam=2, r=4)) == 0
    assert flag_generating_series(0, 2) == {0: QPoly({0: 1}), 1: QPoly({1: 1}), 2: QPoly({4: 1})}

def test_weyl_flag_poly_large_mu():
    """Flags of large Weyl modules come from the iterative binomial rows"""
    near_top = weyl_flag_poly(4400, 4398)
    assert near_top == QPoly({r: 1 for r in range(2200, 4400)})

    second = weyl_flag_poly(4400, 4396)
    assert second.min_degree() == 4400
    assert second.evaluate(1) == 2200 * 2199 // 2
    print(f"✅ [W(4400):D(2,4396)] has {len(second.terms)} terms")

def test_beta():
    """Test the two beta families"""
    print("\n=== Testing Beta Families ===")

    test_cases = [
        ('-', 3, 2, 4, 1, "rho^1_2(1)"),
        ('+', 3, 2, 4, 1, "rho^1_2(0)"),
        ('-', 3, 3, 0, 1, "p = 0"),
        ('-', 2, 3, 0, 0, "l above m"),
        ('+', 2, -1, 0, 0, "Negative l"),
        ('-', 4, 2, 8, 1, "Offset reaches r"),
    ]

    for sign, m, l, r, expected, description in test_cases:
        result = beta(sign, m, l, r)
        status = "✅" if result == expected else "❌"
        print(f"{status} {description}: beta{sign}_{{{m},{l}}}({r}) = {result}")
        assert result == expected

    with pytest.raises(DomainError):
        beta('*', 3, 2, 4)

def test_alpha1_agrees_with_beta():
    """The level-one flag coefficients read off either way agree"""
    print("\n=== Testing alpha1 ===")

    assert alpha1(0, 1, 1) == 1
    assert alpha1(0, Fraction(1, 2), 1) == 0
    assert alpha1(0, -1, 0) == 0
    assert alpha1(3, Fraction(4, 2), 6) == alpha1(3, 2, 6)

    for lam in range(7):
        for m in range(5):
            for r in range(25):
                assert alpha1(lam, m, r) == alpha1_via_beta(lam, m, r), (lam, m, r)
    print("✅ alpha1 matches the beta families for lam <= 6, m <= 4")

def test_stabilized_limit():
    """Test the limits of the beta sequences"""
    print("\n=== Testing Stabilized Limits ===")

    limit = stabilized_limit('-', 2, 3)
    assert limit.value == 2
    assert limit.threshold == 5
    assert stabilized_limit('+', 4, -4).value == 0

    for sign in ('-', '+'):
        for b in range(6):
            for f in range(-1, 12):
                limit = stabilized_limit(sign, b, f)
                assert limit.value == rho_bounded(b, f)
                tail = [beta_sequence(sign, k, b, f) for k in range(limit.threshold, limit.threshold + 8)]
                assert tail == [limit.value] * 8, (sign, b, f)
    print("✅ Sequences are constant from the threshold on")

def test_paired_limit_plus():
    """The beta+ pair at b=2l and b=2l-1 sums to one bounded count"""
    print("\n=== Testing Paired Limits ===")

    assert paired_limit_plus(2, 6) == 1
    assert paired_limit_plus(1, 3) == 2
    for l in range(1, 4):
        for s in range(25):
            assert paired_limit_plus(l, s) == rho_bounded(2 * l, s - 2 * l * l + l)
    print("✅ Paired limits for l <= 3, s < 25")

    for l in (0, -1):
        with pytest.raises(DomainError) as excinfo:
            paired_limit_plus(l, 5)
        assert not isinstance(excinfo.value, ConsistencyError)

def test_provider():
    """Only level one has a flag multiplicity provider"""
    provider = provider_for_level(1)
    assert isinstance(provider, LevelOneFlagProvider)
    assert provider.alpha(0, 1, 1) == 1
    assert provider.limit('-', 2, 3).value == 2
    with pytest.raises(UnsupportedLevelError):
        provider_for_level(2)

def main():
    """Run all flag multiplicity tests"""
    print("🧪 Running Flag Multiplicity Tests")
    print("=" * 50)

    test_weyl_flag_poly()
    test_weyl_flag_poly_large_mu()
    test_beta()
    test_alpha1_agrees_with_beta()
    test_stabilized_limit()
    test_paired_limit_plus()
    test_provider()

    print("\n✅ All flag multiplicity tests completed!")

if __name__ == "__main__":
    main()
