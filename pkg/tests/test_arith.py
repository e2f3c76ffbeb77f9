"""Testes das funções aritméticas."""
from collections import Counter
from math import gcd

import pytest
from pydantic import ValidationError
from sympy import divisor_count
from sympy import mobius as sympy_mobius
from sympy import totient as sympy_totient

from src.arith.functions import (
    coprime_part,
    divisor_set,
    divisors,
    generating_coset_profile,
    hcf,
    is_prime_power,
    lcm,
    mobius,
    prime_factors,
    tau,
    totient,
)
from src.models.schemas import CosetOrderProfile, DivisorSet


class TestDivisors:
    def test_small_values(self):
        assert divisors(1) == (1,)
        assert divisors(12) == (1, 2, 3, 4, 6, 12)
        assert divisors(97) == (1, 97)

    def test_divisor_set_model(self):
        ds = divisor_set(36)
        assert list(ds) == [1, 2, 3, 4, 6, 9, 12, 18, 36]
        assert len(ds) == tau(36) == 9

    @pytest.mark.parametrize("bad", [0, -4])
    def test_rejects_non_positive(self, bad):
        with pytest.raises(ValueError):
            divisor_set(bad)

    def test_model_rejects_inconsistent_list(self):
        with pytest.raises(ValidationError):
            DivisorSet(n=6, divisors=(1, 2, 6))
        with pytest.raises(ValidationError):
            DivisorSet(n=6, divisors=(1, 4, 6))


class TestMultiplicativeFunctions:
    def test_anchors(self):
        assert totient(1) == 1
        assert totient(12) == 4
        assert totient(97) == 96
        assert [mobius(k) for k in (1, 2, 4, 6, 30)] == [1, -1, 0, 1, -1]
        assert tau(1) == 1
        assert tau(60) == 12

    def test_prime_factors(self):
        assert prime_factors(1) == ()
        assert prime_factors(360) == ((2, 3), (3, 2), (5, 1))
        assert prime_factors(10007 * 3) == ((3, 1), (10007, 1))

    def test_prime_power(self):
        assert is_prime_power(1) is None
        assert is_prime_power(8) == (2, 3)
        assert is_prime_power(7) == (7, 1)
        assert is_prime_power(12) is None

    @pytest.mark.parametrize("n", range(1, 201))
    def test_divisor_sums(self, n):
        assert sum(totient(d) for d in divisors(n)) == n
        assert sum(mobius(d) for d in divisors(n)) == (1 if n == 1 else 0)

    def test_multiplicative_on_coprime_pairs(self):
        for m in range(1, 61):
            for M in range(1, 61):
                if gcd(m, M) != 1:
                    continue
                assert totient(m * M) == totient(m) * totient(M)
                assert mobius(m * M) == mobius(m) * mobius(M)
                assert tau(m * M) == tau(m) * tau(M)

    @pytest.mark.slow
    def test_multiplicative_on_coprime_pairs_up_to_1000(self):
        for m in range(1, 1001):
            for M in range(m, 1001):
                if gcd(m, M) != 1:
                    continue
                assert totient(m * M) == totient(m) * totient(M), (m, M)
                assert mobius(m * M) == mobius(m) * mobius(M), (m, M)
                assert tau(m * M) == tau(m) * tau(M), (m, M)

    @pytest.mark.slow
    def test_totient_sum_up_to_10000(self):
        for n in range(1, 10_001):
            assert sum(totient(d) for d in divisors(n)) == n, n

    @pytest.mark.parametrize("n", [1, 2, 12, 30, 97, 360, 1001, 9973, 10_000, 10_007 * 3])
    def test_agrees_with_sympy(self, n):
        assert totient(n) == sympy_totient(n)
        assert mobius(n) == sympy_mobius(n)
        assert tau(n) == divisor_count(n)

    def test_gcd_lcm(self):
        assert hcf(12, 18) == 6
        assert lcm(4, 6) == 12
        assert coprime_part(12, 2) == 3
        assert coprime_part(12, 5) == 12


class TestGeneratingCosetProfile:
    def test_anchor_power_of_two(self):
        profile = generating_coset_profile(2, 12)
        assert (profile.v, profile.u) == (1, 2)
        assert profile.order_counts == {12: 2}

    def test_anchor_mixed(self):
        profile = generating_coset_profile(6, 12)
        assert (profile.v, profile.u) == (3, 2)
        assert profile.order_counts == {4: 2, 12: 4}

    def test_trivial_subgroup(self):
        assert generating_coset_profile(1, 7).order_counts == {7: 1}

    def test_rejects_non_divisor(self):
        with pytest.raises(ValueError):
            generating_coset_profile(5, 12)

    def test_model_checks_counts(self):
        with pytest.raises(ValidationError):
            CosetOrderProfile(i=2, j=4, u=2, v=1, order_counts={4: 1})

    @pytest.mark.parametrize("j", range(1, 201))
    def test_matches_census_in_cyclic_group(self, j):
        for i in divisors(j):
            step = j // i
            census = Counter(j // gcd(1 + k * step, j) for k in range(i))
            assert generating_coset_profile(i, j).order_counts == dict(census)
