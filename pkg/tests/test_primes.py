"""Primes in (m/2, m] and the choice of p for the Chern-class argument."""

import bisect

import pytest
from sympy import isprime, primerange

from primes import (
    Justification,
    NoAdmissiblePrimeError,
    choose_p,
    count_primes_in_interval,
    primes_in_interval,
    trial_division_primes,
    verify_r2,
)


class TestPrimesInInterval:
    @pytest.mark.parametrize("m", range(2, 200))
    def test_agrees_with_trial_division(self, m):
        assert primes_in_interval(m) == trial_division_primes(m // 2, m)

    def test_agrees_with_isprime(self):
        for m in range(2, 5000, 7):
            assert primes_in_interval(m) == [q for q in range(m // 2 + 1, m + 1) if isprime(q)]

    def test_agrees_with_trial_division_to_ten_thousand(self):
        oracle = trial_division_primes(1, 10_000)
        for m in range(2, 10_001):
            expected = oracle[bisect.bisect_right(oracle, m // 2):bisect.bisect_right(oracle, m)]
            assert primes_in_interval(m) == expected, m

    def test_bertrand(self):
        assert all(count_primes_in_interval(m) >= 1 for m in range(2, 2000))

    def test_bertrand_to_one_hundred_thousand(self):
        primes = list(primerange(2, 100_001))
        for m in range(2, 100_001):
            assert bisect.bisect_right(primes, m) > bisect.bisect_right(primes, m // 2), m

    def test_small_values(self):
        assert primes_in_interval(2) == [2]
        assert primes_in_interval(10) == [7]
        assert count_primes_in_interval(10) == 1
        assert count_primes_in_interval(11) == 2

    def test_needs_m_at_least_two(self):
        with pytest.raises(ValueError):
            primes_in_interval(1)

    def test_cap_is_enforced(self):
        with pytest.raises(ValueError):
            primes_in_interval(5000, cap=1000)


class TestChooseP:
    def test_m5_rejects_three(self):
        choice = choose_p(5)
        assert (choice.p, choice.k) == (5, 3)
        assert choice.candidates == (3, 5)
        assert choice.rejected == (3,)
        assert choice.justification is Justification.BERTRAND

    def test_m9(self):
        choice = choose_p(9)
        assert (choice.p, choice.k) == (7, 5)
        assert choice.rejected == (5,)
        assert choice.alternates == ()

    def test_even_m_uses_half(self):
        choice = choose_p(8)
        assert (choice.p, choice.k) == (7, 4)
        assert choice.alternates == (5,)

    def test_m3(self):
        assert choose_p(3).p == 3

    def test_needs_m_at_least_three(self):
        with pytest.raises(ValueError):
            choose_p(2)

    @pytest.mark.parametrize("m", range(3, 300))
    def test_choice_is_admissible(self, m):
        choice = choose_p(m)
        assert m < 2 * choice.p <= 2 * m
        assert choice.p % 2 == 1
        assert (m + 1) % choice.p != 0
        assert choice.p == max(q for q in choice.candidates if q not in choice.rejected)

    def test_largest_candidate_is_always_admissible(self):
        for m in range(3, 3000):
            choice = choose_p(m)
            assert choice.p == max(choice.candidates), m
            assert choice.justification is Justification.BERTRAND

    def test_no_admissible_prime_error_is_a_value_error(self):
        assert issubclass(NoAdmissiblePrimeError, ValueError)


class TestRamanujan:
    def test_two_primes_from_eleven_on(self):
        assert verify_r2(100_000)

    def test_ten_is_below_the_bound(self):
        with pytest.raises(ValueError):
            verify_r2(10)
