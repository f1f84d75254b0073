import math

import pytest

from primroot import primes
from oracles import trial_division_is_prime


def test_first_primes():
    assert primes.primes_in_range(2, 11) == [2, 3, 5, 7, 11]


def test_empty_range():
    assert primes.primes_in_range(14, 16) == []


def test_range_matches_trial_division():
    assert primes.primes_in_range(90, 100) == [97]
    got = primes.primes_in_range(2, 2000)
    expected = [n for n in range(2, 2001) if trial_division_is_prime(n)]
    assert got == expected


def test_range_budget():
    with pytest.raises(ValueError):
        primes.primes_in_range(2, 10**9 + 1, max_span=10**6)


def test_range_high_segment():
    lo = 10**12
    got = primes.primes_in_range(lo, lo + 1000)
    expected = [n for n in range(lo, lo + 1001) if primes.is_prime(n)]
    assert got == expected
    assert got  # the decade above 10^12 does contain primes


def test_is_prime_basic():
    assert primes.is_prime(2)
    assert not primes.is_prime(1)
    assert primes.is_prime(2**61 - 1)
    assert not primes.is_prime(2**61 + 1)


def test_is_prime_strong_pseudoprime():
    # strong pseudoprime to bases 2,3,5,7; composite by trial division
    n = 3215031751
    assert not primes.is_prime(n)
    assert not trial_division_is_prime(n)


def test_is_prime_matches_trial_division():
    for n in range(1, 5000):
        assert primes.is_prime(n) == trial_division_is_prime(n)


def test_is_prime_domain():
    with pytest.raises(ValueError):
        primes.is_prime(0)
    with pytest.raises(ValueError):
        primes.is_prime(1 << 63)


def test_sieve_per_element_agreement():
    got = set(primes.primes_in_range(10**6, 10**6 + 10**4))
    for n in range(10**6, 10**6 + 10**4 + 1):
        assert (n in got) == primes.is_prime(n)


def test_monotone_counts():
    counts = [len(primes.primes_in_range(2, x)) for x in (10, 100, 1000, 5000)]
    assert counts == sorted(counts)


def test_factorize_shifted_small():
    rec = primes.factorize_shifted(13)
    assert rec.factors == ((2, 2), (3, 1))
    assert rec.q_list == (2, 3)
    rec = primes.factorize_shifted(31)
    assert rec.factors == ((2, 1), (3, 1), (5, 1))


def test_factorize_shifted_rejects_composite():
    with pytest.raises(ValueError):
        primes.factorize_shifted(15)
    with pytest.raises(ValueError):
        primes.factorize_shifted(2)


def test_factorize_shifted_mersenne_roundtrip():
    rec = primes.factorize_shifted(2**61 - 1)
    prod = math.prod(q**e for q, e in rec.factors)
    assert prod == 2**61 - 2
    assert all(primes.is_prime(q) for q in rec.q_list)


def test_prime_record_roundtrip_range():
    for p in primes.primes_in_range(3, 2000):
        rec = primes.factorize_shifted(p)
        assert math.prod(q**e for q, e in rec.factors) == p - 1
        assert rec.q_list[0] == 2
        assert list(rec.q_list) == sorted(set(rec.q_list))
        assert rec.omega == len(rec.q_list)


def test_spf_sieve_agrees_with_factorize():
    spf = primes.spf_sieve(3000)
    for n in range(2, 3001):
        qs = primes.distinct_primes_spf(n, spf)
        assert qs == [q for q, _ in primes.factorize(n)]
