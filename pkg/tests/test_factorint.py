from math import factorial

import pytest

import oracles
from catsigma import (
    Factorization,
    binary_digit_sum,
    factor_u64,
    legendre_valuation,
    two_adic_split,
)


@pytest.mark.parametrize("n,p,expected", [(10, 2, 8), (8, 2, 7), (0, 5, 0), (1, 7, 0)])
def test_legendre_examples(n, p, expected):
    assert legendre_valuation(n, p) == expected


def test_legendre_rejects_composite_p():
    with pytest.raises(ValueError):
        legendre_valuation(10, 4)
    with pytest.raises(ValueError):
        legendre_valuation(5, 1)


def test_legendre_rejects_negative_n():
    with pytest.raises(ValueError):
        legendre_valuation(-1, 2)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_legendre_matches_running_factorial_valuation(p):
    # v_p(n!) = v_p((n-1)!) + v_p(n), accumulated by direct division
    running = 0
    for n in range(1, 10_001):
        m = n
        while m % p == 0:
            running += 1
            m //= p
        assert legendre_valuation(n, p) == running


@pytest.mark.parametrize("n,p", [(10, 2), (50, 3), (100, 5), (200, 7)])
def test_legendre_matches_big_factorial_division(n, p):
    f = factorial(n)
    e = 0
    while f % p == 0:
        f //= p
        e += 1
    assert legendre_valuation(n, p) == e


def test_legendre_near_word_size():
    n = 2**62
    assert legendre_valuation(n, 2) == n - 1  # power of two: v2(n!) = n - s2(n)


def test_v2_equals_n_minus_digit_sum():
    for n in range(100_001):
        assert legendre_valuation(n, 2) == n - binary_digit_sum(n)


@pytest.mark.parametrize("n,expected", [(0, 0), (8, 1), (10, 2), (255, 8)])
def test_binary_digit_sum(n, expected):
    assert binary_digit_sum(n) == expected


def test_binary_digit_sum_rejects_negative():
    with pytest.raises(ValueError):
        binary_digit_sum(-1)


@pytest.mark.parametrize(
    "n,expected",
    [
        (35, ((5, 1), (7, 1))),
        (125, ((5, 3),)),
        (429, ((3, 1), (11, 1), (13, 1))),
        (2, ((2, 1),)),
        (2**62, ((2, 62),)),
    ],
)
def test_factor_examples(n, expected):
    assert factor_u64(n).entries == expected


def test_factor_rejects_out_of_range():
    with pytest.raises(ValueError):
        factor_u64(1)
    with pytest.raises(ValueError):
        factor_u64(0)
    with pytest.raises(ValueError):
        factor_u64(2**64)


def test_factor_spf_path_exhaustive(table_100k):
    # the prime list itself is validated against trial division in test_primes
    pset = set(table_100k.primes)
    for n in range(2, 100_001):
        f = factor_u64(n, table_100k)
        assert f.value == n
        assert all(p in pset for p, _ in f)


def test_factor_spf_path_matches_trial_division(table_100k):
    for n in range(2, 3_000):
        assert dict(factor_u64(n, table_100k).entries) == oracles.trial_factor(n)


@pytest.mark.parametrize(
    "n,expected",
    [
        (1000003 * 1000033, {1000003: 1, 1000033: 1}),
        (1000003**2, {1000003: 2}),
        (99999931**2, {99999931: 2}),
        (18446744073709551557, {18446744073709551557: 1}),  # largest prime < 2**64
        (2 * 3 * 5 * 7 * 1000003, {2: 1, 3: 1, 5: 1, 7: 1, 1000003: 1}),
        (2**63, {2: 63}),
    ],
)
def test_factor_generic_path(n, expected):
    assert dict(factor_u64(n).entries) == expected


def test_factor_generic_is_reproducible():
    n = 6 * 10**18 + 1
    first = factor_u64(n)
    assert first.entries == factor_u64(n).entries
    assert first.value == n


def test_factorization_validation():
    with pytest.raises(ValueError):
        Factorization(((5, 1), (3, 1)))  # not increasing
    with pytest.raises(ValueError):
        Factorization(((3, 0),))  # exponent < 1
    f = Factorization(((2, 2), (3, 1)))
    assert f.value == 12
    assert f.prime_factors() == (2, 3)
    assert f.exponent_of(2) == 2
    assert f.exponent_of(7) == 0
    assert len(f) == 2


def test_two_adic_split():
    s = two_adic_split(48)
    assert (s.exponent, s.odd_part) == (4, 3)
    assert s.value == 48
    assert two_adic_split(35).exponent == 0
    assert two_adic_split(1).odd_part == 1
    with pytest.raises(ValueError):
        two_adic_split(0)


def test_two_adic_split_odd_part_is_odd():
    for value in range(1, 2_000):
        s = two_adic_split(value)
        assert s.odd_part % 2 == 1
        assert s.value == value
