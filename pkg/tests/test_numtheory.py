from math import factorial, gcd as std_gcd

import pytest
from hypothesis import given, strategies as st

from subsetsums.numtheory import binomial, divisors, euler_phi, factorize, gcd, moebius


@pytest.mark.parametrize("a, b, expected", [(6, 3, 3), (5, 2, 1), (0, 7, 7), (7, 0, 7), (0, 0, 0)])
def test_gcd_examples(a, b, expected):
    assert gcd(a, b) == expected


@given(st.integers(0, 10**12), st.integers(0, 10**12))
def test_gcd_properties(a, b):
    g = gcd(a, b)
    assert g == gcd(b, a) == std_gcd(a, b)
    if g:
        assert a % g == 0 and b % g == 0


def test_gcd_rejects_negative():
    with pytest.raises(ValueError):
        gcd(-1, 2)


@pytest.mark.parametrize("m, expected", [(1, [1]), (6, [1, 2, 3, 6]), (12, [1, 2, 3, 4, 6, 12])])
def test_divisors_examples(m, expected):
    assert divisors(m) == expected


def test_divisors_match_scan_and_are_closed():
    for m in range(1, 2001):
        ds = divisors(m)
        assert ds == [d for d in range(1, m + 1) if m % d == 0]
        assert {m // d for d in ds} == set(ds)


@pytest.mark.parametrize("fn", [divisors, moebius, euler_phi])
def test_zero_rejected(fn):
    with pytest.raises(ValueError):
        fn(0)


@pytest.mark.parametrize("r, expected", [(1, 1), (4, 0), (6, 1), (2, -1), (30, -1), (12, 0)])
def test_moebius_examples(r, expected):
    assert moebius(r) == expected


@pytest.mark.parametrize("r, expected", [(1, 1), (2, 1), (12, 4)])
def test_euler_phi_examples(r, expected):
    assert euler_phi(r) == expected


def test_moebius_and_totient_identities_to_10k():
    for m in range(1, 10**4 + 1):
        ds = divisors(m)
        assert sum(moebius(d) for d in ds) == (1 if m == 1 else 0)
        assert sum(moebius(m // d) * d for d in ds) == euler_phi(m)


def test_totient_by_scan():
    for r in range(1, 300):
        assert euler_phi(r) == sum(1 for a in range(1, r + 1) if std_gcd(a, r) == 1)


def test_factorize_roundtrip():
    for m in range(1, 3000):
        prod = 1
        for p, e in factorize(m):
            prod *= p**e
        assert prod == m


@pytest.mark.parametrize("n, k, expected", [(5, 2, 10), (7, 9, 0), (52, 5, 2598960), (0, 0, 1)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_matches_factorials():
    for n in range(0, 80):
        for k in range(0, n + 1):
            assert binomial(n, k) == factorial(n) // (factorial(k) * factorial(n - k))


def test_pascal_and_symmetry_to_200():
    for n in range(1, 201):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
            assert binomial(n, k) == binomial(n, n - k)
