"""Exit criteria.  Each test is one criterion; a PASS/FAIL line per criterion
is printed in the terminal summary (see conftest.py)."""

import random
import time
from fractions import Fraction

import pytest

from subsetsums import GroupElement, GroupSpec
from subsetsums.analysis import (
    binomial_ratio_check,
    convergence_sweep,
    deviation_check,
    endpoint_max_check,
    l_second_derivative,
    l_value,
    vanishing_expr,
)
from subsetsums.counting import count_subset_sums, count_table
from subsetsums.group import elements, total_sum
from subsetsums.numtheory import binomial
from subsetsums.oracle import oracle_dp, oracle_enum, standard_family

pytestmark = pytest.mark.acceptance

POWERS_8_4096 = [2**e for e in range(3, 13)]


def test_formula_oracle_equivalence():
    """Formula == enumeration == DP on the pinned family (order <= 16), all k, all b; < 60 s."""
    start = time.perf_counter()
    family = standard_family(16)
    assert len(family) == 40
    for spec in family:
        for k in range(spec.order + 1):
            formula = count_table(spec, k)
            enum, dp = oracle_enum(spec, k), oracle_dp(spec, k)
            for b in elements(spec):
                assert count_subset_sums(spec, k, b) == formula[b] == enum[b] == dp[b], (spec, k, b)
    assert time.perf_counter() - start < 60


@pytest.mark.parametrize(
    "moduli, k, expected",
    [((4,), 2, [1, 2, 1, 2]), ((2, 2), 2, [0, 2, 2, 2]), ((6,), 3, [4, 3, 3, 4, 3, 3])],
)
def test_pinned_tables(moduli, k, expected):
    """Pinned tables in lexicographic element order, exact."""
    assert count_table(GroupSpec(moduli), k).counts() == expected


def test_column_sum_identity():
    """sum_b N(k, b) == C(n, k) on 200 seeded random (spec, k) with n <= 200; < 30 s."""
    rng = random.Random(20260101)
    start = time.perf_counter()
    done = 0
    while done < 200:
        moduli = tuple(rng.randint(1, 200) for _ in range(rng.randint(1, 3)))
        spec = GroupSpec(moduli)
        if spec.order > 200:
            continue
        k = rng.randint(0, spec.order)
        assert count_table(spec, k).total() == binomial(spec.order, k), (spec, k)
        done += 1
    assert time.perf_counter() - start < 30


def test_complement_symmetry():
    """N(k, b) == N(n-k, S-b) on the pinned family, exact."""
    for spec in standard_family(16):
        n, s = spec.order, total_sum(spec)
        for k in range(n + 1):
            t, tc = count_table(spec, k), count_table(spec, n - k)
            for b in elements(spec):
                diff = GroupElement(tuple((x - y) % m for x, y, m in zip(s.residues, b.residues, spec.moduli)))
                assert t[b] == tc[diff], (spec, k, b)


def test_inequality_suite():
    """Binomial-ratio inequality for even n <= 256; deviation bound for even n <= 128."""
    for n in range(2, 257, 2):
        for k in range(2, n + 1, 2):
            assert binomial_ratio_check(n, k), (n, k)
    for n in range(8, 129, 2):
        for k in range(4, n // 2 + 2, 2):
            for spec in (GroupSpec((n,)), GroupSpec((2, n // 2))):
                ok, witness = deviation_check(spec, k)
                assert ok, (spec, k, witness)


def test_calculus_trace():
    """L'' vanishes at k = 4; L_256(4) = 0; L_n peaks at an endpoint for n = 8..4096."""
    assert abs(l_second_derivative(4)) <= 1e-15
    assert abs(l_value(256, 4)) <= 1e-12
    for n in POWERS_8_4096:
        ok, argmax = endpoint_max_check(n)
        assert ok and argmax in (4, n // 2 + 1), (n, argmax)


def test_vanishing_trace():
    """n k^2 C(n/2,k/2)/C(n,k): strictly decreasing at k = 4, < 0.02 at 4096; < 1e-6 at (256, 128)."""
    vals = [vanishing_expr(n, 4) for n in POWERS_8_4096]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    assert vals[-1] < 0.02
    half = [vanishing_expr(n, n // 2) for n in POWERS_8_4096[:6]]
    assert all(a > b for a, b in zip(half, half[1:]))
    assert vanishing_expr(256, 128) < 1e-6


K4_RATIOS = {
    64: Fraction(620, 621),
    128: Fraction(2604, 2605),
    256: Fraction(10668, 10669),
    512: Fraction(43180, 43181),
    1024: Fraction(173740, 173741),
}


def test_convergence_trace_fixed_k4():
    """Cyclic, k = 4, n = 64..1024: strictly increasing ratios, final >= 0.99."""
    start = time.perf_counter()
    rows = convergence_sweep("cyclic", list(K4_RATIOS), "fixed:4")
    ratios = [r.ratio for r in rows]
    assert ratios == list(K4_RATIOS.values())
    assert all(a < b for a, b in zip(ratios, ratios[1:]))
    assert ratios[-1] >= Fraction(99, 100)
    assert time.perf_counter() - start < 300


def test_convergence_trace_half_plus_one():
    """Cyclic, k = n//2 + 1, n = 64..512: strictly increasing ratios, final >= 0.9999."""
    rows = convergence_sweep("cyclic", [64, 128, 256, 512], "half-plus-one")
    ratios = [r.ratio for r in rows]
    assert ratios[-1] >= Fraction(9999, 10000)
    assert all(a < b for a, b in zip(ratios, ratios[1:])), f"ratios not strictly increasing: {ratios}"


def test_half_plus_one_on_powers_of_two_is_exactly_uniform():
    """For n = 2^m, k = n/2 + 1 is odd, so gcd(n, k) = 1 and every count is C(n, k)/n."""
    rows = convergence_sweep("cyclic", [64, 128, 256, 512], "half-plus-one")
    assert [r.ratio for r in rows] == [1, 1, 1, 1]
    assert all(r.min_count == binomial(r.n, r.k) // r.n for r in rows)
