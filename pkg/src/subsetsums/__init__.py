"""Exact subset-sum counts over finite abelian groups.

Counts the k-subsets of ``Z_{n_1} x ... x Z_{n_s}`` whose elements add up
to a given target, using the Li-Wan divisor-sum formula, and checks the
result against brute-force oracles.
"""

from subsetsums.numtheory import binomial, divisors, euler_phi, gcd, moebius
from subsetsums.group import (
    GroupElement,
    GroupSpec,
    add,
    canonicalize,
    elements,
    parse_element,
    parse_moduli,
    total_sum,
)
from subsetsums.counting import CountTable, count_subset_sums, count_table, phi_lw
from subsetsums.oracle import oracle_dp, oracle_enum
from subsetsums.analysis import (
    BoundReport,
    RatioReport,
    SweepRow,
    binomial_ratio_check,
    bound_report,
    convergence_sweep,
    deviation_bound,
    deviation_check,
    endpoint_max_check,
    l_second_derivative,
    l_value,
    main_term,
    uniformity_ratio,
    vanishing_expr,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CountTable",
    "GroupElement",
    "GroupSpec",
    "RatioReport",
    "SweepRow",
    "add",
    "binomial",
    "binomial_ratio_check",
    "bound_report",
    "canonicalize",
    "convergence_sweep",
    "count_subset_sums",
    "count_table",
    "deviation_bound",
    "deviation_check",
    "divisors",
    "elements",
    "endpoint_max_check",
    "euler_phi",
    "gcd",
    "l_second_derivative",
    "l_value",
    "main_term",
    "moebius",
    "oracle_dp",
    "oracle_enum",
    "parse_element",
    "parse_moduli",
    "phi_lw",
    "total_sum",
    "uniformity_ratio",
    "vanishing_expr",
]
