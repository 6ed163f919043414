"""Uniformity ratio of subset-sum counts and the bounds that control it.

The count N(k, b) splits into a main term C(n, k)/n, identical for every b,
plus a deviation that for even n and k is at most k * C(n/2, k/2).  The
ratio min_b N / max_b N tends to 1 once n * k^2 * C(n/2, k/2) / C(n, k)
vanishes; that quantity is controlled through

    L_n(k) = log(n * k^2 * (k/n)^(k/2)),

which is convex in k for k >= 4, so over 4 <= k <= n/2 + 1 it peaks at an
endpoint.  Count-level checks are exact; L_n is evaluated in floats.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, TextIO

from subsetsums.counting import count_table
from subsetsums.group import GroupElement, GroupSpec
from subsetsums.numtheory import binomial

DEFAULT_PRECISION = 12

SWEEP_COLUMNS = (
    "family",
    "n",
    "k",
    "min_count",
    "max_count",
    "ratio_decimal",
    "vanishing_expr",
    "l_value",
)


def render_decimal(q: Fraction, digits: int = DEFAULT_PRECISION) -> str:
    """Round ``q`` once to ``digits`` places, ties to even."""
    if digits < 1:
        raise ValueError(f"precision must be >= 1, got {digits}")
    sign = "-" if q < 0 else ""
    num, den = abs(q.numerator), q.denominator
    scaled, rem = divmod(num * 10**digits, den)
    if 2 * rem > den or (2 * rem == den and scaled % 2):
        scaled += 1
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


class Check(NamedTuple):
    ok: bool
    witness: object = None


@dataclass(frozen=True)
class RatioReport:
    spec: GroupSpec
    k: int
    min_count: int
    max_count: int
    argmin: GroupElement
    argmax: GroupElement
    ratio: Fraction
    precision: int = DEFAULT_PRECISION

    @property
    def ratio_decimal(self) -> str:
        return render_decimal(self.ratio, self.precision)


def uniformity_ratio(
    spec: GroupSpec, k: int, precision: int = DEFAULT_PRECISION
) -> RatioReport:
    """min_b N(k, b) / max_b N(k, b) with lexicographically first witnesses."""
    n = spec.order
    if not 1 <= k <= n - 1:
        raise ValueError(
            f"k must lie in [1, n-1] = [1, {n - 1}] for a meaningful ratio, got {k}; "
            "k = 0 and k = n put the single subset on one element"
        )
    items = list(count_table(spec, k).items())
    argmin, lo = min(items, key=lambda it: it[1])
    argmax, hi = max(items, key=lambda it: it[1])
    return RatioReport(spec, k, lo, hi, argmin, argmax, Fraction(lo, hi), precision)


def main_term(n: int, k: int) -> Fraction:
    """The r = 1 contribution C(n, k)/n, in lowest terms."""
    if n < 1 or not 0 <= k <= n:
        raise ValueError(f"main term needs n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    return Fraction(binomial(n, k), n)


def _require_even(n: int, k: int, k_min: int = 2) -> None:
    if n < 2 or n % 2 or k % 2:
        raise ValueError(f"bound is only defined for even n and k, got n={n}, k={k}")
    if not k_min <= k <= n:
        raise ValueError(f"need {k_min} <= k <= n, got n={n}, k={k}")


def deviation_bound(n: int, k: int) -> int:
    """k * C(n/2, k/2): bound on each non-main term of the divisor sum."""
    _require_even(n, k)
    return k * binomial(n // 2, k // 2)


def deviation_check(spec: GroupSpec, k: int) -> Check:
    """Check |n * N(k, b) - C(n, k)| <= n * k * C(n/2, k/2) for every b.

    The witness is the first violating element, or None.
    """
    n = spec.order
    bound = n * deviation_bound(n, k)
    main = binomial(n, k)
    for b, c in count_table(spec, k).items():
        if abs(n * c - main) > bound:
            return Check(False, b)
    return Check(True, None)


def binomial_ratio_check(n: int, k: int) -> bool:
    """C(n/2, k/2) / C(n, k) <= (k/n)^(k/2), compared by cross-multiplying."""
    _require_even(n, k)
    h = k // 2
    return binomial(n // 2, h) * n**h <= binomial(n, k) * k**h


def vanishing_fraction(n: int, k: int) -> Fraction:
    _require_even(n, k)
    return Fraction(n * k * k * binomial(n // 2, k // 2), binomial(n, k))


def vanishing_expr(n: int, k: int) -> float:
    """n * k^2 * C(n/2, k/2) / C(n, k), rounded once from the exact rational."""
    return float(vanishing_fraction(n, k))


def l_value(n: float, k: float) -> float:
    """L_n(k) = ln n + 2 ln k + (k/2)(ln k - ln n)."""
    if n <= 0 or k <= 0:
        raise ValueError(f"L_n(k) needs positive n and k, got n={n}, k={k}")
    ln_n, ln_k = math.log(n), math.log(k)
    return math.fsum((ln_n, 2 * ln_k, 0.5 * k * ln_k, -0.5 * k * ln_n))


def l_second_derivative(k: float) -> float:
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    return 1 / (2 * k) - 2 / (k * k)


def endpoint_max_check(n: int) -> Check:
    """Scan integer k in [4, n//2 + 1]; the maximum of L_n must sit at an end.

    Passes when every interior value is strictly below the larger endpoint
    value.  The witness is the (first) argmax.
    """
    if n < 8:
        raise ValueError(f"endpoint check needs n >= 8, got {n}")
    lo, hi = 4, n // 2 + 1
    values = {k: l_value(n, k) for k in range(lo, hi + 1)}
    argmax = max(values, key=values.__getitem__)
    edge = max(values[lo], values[hi])
    ok = all(v < edge for k, v in values.items() if k not in (lo, hi))
    return Check(ok, argmax)


@dataclass(frozen=True)
class BoundReport:
    n: int
    k: int
    main_term: Fraction
    deviation_bound: int | None
    vanishing_expr: float | None
    l_value: float | None
    binomial_ratio_holds: bool | None

    @property
    def main_term_num(self) -> int:
        return self.main_term.numerator

    @property
    def main_term_den(self) -> int:
        return self.main_term.denominator


def bound_report(n: int, k: int) -> BoundReport:
    """All proof quantities for (n, k); parity-undefined fields are None."""
    mt = main_term(n, k)
    even = n % 2 == 0 and k % 2 == 0 and k >= 2
    return BoundReport(
        n=n,
        k=k,
        main_term=mt,
        deviation_bound=deviation_bound(n, k) if even else None,
        vanishing_expr=vanishing_expr(n, k) if even else None,
        l_value=l_value(n, k) if k >= 1 else None,
        binomial_ratio_holds=binomial_ratio_check(n, k) if even else None,
    )


# -- sweeps -----------------------------------------------------------------

FAMILIES = ("cyclic", "elementary-2", "two-factor")


def family_spec(family: str, n: int) -> GroupSpec:
    """Group of order ``n`` in the named family."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if family == "cyclic":
        return GroupSpec((n,))
    if family == "elementary-2":
        if n < 2 or n & (n - 1):
            raise ValueError(f"elementary-2 needs a power of two >= 2, got {n}")
        return GroupSpec((2,) * (n.bit_length() - 1))
    if family == "two-factor":
        if n % 2:
            raise ValueError(f"two-factor Z_2 x Z_(n/2) needs even n, got {n}")
        return GroupSpec((2, n // 2))
    raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def k_from_rule(rule: str, n: int) -> int:
    """``fixed:K`` or ``half-plus-one`` (k = n//2 + 1)."""
    if rule == "half-plus-one":
        return n // 2 + 1
    name, _, value = rule.partition(":")
    if name == "fixed" and value:
        try:
            return int(value)
        except ValueError:
            pass
    raise ValueError(f"bad k rule {rule!r}; use 'fixed:K' or 'half-plus-one'")


@dataclass(frozen=True)
class SweepRow:
    family: str
    n: int
    k: int | None
    min_count: int | None = None
    max_count: int | None = None
    ratio: Fraction | None = None
    ratio_decimal: str = ""
    vanishing_expr: float | None = None
    l_value: float | None = None
    error: str | None = None

    def as_csv(self) -> list[str]:
        def cell(v):
            if v is None:
                return ""
            return repr(v) if isinstance(v, float) else str(v)

        return [
            self.family,
            str(self.n),
            cell(self.k),
            cell(self.min_count),
            cell(self.max_count),
            self.ratio_decimal,
            cell(self.vanishing_expr),
            cell(self.l_value),
        ]


def sweep_row(family: str, n: int, k_rule: str, precision: int = DEFAULT_PRECISION) -> SweepRow:
    k = k_from_rule(k_rule, n)
    try:
        spec = family_spec(family, n)
        rep = uniformity_ratio(spec, k, precision)
    except ValueError as exc:
        return SweepRow(family, n, k, error=str(exc))
    even = n % 2 == 0 and k % 2 == 0
    return SweepRow(
        family=family,
        n=n,
        k=k,
        min_count=rep.min_count,
        max_count=rep.max_count,
        ratio=rep.ratio,
        ratio_decimal=rep.ratio_decimal,
        vanishing_expr=vanishing_expr(n, k) if even else None,
        l_value=l_value(n, k),
    )


def convergence_sweep(
    family: str,
    orders: Iterable[int],
    k_rule: str,
    precision: int = DEFAULT_PRECISION,
) -> list[SweepRow]:
    """One row per order, ascending in n.

    Infeasible (family, n, k) combinations come back as rows with ``error``
    set instead of raising.  An unknown family or malformed rule still raises.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    k_from_rule(k_rule, 2)
    return [sweep_row(family, n, k_rule, precision) for n in sorted(orders)]


def write_sweep_csv(rows: Sequence[SweepRow], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv())
