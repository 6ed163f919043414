"""Exact subset-sum counts N(k, b) from the Li-Wan divisor-sum formula.

For ``G = Z_{n_1} x ... x Z_{n_s}`` of order ``n``::

    N(k, b) = 1/n * sum_{r | gcd(n, k)} (-1)^(k + k/r) * C(n/r, k/r) * Phi(r, b)
    Phi(r, b) = sum_{d | r, gcd(n_i, d) | b_i for all i} mu(r/d) * prod_i gcd(n_i, d)

All arithmetic is on Python ints; the division by ``n`` happens once, on the
full accumulator, and must be exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterator, Mapping

from subsetsums.group import GroupElement, GroupSpec, elements, validate
from subsetsums.numtheory import binomial, divisors, gcd, moebius


class FormulaError(AssertionError):
    """The signed divisor sum was not divisible by the group order.

    Never a user error: it means the implementation is wrong.
    """


@dataclass(frozen=True)
class CountTable:
    spec: GroupSpec
    k: int
    entries: Mapping[GroupElement, int]

    def __post_init__(self) -> None:
        if len(self.entries) != self.spec.order:
            raise ValueError(
                f"table has {len(self.entries)} entries, group order is {self.spec.order}"
            )

    def __getitem__(self, b: GroupElement) -> int:
        return self.entries[b]

    def items(self) -> Iterator[tuple[GroupElement, int]]:
        """Entries in lexicographic element order."""
        for b in elements(self.spec):
            yield b, self.entries[b]

    def counts(self) -> list[int]:
        return [c for _, c in self.items()]

    def total(self) -> int:
        return sum(self.entries.values())


def _torsion_gcds(spec: GroupSpec, d: int) -> tuple[int, ...]:
    return tuple(gcd(m, d) for m in spec.moduli)


def _admits(gcds: tuple[int, ...], b: GroupElement) -> bool:
    # b_i = 0 is divisible by everything.
    return all(bi % g == 0 for g, bi in zip(gcds, b.residues))


def _sign(k: int, r: int) -> int:
    return -1 if (k + k // r) % 2 else 1


def phi_lw(spec: GroupSpec, r: int, b: GroupElement) -> int:
    """Signed divisor-sum weight Phi(r, b); total on every ``r >= 1``."""
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    validate(spec, b)
    total = 0
    for d in divisors(r):
        gcds = _torsion_gcds(spec, d)
        if _admits(gcds, b):
            total += moebius(r // d) * prod(gcds)
    return total


def _exact_divide(acc: int, n: int) -> int:
    q, rem = divmod(acc, n)
    if rem:
        raise FormulaError(f"divisor sum {acc} not divisible by group order {n}")
    return q


def count_subset_sums(spec: GroupSpec, k: int, b: GroupElement) -> int:
    """Number of k-element subsets of the group whose sum is ``b``.

    Returns 0 for ``k > n``.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    validate(spec, b)
    n = spec.order
    if k > n:
        return 0
    acc = 0
    for r in divisors(gcd(n, k)):
        acc += _sign(k, r) * binomial(n // r, k // r) * phi_lw(spec, r, b)
    return _exact_divide(acc, n)


def _d_weights(spec: GroupSpec, k: int) -> list[tuple[tuple[int, ...], int]]:
    """Collapse the double sum over (r, d) into one weight per divisor d.

    weight(d) = prod_i gcd(n_i, d) * sum_{d | r | gcd(n, k)} sign * C(n/r, k/r) * mu(r/d)
    so that n * N(k, b) = sum over admissible d of weight(d).
    """
    n = spec.order
    g = gcd(n, k)
    coeff = {r: _sign(k, r) * binomial(n // r, k // r) for r in divisors(g)}
    out = []
    for d in divisors(g):
        w = sum(c * moebius(r // d) for r, c in coeff.items() if r % d == 0)
        if w:
            gcds = _torsion_gcds(spec, d)
            out.append((gcds, w * prod(gcds)))
    return out


def count_table(spec: GroupSpec, k: int) -> CountTable:
    """N(k, b) for every b, sharing divisor and binomial work across b."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    n = spec.order
    if k > n:
        return CountTable(spec, k, {b: 0 for b in elements(spec)})
    weights = _d_weights(spec, k)
    entries = {}
    for b in elements(spec):
        acc = sum(w for gcds, w in weights if _admits(gcds, b))
        entries[b] = _exact_divide(acc, n)
    return CountTable(spec, k, entries)
