"""Brute-force counters used to check the closed formula.

Neither oracle touches divisors or the Moebius function; they only use the
group law.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations, product
from typing import Sequence

from subsetsums.counting import CountTable
from subsetsums.group import GroupElement, GroupSpec, elements

ENUM_MAX_ORDER = 20


class SizeLimitError(ValueError):
    pass


def oracle_enum(spec: GroupSpec, k: int) -> CountTable:
    """Count by listing every k-subset and adding its elements up."""
    n = spec.order
    if n > ENUM_MAX_ORDER:
        raise SizeLimitError(
            f"oracle_enum is limited to groups of order <= {ENUM_MAX_ORDER}, got {n}"
        )
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    elems = list(elements(spec))
    counts = dict.fromkeys(elems, 0)
    if k == 0:
        counts[spec.zero()] = 1
        return CountTable(spec, k, counts)
    # Pack residues into bit fields wide enough that k-fold sums never carry,
    # so each subset sum is one integer addition; reduce mod n_i afterwards.
    width = max(k * (m - 1) for m in spec.moduli).bit_length() + 1
    mask = (1 << width) - 1

    def pack(e: GroupElement) -> int:
        return sum(r << (width * i) for i, r in enumerate(e.residues))

    raw = Counter(map(sum, combinations(map(pack, elems), k)))
    for packed, c in raw.items():
        res = tuple(
            ((packed >> (width * i)) & mask) % m for i, m in enumerate(spec.moduli)
        )
        counts[GroupElement(res)] += c
    return CountTable(spec, k, counts)


def _shift_tables(spec: GroupSpec) -> list[list[int]]:
    """shift[x][s] = rank(element s + element x), everything by lexicographic rank."""
    n = spec.order
    elems = [spec.element_at(i).residues for i in range(n)]
    rank = {e: i for i, e in enumerate(elems)}
    return [
        [
            rank[tuple((a + b) % m for a, b, m in zip(s, x, spec.moduli))]
            for s in elems
        ]
        for x in elems
    ]


def oracle_dp(spec: GroupSpec, k: int, order: Sequence[int] | None = None) -> CountTable:
    """Count with a skip/take dynamic programme over the group elements.

    ``layers[j][s]`` holds the number of j-subsets of the elements seen so
    far whose sum has rank ``s``.  ``order`` permutes the processing order
    of element ranks (default: lexicographic); the answer must not depend on it.
    """
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    n = spec.order
    if k > n:
        return CountTable(spec, k, dict.fromkeys(elements(spec), 0))
    shift = _shift_tables(spec)
    ranks = range(n) if order is None else order
    if sorted(ranks) != list(range(n)):
        raise ValueError("order must be a permutation of the element ranks")

    layers = [[0] * n for _ in range(k + 1)]
    layers[0][0] = 1
    for seen, x in enumerate(ranks):
        sx = shift[x]
        # descending j so each element is taken at most once
        for j in range(min(seen + 1, k), 0, -1):
            prev, cur = layers[j - 1], layers[j]
            for s, c in enumerate(prev):
                if c:
                    cur[sx[s]] += c
    row = layers[k]
    return CountTable(spec, k, {spec.element_at(i): row[i] for i in range(n)})


CYCLIC_MAX = 16
FACTORS = (2, 3, 4, 5, 6, 8, 9)


def standard_family(max_order: int = CYCLIC_MAX) -> list[GroupSpec]:
    """The pinned verification family, every member of order <= ``max_order``.

    All cyclic Z_m with m <= max_order, then every ordered product of two or
    three factors from ``FACTORS`` whose order fits.  Sorted by (order, moduli).
    """
    specs = {GroupSpec((m,)) for m in range(1, max_order + 1)}
    for s in (2, 3):
        for moduli in product(FACTORS, repeat=s):
            spec = GroupSpec(moduli)
            if spec.order <= max_order:
                specs.add(spec)
    return sorted(specs, key=lambda g: (g.order, g.moduli))
