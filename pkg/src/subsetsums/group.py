"""Finite abelian groups presented as products of cyclic factors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import product
from math import prod
from typing import Iterator, Sequence


@dataclass(frozen=True)
class GroupSpec:
    """``Z_{n_1} x ... x Z_{n_s}``; any list of positive moduli is accepted."""

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        moduli = tuple(int(m) for m in self.moduli)
        if not moduli:
            raise ValueError("a group spec needs at least one modulus")
        if any(m < 1 for m in moduli):
            raise ValueError(f"moduli must be positive, got {moduli}")
        object.__setattr__(self, "moduli", moduli)

    @property
    def order(self) -> int:
        return prod(self.moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    def __str__(self) -> str:
        return ",".join(map(str, self.moduli))

    def zero(self) -> GroupElement:
        return GroupElement((0,) * self.rank)

    def index(self, x: GroupElement) -> int:
        """Lexicographic rank of ``x`` (mixed-radix value of its residues)."""
        validate(self, x)
        idx = 0
        for m, r in zip(self.moduli, x.residues):
            idx = idx * m + r
        return idx

    def element_at(self, idx: int) -> GroupElement:
        if not 0 <= idx < self.order:
            raise ValueError(f"index {idx} out of range for group of order {self.order}")
        res = []
        for m in reversed(self.moduli):
            idx, r = divmod(idx, m)
            res.append(r)
        return GroupElement(tuple(reversed(res)))


@dataclass(frozen=True, order=True)
class GroupElement:
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "residues", tuple(int(r) for r in self.residues))

    def __str__(self) -> str:
        return ",".join(map(str, self.residues))


def validate(spec: GroupSpec, x: GroupElement) -> None:
    if len(x.residues) != spec.rank:
        raise ValueError(
            f"element {x} has {len(x.residues)} coordinates, group {spec} has {spec.rank}"
        )
    for r, m in zip(x.residues, spec.moduli):
        if not 0 <= r < m:
            raise ValueError(f"element {x} is not reduced for group {spec}")


def canonicalize(spec: GroupSpec, raw: Sequence[int]) -> GroupElement:
    """Reduce each coordinate into ``[0, n_i)``; negatives wrap around."""
    if len(raw) != spec.rank:
        raise ValueError(
            f"expected {spec.rank} coordinates for group {spec}, got {len(raw)}"
        )
    return GroupElement(tuple(int(r) % m for r, m in zip(raw, spec.moduli)))


def add(spec: GroupSpec, a: GroupElement, b: GroupElement) -> GroupElement:
    validate(spec, a)
    validate(spec, b)
    return GroupElement(
        tuple((x + y) % m for x, y, m in zip(a.residues, b.residues, spec.moduli))
    )


def elements(spec: GroupSpec) -> Iterator[GroupElement]:
    """All group elements in lexicographic order of their residue vectors."""
    for res in product(*(range(m) for m in spec.moduli)):
        yield GroupElement(res)


def total_sum(spec: GroupSpec) -> GroupElement:
    # Each residue of Z_m appears order/m times in its coordinate.
    n = spec.order
    return GroupElement(
        tuple((n // m) * (m * (m - 1) // 2) % m for m in spec.moduli)
    )


def fold_sum(spec: GroupSpec, xs) -> GroupElement:
    return reduce(lambda a, b: add(spec, a, b), xs, spec.zero())


def parse_moduli(text: str) -> GroupSpec:
    """Parse ``"2,2,3"`` into a :class:`GroupSpec`."""
    parts = [p.strip() for p in text.split(",")]
    try:
        moduli = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"could not parse moduli {text!r}") from None
    return GroupSpec(moduli)


def parse_element(spec: GroupSpec, text: str) -> GroupElement:
    parts = [p.strip() for p in text.split(",")]
    try:
        raw = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"could not parse element {text!r}") from None
    return canonicalize(spec, raw)
