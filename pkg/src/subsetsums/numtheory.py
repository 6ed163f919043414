"""Integer helpers: gcd, divisors, Moebius, totient and exact binomials.

Everything here works on Python ints, so results are exact at any size.
Factorisation is plain trial division; arguments never exceed group orders.
"""

from __future__ import annotations

from functools import lru_cache


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers.

    ``gcd(a, 0) == a`` and ``gcd(0, 0) == 0``.
    """
    if a < 0 or b < 0:
        raise ValueError(f"gcd expects nonnegative integers, got {a}, {b}")
    while b:
        a, b = b, a % b
    return a


def _check_positive(name: str, m: int) -> None:
    if m < 1:
        raise ValueError(f"{name} requires a positive integer, got {m}")


@lru_cache(maxsize=4096)
def factorize(m: int) -> tuple[tuple[int, int], ...]:
    """Prime factorisation of ``m`` as ``((p, e), ...)`` with p ascending."""
    _check_positive("factorize", m)
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


@lru_cache(maxsize=4096)
def _divisors(m: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(m):
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def divisors(m: int) -> list[int]:
    """All positive divisors of ``m`` in ascending order."""
    _check_positive("divisors", m)
    return list(_divisors(m))


def moebius(r: int) -> int:
    _check_positive("moebius", r)
    fac = factorize(r)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(r: int) -> int:
    _check_positive("euler_phi", r)
    result = r
    for p, _ in factorize(r):
        result = result // p * (p - 1)
    return result


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient, zero when ``k > n``.

    Uses the running product ``c <- c * (n - i) // (i + 1)``; every partial
    value is itself a binomial coefficient, so each division is exact.
    """
    if n < 0 or k < 0:
        raise ValueError(f"binomial expects nonnegative arguments, got {n}, {k}")
    if k > n:
        return 0
    k = min(k, n - k)
    c = 1
    for i in range(k):
        c = c * (n - i) // (i + 1)
    return c
