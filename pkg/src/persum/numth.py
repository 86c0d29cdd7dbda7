"""Exact elementary number theory used throughout the package.

Everything operates on plain Python ints (arbitrary precision), so nothing
here can overflow. Positive arguments are validated at entry points rather
than wrapped in a dedicated integer type.
"""

from __future__ import annotations

import math
from collections.abc import Sequence


def check_positive(n: int, what: str = "value") -> int:
    """Return n unchanged, raising ValueError unless it is an int >= 1."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"{what} must be a positive integer, got {n!r}")
    return n


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers; gcd(a, 0) == a."""
    return math.gcd(a, b)


def lcm_all(values: Sequence[int]) -> int:
    """Least common multiple of a nonempty list of positive integers."""
    if not values:
        raise ValueError("empty period list")
    for v in values:
        check_positive(v, "period")
    return math.lcm(*values)


def euler_phi(n: int) -> int:
    """Euler's totient: count of integers in [1, n] coprime to n; phi(1) == 1."""
    check_positive(n, "n")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            result -= result // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n in ascending order.

    Trial division up to sqrt(n); the periods this package deals with are
    desk-scale, so factorization speed is irrelevant.
    """
    check_positive(n, "n")
    small = []
    large = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large
