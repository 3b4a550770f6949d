"""Exact integer and rational arithmetic shared by every other module.

Integers are plain Python ints (arbitrary precision); rationals are
``fractions.Fraction`` values, which are always reduced, carry a positive
denominator and compare by value.  The factorial kernel keeps a shared,
monotonically growing cache so that sweeps touching factorials of several
thousand stay cheap.
"""

from __future__ import annotations

import threading
from fractions import Fraction

__all__ = [
    "Rat",
    "factorial",
    "recip_factorial",
    "binomial",
    "format_rat",
]

Rat = Fraction

# _FACT_CACHE[n] == n!.  The list only ever grows and entries are appended
# fully computed, so unlocked reads of existing entries are safe.
_FACT_CACHE: list[int] = [1]
_FACT_LOCK = threading.Lock()


def factorial(n: int) -> int:
    """Return n! for n >= 0.  Negative arguments are a contract violation."""
    if n < 0:
        raise ValueError(f"factorial requires n >= 0, got {n}")
    cache = _FACT_CACHE
    if n < len(cache):
        return cache[n]
    with _FACT_LOCK:
        value = cache[-1]
        for m in range(len(cache), n + 1):
            value *= m
            cache.append(value)
    return cache[n]


def recip_factorial(n: int) -> Fraction:
    """Return 1/n! for n >= 0 and 0 for n < 0.

    The zero value for negative arguments is the convention that makes the
    alternating factorial expressions in the pencil counts collapse cleanly
    at the edge cases (an empty family contributes nothing).
    """
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k), with value 0 whenever k < 0 or k > n."""
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(k):
        # Exact at every step: the running product of i+1 consecutive
        # integers is divisible by (i+1)!.
        result = result * (n - i) // (i + 1)
    return result


def format_rat(value: Fraction | int) -> str:
    """Render a rational as ``p`` or ``p/q`` in lowest terms, never a float."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
