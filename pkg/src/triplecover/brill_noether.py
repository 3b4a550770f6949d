"""Brill-Noether numerology for pencils.

Covers the Brill-Noether number rho, Castelnuovo's count of linear series
when rho vanishes, the fundamental class of the rank-1 special-divisor locus
inside a symmetric product, the Castelnuovo-Severi degree bound for triple
covers, and the genus hypothesis under which the pencil loci are
equi-dimensional of minimal dimension.

The loci themselves (line bundles or divisors with at least two sections)
carry no computational representation here; ``BNQuery`` records only their
expected dimension and, when that dimension is zero, their count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import factorial, recip_factorial
from .cohomology import CohomClass

__all__ = [
    "BNQuery",
    "bn_query",
    "rho",
    "castelnuovo_count",
    "bn1_class",
    "cs_max_degree",
    "pencil_dimension_hypothesis",
]


@dataclass(frozen=True)
class BNQuery:
    """A (genus, rank, degree) query with its derived invariants.

    ``rho`` is g - (r+1)(g-d+r); ``count`` is Castelnuovo's number of
    linear series on a general curve, present exactly when rho == 0.
    """

    genus: int
    rank: int
    degree: int
    rho: int
    count: int | None


def _validate_query(g: int, r: int, d: int) -> None:
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    if r < 1:
        raise ValueError(f"rank must be at least 1, got {r}")
    if d < 0:
        raise ValueError(f"degree must be nonnegative, got {d}")


def rho(g: int, r: int, d: int) -> int:
    """The Brill-Noether number g - (r+1)(g - d + r); for pencils, 2d - 2 - g."""
    _validate_query(g, r, d)
    return g - (r + 1) * (g - d + r)


def castelnuovo_count(g: int, r: int, d: int) -> int:
    """Castelnuovo's count of g^r_d's on a general curve when rho == 0:

        g! * prod_{i=0..r} i! / (g - d + r + i)!

    For pencils this is g! / ((g-d+1)! (g-d+2)!).
    """
    _validate_query(g, r, d)
    rho_value = rho(g, r, d)
    if rho_value != 0:
        raise ValueError(f"Castelnuovo count requires rho == 0, got rho = {rho_value}")
    value = Fraction(factorial(g))
    for i in range(r + 1):
        value *= Fraction(factorial(i), factorial(g - d + r + i))
    if value.denominator != 1:
        raise ArithmeticError(f"Castelnuovo count came out non-integral: {value}")
    return value.numerator


def bn1_class(g: int, d: int) -> CohomClass:
    """Fundamental class of the rank-1 special-divisor locus in the d-th
    symmetric product of a genus-g curve:

        theta^(g-d+1)/(g-d+1)! - x*theta^(g-d)/(g-d)!

    Meaningful for 1 <= d <= g; for d > g the reciprocal-factorial
    convention kills the out-of-range terms, so e.g. d == g + 1 yields the
    unit class (every divisor moves) and larger d yields zero.
    """
    if d < 1:
        raise ValueError(f"symmetric-product index must be at least 1, got {d}")
    if g < 0:
        raise ValueError(f"genus must be nonnegative, got {g}")
    terms: dict[tuple[int, int], Fraction] = {}
    lead = recip_factorial(g - d + 1)
    if lead != 0:
        terms[(0, g - d + 1)] = lead
    corr = recip_factorial(g - d)
    if corr != 0:
        terms[(1, g - d)] = -corr
    return CohomClass(g, d, terms)


def cs_max_degree(g: int, h: int) -> int:
    """Largest pencil degree forced to factor through a triple cover of a
    genus-h curve by the Castelnuovo-Severi inequality: floor((g - 3h)/2).
    """
    if h < 0:
        raise ValueError(f"base genus must be nonnegative, got {h}")
    if g < 3 * h:
        raise ValueError(
            f"Castelnuovo-Severi window needs g >= 3h, got g = {g}, h = {h}"
        )
    return (g - 3 * h) // 2


def pencil_dimension_hypothesis(g: int, n: int) -> bool:
    """Whether genus g satisfies the bound making the pencil loci W^1_d
    equi-dimensional of the minimal dimension 2d - 2 - g in the top degree
    window: g >= (2n-3)(n-1), with the small-n branch g >= 2n-1 for n <= 2.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if n <= 2:
        return g >= 2 * n - 1
    return g >= (2 * n - 3) * (n - 1)


def bn_query(g: int, r: int, d: int) -> BNQuery:
    """Bundle rho and (when rho == 0) the Castelnuovo count for (g, r, d)."""
    rho_value = rho(g, r, d)
    count = castelnuovo_count(g, r, d) if rho_value == 0 else None
    return BNQuery(genus=g, rank=r, degree=d, rho=rho_value, count=count)
