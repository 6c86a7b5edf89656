"""Exact overlap probabilities for random clauses and density classification.

All quantities are exact ``Fraction`` values; floats appear only when a value
is rendered for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional

from .model import InputError

DENSE_RATIO = 25


def binomial(a: int, b: int) -> int:
    """C(a, b), taken as 0 outside 0 <= b <= a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def p_overlap(n: int, k_c: int, k_d: int) -> Fraction:
    """Probability that a random k_d-clause shares no complementary literal
    with a fixed k_c-clause over n variables.

    Sums, over the number i of d's variables that also occur in c (each with
    c's polarity), the ways to place the remaining k_d - i literals freely on
    the n - k_c variables outside c.
    """
    _check_sizes(n, k_c, k_d)
    free = n - k_c
    # walk i upwards, updating both binomials by exact integer steps
    outside = binomial(free, k_d)
    inside = 1
    overlapping = 0
    for i in range(k_d + 1):
        j = k_d - i
        overlapping += (outside * inside) << j
        if i == k_c or j == 0:
            break
        inside = inside * (k_c - i) // (i + 1)
        if j > free:
            outside = binomial(free, j - 1)
        else:
            outside = outside * j // (free - j + 1)
    return Fraction(overlapping, binomial(n, k_d) << k_d)


def _check_sizes(n, k_c, k_d):
    if n < 0:
        raise InputError("n must be non-negative")
    for name, k in (("k_c", k_c), ("k_d", k_d)):
        if not 0 <= k <= n:
            raise InputError(f"{name}={k} outside [0, n={n}]")


def expected_overlaps(
    n: int, k: int, m: int, tuple_size: int = 2, model: str = "widened"
) -> Fraction:
    """Expected number of non-empty intersections among ``tuple_size`` clauses.

    tuple_size 2 is ``C(m, 2) * p_overlap(n, k, k)``. For tuple_size 3 two
    models are offered:

    ``"widened"`` (default)
        A pairwise intersection is taken to carry 50% more literals, so the
        third clause is tested against ``floor(1.5 k)`` literals (clamped to n).
    ``"squared"``
        ``C(m, 3) * p_overlap(n, k, k) ** 2``, i.e. two independent pairwise
        overlaps. This is the model that reproduces the published three-clause
        column for m = 100 n.
    """
    if tuple_size not in (2, 3):
        raise InputError("tuple_size must be 2 or 3")
    if m < tuple_size:
        raise InputError(f"m={m} is smaller than tuple_size={tuple_size}")
    p = p_overlap(n, k, k)
    if tuple_size == 2:
        return binomial(m, 2) * p
    if model == "squared":
        return binomial(m, 3) * p * p
    if model != "widened":
        raise InputError(f"unknown three-clause model {model!r}")
    wide = min(n, (3 * k) // 2)
    return binomial(m, 3) * p_overlap(n, k, wide)


@dataclass(frozen=True)
class OverlapQuery:
    n: int
    k_c: int
    k_d: int
    m: Optional[int] = None

    def __post_init__(self):
        _check_sizes(self.n, self.k_c, self.k_d)
        if self.m is not None and self.m < 2:
            raise InputError("m must be at least 2")

    def p_overlap(self) -> Fraction:
        return p_overlap(self.n, self.k_c, self.k_d)

    def expected_overlaps(self, tuple_size: int = 2, model: str = "widened") -> Fraction:
        if self.m is None:
            raise InputError("m is required for expectations")
        if self.k_c != self.k_d:
            raise InputError("expectations assume k_c == k_d")
        return expected_overlaps(self.n, self.k_c, self.m, tuple_size, model)


@dataclass(frozen=True)
class DensityReport:
    n: int
    k: int
    ratio: Fraction
    density: Fraction

    @property
    def dense(self) -> bool:
        return self.ratio >= DENSE_RATIO

    @property
    def meets_root_rule(self) -> bool:
        """k >= 7 sqrt(n); slightly looser than the ratio rule (k = 7 sqrt(n) gives 24.5)."""
        return self.k * self.k >= 49 * self.n


def classify_density(n: int, k: int) -> DensityReport:
    if not 1 <= k <= n:
        raise InputError(f"k={k} outside [1, n={n}]")
    return DensityReport(n=n, k=k, ratio=Fraction(k * k, 2 * n), density=Fraction(k, n))


def expected_merge_scan(n: int, k: int) -> Fraction:
    """Geometric-trial estimate 2n/k of merge steps before the first
    complementary pair; an upper estimate, since the per-step success
    probability grows as variables are used up."""
    if not 1 <= k <= n:
        raise InputError(f"k={k} outside [1, n={n}]")
    return Fraction(2 * n, k)


def decimal_string(x: Fraction, places: int = 10) -> str:
    """Fixed-point rendering, rounded half-even at ``places`` decimals."""
    scaled = round(Fraction(x) * 10**places)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10**places)
    if not places:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{places}d}"


def scientific_string(x: Fraction, digits: int = 3) -> str:
    if x == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return f"{d:.{digits - 1}E}"
