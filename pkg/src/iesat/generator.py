"""Seeded random k-SAT instances plus the best- and worst-case constructions.

Random clauses pick k distinct variables uniformly (Floyd's sampling with
``SplitMix64.below``) and give each an independent fair-coin polarity, drawn
in increasing variable order after sorting.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Optional

from .model import Formula, InputError
from .rng import SplitMix64

DENSITY_TYPES = ("0.9N", "7RootN", "6RootN", "5RootN", "4RootN", "3RootN")

_ROOT_RE = re.compile(r"^(\d+)RootN$")


def k_for_density(n: int, density_type: str) -> int:
    """0.9N -> floor(0.9 n); xRootN -> floor(x sqrt(n)), computed in integers."""
    if density_type == "0.9N":
        return (9 * n) // 10
    match = _ROOT_RE.match(density_type)
    if not match:
        raise InputError(f"unknown density type {density_type!r}")
    x = int(match.group(1))
    return math.isqrt(x * x * n)


@dataclass(frozen=True)
class GenSpec:
    n: int
    m: int
    seed: int
    k: Optional[int] = None
    density_type: Optional[str] = None

    def __post_init__(self):
        if (self.k is None) == (self.density_type is None):
            raise InputError("give exactly one of k or density_type")
        if self.n < 1 or self.m < 0:
            raise InputError("need n >= 1 and m >= 0")
        k = self.resolved_k
        if not 1 <= k <= self.n:
            raise InputError(f"k={k} outside [1, n={self.n}]")

    @property
    def resolved_k(self) -> int:
        if self.k is not None:
            return self.k
        return k_for_density(self.n, self.density_type)


def _sample_variables(rng: SplitMix64, n: int, k: int) -> list[int]:
    chosen = set()
    for j in range(n - k + 1, n + 1):
        t = 1 + rng.below(j)
        chosen.add(j if t in chosen else t)
    return sorted(chosen)


def random_clause(rng: SplitMix64, n: int, k: int) -> tuple[int, ...]:
    return tuple(v if rng.coin() else -v for v in _sample_variables(rng, n, k))


def random_instance(spec: GenSpec) -> Formula:
    rng = SplitMix64(spec.seed)
    k = spec.resolved_k
    return Formula(spec.n, tuple(random_clause(rng, spec.n, k) for _ in range(spec.m)))


def best_case_instance(n: int, k: int, m: int, seed: int) -> Formula:
    """Pairwise-disjoint clauses whose conflicts sit on the lowest variables.

    Clause i starts with -1, ..., -(i-1), +i and is padded with k - i random
    literals on variables above i, so clauses i < j clash at variable i.
    """
    if not 1 <= k <= n:
        raise InputError(f"k={k} outside [1, n={n}]")
    if m > k:
        raise InputError(f"best case needs m <= k (got m={m}, k={k})")
    rng = SplitMix64(seed)
    clauses = []
    for i in range(1, m + 1):
        head = [-v for v in range(1, i)] + [i]
        tail = [i + v for v in _sample_variables(rng, n - i, k - i)]
        clauses.append(tuple(head + [v if rng.coin() else -v for v in tail]))
    return Formula(n, tuple(clauses))


def worst_case_instance(n: int, k: int) -> Formula:
    """n - k + 1 positive clauses sharing variables 1..k-1, each adding one
    distinct variable; every subset of them intersects non-emptily."""
    if not 1 <= k <= n:
        raise InputError(f"k={k} outside [1, n={n}]")
    prefix = tuple(range(1, k))
    return Formula(n, tuple(prefix + (k - 1 + i,) for i in range(1, n - k + 2)))
