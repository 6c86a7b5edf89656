"""Truth-table ground truth.

Enumerates all 2**n assignments in lexicographic order (variable 1 is the
most significant bit) and evaluates every clause on all of them at once with
numpy. Deliberately naive; refuses n above ``OracleLimit.max_n``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import Formula

HARD_MAX_N = 30


class OracleRefusal(ValueError):
    pass


@dataclass(frozen=True)
class OracleLimit:
    max_n: int = 24

    def __post_init__(self):
        if self.max_n > HARD_MAX_N:
            raise OracleRefusal(f"max_n={self.max_n} above the hard guard {HARD_MAX_N}")


def satisfied_mask(formula: Formula, limit: OracleLimit = OracleLimit()) -> np.ndarray:
    n = formula.n
    if n > limit.max_n:
        raise OracleRefusal(f"n={n} exceeds oracle limit {limit.max_n}")
    rows = np.arange(1 << n, dtype=np.int64)
    ok = np.ones(1 << n, dtype=bool)
    for clause in formula.clauses:
        sat = np.zeros(1 << n, dtype=bool)
        for lit in clause:
            bit = ((rows >> (n - abs(lit))) & 1).astype(bool)
            sat |= bit if lit > 0 else ~bit
        ok &= sat
    return ok


def brute_force_count(formula: Formula, limit: OracleLimit = OracleLimit()) -> int:
    return int(np.count_nonzero(satisfied_mask(formula, limit)))


def brute_force_models(formula: Formula, limit: OracleLimit = OracleLimit()) -> list[tuple[int, ...]]:
    n = formula.n
    rows = np.flatnonzero(satisfied_mask(formula, limit))
    return [tuple((int(r) >> (n - v)) & 1 for v in range(1, n + 1)) for r in rows]
