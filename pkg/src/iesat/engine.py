"""Exact model counting by inclusion-exclusion over unsatisfiability patterns.

Each clause falsifies ``2**(n - len(clause))`` assignments. The union of those
sets is counted with inclusion-exclusion, where the intersection of two
patterns is the sorted merge of their literals, or empty as soon as the merge
meets a complementary pair. Every non-empty intersection is kept (with the
opposite sign) and re-intersected with later clauses; empty ones are dropped
together with all their supersets. The model count is ``2**n`` minus the
union size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .model import Clause, Formula, InputError, ModelCount, Pattern, RunStats

EMPTY = None


class PatternStoreLimitError(RuntimeError):
    """The pattern store outgrew ``EngineConfig.max_pattern_store``."""

    def __init__(self, clause_index: int, store_size: int, limit: int):
        self.clause_index = clause_index
        self.store_size = store_size
        self.limit = limit
        super().__init__(
            f"pattern store reached {store_size} patterns (limit {limit}) "
            f"while processing clause {clause_index}"
        )


@dataclass(frozen=True)
class EngineConfig:
    max_pattern_store: Optional[int] = None
    collect_stats: bool = False


def intersect(c: Pattern, d: Pattern) -> Optional[Pattern]:
    """Merge two sorted patterns; ``EMPTY`` (None) on the first complementary pair."""
    return _merge(c, d)[0]


def _merge(c, d):
    # Returns (pattern or None, number of merge steps taken).
    result = []
    i = j = 0
    lc, ld = len(c), len(d)
    while i < lc and j < ld:
        a = c[i]
        b = d[j]
        if a == -b:
            return None, len(result) + 1
        if a == b:
            result.append(a)
            i += 1
            j += 1
        elif abs(a) < abs(b):
            result.append(a)
            i += 1
        else:
            result.append(b)
            j += 1
    steps = len(result)
    result.extend(c[i:])
    result.extend(d[j:])
    return tuple(result), steps


def cardinality(p: Pattern, n: int) -> int:
    """Number of assignments over n variables matched by pattern p."""
    if len(p) > n:
        raise InputError(f"pattern of length {len(p)} exceeds {n} variables")
    return 1 << (n - len(p))


def count_models(
    formula: Formula,
    config: Optional[EngineConfig] = None,
    *,
    num_vars: Optional[int] = None,
) -> ModelCount:
    """Count the models of ``formula`` exactly.

    ``num_vars`` overrides the number of free variables the count is taken
    over (used for residual formulas whose eliminated variables keep their
    original indices). It must cover every clause's length.
    """
    config = config or EngineConfig()
    n = formula.n if num_vars is None else num_vars
    return _count(formula.clauses, n, config)


def _count(clauses: tuple[Clause, ...], n: int, config: EngineConfig) -> ModelCount:
    for c in clauses:
        if len(c) > n:
            raise InputError(f"clause {list(c)} has more literals than {n} variables")
    full = 1 << n
    limit = config.max_pattern_store
    if limit is not None and limit < len(clauses):
        raise InputError(f"max_pattern_store={limit} is below the clause count {len(clauses)}")

    # P is a flat list of (sign, pattern); sign is +1 when the pattern's
    # cardinality is added to u on the next hit and -1 when subtracted.
    P = []
    u = 0
    merges = scans = empty_merges = empty_scans = 0
    terminated_at = None
    processed = 0

    for index, ap in enumerate(clauses, start=1):
        u += 1 << (n - len(ap))
        new = [(-1, ap)]
        la = len(ap)
        merges += len(P)
        for sign, p in P:
            # Inlined copy of _merge: this loop is the hot path.
            result = []
            i = j = 0
            lp = len(p)
            hit = True
            while i < la and j < lp:
                a = ap[i]
                b = p[j]
                if a == -b:
                    hit = False
                    break
                if a == b:
                    result.append(a)
                    i += 1
                    j += 1
                elif abs(a) < abs(b):
                    result.append(a)
                    i += 1
                else:
                    result.append(b)
                    j += 1
            if not hit:
                steps = len(result) + 1
                scans += steps
                empty_merges += 1
                empty_scans += steps
                continue
            scans += len(result)
            result.extend(ap[i:])
            result.extend(p[j:])
            ip = tuple(result)
            if sign > 0:
                u += 1 << (n - len(ip))
            else:
                u -= 1 << (n - len(ip))
            new.append((-sign, ip))
        P.extend(new)
        processed = index
        if limit is not None and len(P) > limit:
            raise PatternStoreLimitError(index, len(P), limit)
        if u == full:
            terminated_at = index
            break

    stats = None
    if config.collect_stats:
        stats = RunStats(
            clauses_processed=processed,
            pattern_store_size=len(P),
            merges_attempted=merges,
            merge_literal_scans=scans,
            empty_merges=empty_merges,
            empty_merge_scans=empty_scans,
            early_terminated=terminated_at is not None,
            terminated_at=terminated_at,
        )
    return ModelCount(solutions=full - u, n=n, unsat_variations=u, stats=stats)
