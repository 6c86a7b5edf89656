"""Satisfying assignments and per-literal model counts built on the counter."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .engine import EngineConfig, count_models
from .model import Formula, InputError, evaluate
from .rng import SplitMix64

CONFLICT = None


class UnsatisfiableError(ValueError):
    """A solution was requested for a formula without models."""


def filter_clauses(formula: Formula, lit: int) -> Optional[Formula]:
    """Residual formula after asserting ``lit``, or ``CONFLICT`` (None) if a
    clause loses its last literal. The variable count is left unchanged."""
    if lit == 0 or abs(lit) > formula.n:
        raise InputError(f"literal {lit} out of range for n={formula.n}")
    residual = []
    for clause in formula.clauses:
        if lit in clause:
            continue
        if -lit in clause:
            clause = tuple(x for x in clause if x != -lit)
            if not clause:
                return CONFLICT
        residual.append(clause)
    return Formula(formula.n, tuple(residual))


def random_priority(n: int, seed: int) -> list[int]:
    """One literal per variable in index order, polarity from a seeded coin."""
    rng = SplitMix64(seed)
    return [v if rng.coin() else -v for v in range(1, n + 1)]


def _check_priority(priority: Sequence[int], n: int) -> list[int]:
    priority = [int(x) for x in priority]
    if sorted(abs(x) for x in priority) != list(range(1, n + 1)):
        raise InputError(f"priority must name each of the {n} variables exactly once")
    return priority


def find_solution(
    formula: Formula,
    priority: Optional[Sequence[int]] = None,
    config: Optional[EngineConfig] = None,
    *,
    seed: Optional[int] = None,
) -> tuple[int, ...]:
    """Return one model as a tuple of 0/1 values, variable 1 first.

    Literals are tried in ``priority`` order; a literal is kept when its
    residual formula still has models, otherwise its complement is taken.
    Variables left once the residual has no clauses take their priority
    polarity. Without a priority a seeded random one is used, so ``seed`` is
    then required.

    Raises UnsatisfiableError when the formula has no model.
    """
    n = formula.n
    if priority is None:
        if seed is None:
            raise InputError("a seed is required when no priority is given")
        priority = random_priority(n, seed)
    priority = _check_priority(priority, n)

    values = [None] * n
    remaining = list(priority)
    current = formula
    while remaining and current.clauses:
        lit = remaining.pop(0)
        residual = filter_clauses(current, lit)
        if residual is not CONFLICT and count_models(residual, config, num_vars=len(remaining)).solutions > 0:
            chosen = lit
        else:
            chosen = -lit
            residual = filter_clauses(current, chosen)
            if residual is CONFLICT:
                raise UnsatisfiableError("formula has no models")
        values[abs(chosen) - 1] = 1 if chosen > 0 else 0
        current = residual
    for lit in remaining:
        values[abs(lit) - 1] = 1 if lit > 0 else 0

    assignment = tuple(values)
    # Only an unsatisfiable input can get here without a model.
    if not evaluate(formula, assignment):
        raise UnsatisfiableError("formula has no models")
    return assignment


@dataclass(frozen=True)
class LiteralCountReport:
    n: int
    total: int
    counts: dict

    def __getitem__(self, lit: int) -> int:
        return self.counts[lit]

    def lines(self) -> list[str]:
        return [f"{lit} has {count} solutions" for lit, count in self.counts.items()]


def per_literal_counts(formula: Formula, config: Optional[EngineConfig] = None) -> LiteralCountReport:
    """Models of ``formula`` in which each literal is true, ordered -1, 1, -2, 2, ..."""
    n = formula.n
    counts = {}
    for v in range(1, n + 1):
        for lit in (-v, v):
            residual = filter_clauses(formula, lit)
            if residual is CONFLICT:
                counts[lit] = 0
            else:
                counts[lit] = count_models(residual, config, num_vars=n - 1).solutions
    total = count_models(formula, config).solutions
    return LiteralCountReport(n=n, total=total, counts=counts)
