"""Exact SAT / #SAT / Unique-SAT by inclusion-exclusion over clause patterns."""

from .engine import EMPTY, EngineConfig, PatternStoreLimitError, cardinality, count_models, intersect
from .model import (
    Clause,
    Formula,
    InputError,
    ModelCount,
    RunStats,
    Verdict,
    evaluate,
    make_clause,
)
from .solutions import CONFLICT, LiteralCountReport, filter_clauses, find_solution, per_literal_counts

__all__ = [
    "CONFLICT",
    "Clause",
    "EMPTY",
    "EngineConfig",
    "Formula",
    "InputError",
    "LiteralCountReport",
    "ModelCount",
    "PatternStoreLimitError",
    "RunStats",
    "Verdict",
    "cardinality",
    "count_models",
    "evaluate",
    "filter_clauses",
    "find_solution",
    "intersect",
    "make_clause",
    "per_literal_counts",
]
