"""Core domain types: literals, clauses, formulas and counting results.

Literals use the DIMACS convention: a nonzero signed integer whose absolute
value is the variable index and whose sign is the polarity. A clause is a
tuple of literals strictly increasing by variable index. The same tuple also
serves as the clause's unsatisfiability pattern (the set of assignments that
falsify it), since intersection and cardinality work the same on both.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

Literal = int
Clause = tuple[int, ...]
Pattern = Clause


class InputError(ValueError):
    """Raised for malformed literals, clauses, formulas or assignments."""


def make_clause(literals: Iterable[int], n: Optional[int] = None) -> Clause:
    """Normalise an arbitrary literal collection into a sorted clause.

    Duplicate literals are dropped; a complementary pair is rejected.
    """
    lits = set()
    for lit in literals:
        lit = int(lit)
        if lit == 0:
            raise InputError("literal 0 is not allowed")
        if n is not None and abs(lit) > n:
            raise InputError(f"literal {lit} out of range for n={n}")
        if -lit in lits:
            raise InputError(f"complementary literals {abs(lit)} and {-abs(lit)} in clause")
        lits.add(lit)
    return tuple(sorted(lits, key=abs))


def is_valid_clause(clause: Sequence[int], n: int) -> bool:
    prev = 0
    for lit in clause:
        v = abs(lit)
        if lit == 0 or v <= prev or v > n:
            return False
        prev = v
    return True


@dataclass(frozen=True)
class Formula:
    """A CNF formula over variables 1..n. Immutable once built."""

    n: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InputError("variable count must be non-negative")
        clauses = tuple(tuple(c) for c in self.clauses)
        for i, c in enumerate(clauses):
            if not is_valid_clause(c, self.n):
                raise InputError(
                    f"clause {i + 1} {list(c)} is not a sorted clause over {self.n} variables"
                )
        object.__setattr__(self, "clauses", clauses)

    @classmethod
    def from_lists(cls, n: int, clauses: Iterable[Iterable[int]]) -> "Formula":
        """Build a formula from unsorted literal lists (dedup + sort per clause)."""
        return cls(n, tuple(make_clause(c, n) for c in clauses))

    @property
    def m(self) -> int:
        return len(self.clauses)

    def with_clause(self, clause: Iterable[int]) -> "Formula":
        return Formula(self.n, self.clauses + (make_clause(clause, self.n),))

    def __len__(self):
        return len(self.clauses)


class Verdict(str, Enum):
    UNSAT = "UNSAT"
    SAT = "SAT"
    UNIQUE = "UNIQUE"

    @classmethod
    def from_count(cls, solutions: int) -> "Verdict":
        if solutions == 0:
            return cls.UNSAT
        if solutions == 1:
            return cls.UNIQUE
        return cls.SAT

    def __str__(self):
        return self.value


@dataclass
class RunStats:
    """Instrumentation collected by one engine run.

    ``merge_literal_scans`` counts merge steps, i.e. literal positions of the
    merged order that were examined before the merge finished or hit a
    complementary pair. ``empty_*`` restricts the same figures to merges that
    ended with an empty intersection. ``early_terminated`` is set when the
    falsified-assignment total reached ``2**n`` and the run stopped there
    (``terminated_at`` is that 1-based clause index, possibly the last one).
    """

    clauses_processed: int = 0
    pattern_store_size: int = 0
    merges_attempted: int = 0
    merge_literal_scans: int = 0
    empty_merges: int = 0
    empty_merge_scans: int = 0
    early_terminated: bool = False
    terminated_at: Optional[int] = None

    @property
    def overlap_count(self) -> int:
        return self.pattern_store_size - self.clauses_processed

    @property
    def mean_merge_scan(self) -> float:
        if not self.merges_attempted:
            return 0.0
        return self.merge_literal_scans / self.merges_attempted

    @property
    def mean_empty_merge_scan(self) -> float:
        if not self.empty_merges:
            return 0.0
        return self.empty_merge_scans / self.empty_merges


@dataclass(frozen=True)
class ModelCount:
    """Exact model count of a formula.

    ``unsat_variations`` is the engine's final inclusion-exclusion total of
    falsified assignments; it equals ``2**n - solutions``.
    """

    solutions: int
    n: int
    unsat_variations: int
    stats: Optional[RunStats] = field(default=None, compare=False)

    def __post_init__(self):
        if not 0 <= self.solutions <= 1 << self.n:
            raise InputError(f"model count {self.solutions} outside [0, 2^{self.n}]")

    @property
    def verdict(self) -> Verdict:
        return Verdict.from_count(self.solutions)

    @property
    def satisfiable(self) -> bool:
        return self.solutions > 0


def evaluate(formula: Formula, assignment: Sequence) -> bool:
    """True iff ``assignment`` (n truth values, variable 1 first) satisfies every clause."""
    if len(assignment) != formula.n:
        raise InputError(f"assignment has {len(assignment)} values, formula has {formula.n} variables")
    values = [bool(a) for a in assignment]
    for clause in formula.clauses:
        for lit in clause:
            if values[abs(lit) - 1] == (lit > 0):
                break
        else:
            return False
    return True


def to_literals(assignment: Sequence) -> list[int]:
    """(0, 1, 1) -> [-1, 2, 3]"""
    return [i if a else -i for i, a in enumerate(assignment, start=1)]


def from_literals(literals: Iterable[int], n: int) -> tuple[int, ...]:
    values = [None] * n
    for lit in literals:
        v = abs(lit)
        if lit == 0 or v > n:
            raise InputError(f"literal {lit} out of range for n={n}")
        if values[v - 1] is not None:
            raise InputError(f"variable {v} assigned twice")
        values[v - 1] = 1 if lit > 0 else 0
    if None in values:
        raise InputError("assignment is not total")
    return tuple(values)
