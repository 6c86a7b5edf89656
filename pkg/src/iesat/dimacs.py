"""DIMACS CNF reading and writing.

The parser never raises on bad input: every problem becomes a diagnostic with
a line number, and a formula is returned only when there are no errors.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

from .model import Formula

_INT = re.compile(r"-?[0-9]+")


class DimacsError(ValueError):
    def __init__(self, diagnostics: "ParseDiagnostics"):
        self.diagnostics = diagnostics
        super().__init__("; ".join(str(e) for e in diagnostics.errors))


@dataclass(frozen=True)
class Diagnostic:
    line: int
    message: str

    def __str__(self):
        return f"line {self.line}: {self.message}"


@dataclass
class ParseDiagnostics:
    warnings: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    def warn(self, line, message):
        self.warnings.append(Diagnostic(line, message))

    def error(self, line, message):
        self.errors.append(Diagnostic(line, message))

    @property
    def ok(self) -> bool:
        return not self.errors


def parse_dimacs(data: Union[bytes, str]) -> tuple[Optional[Formula], ParseDiagnostics]:
    diag = ParseDiagnostics()
    if isinstance(data, (bytes, bytearray)):
        try:
            text = bytes(data).decode("ascii")
        except UnicodeDecodeError as exc:
            diag.error(bytes(data)[: exc.start].count(b"\n") + 1, "non-ASCII byte in input")
            return None, diag
    else:
        text = data

    n = declared_m = None
    clauses = []
    current = []
    current_line = None

    def close_clause(lineno):
        lits = set()
        bad = False
        for lit in current:
            if -lit in lits:
                diag.error(lineno, f"tautological clause (contains {abs(lit)} and {-abs(lit)})")
                bad = True
                break
            if lit in lits:
                diag.warn(lineno, f"duplicate literal {lit} removed")
            lits.add(lit)
        if not bad:
            clauses.append(tuple(sorted(lits, key=abs)))

    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            diag.warn(lineno, "'%' end marker; remaining input ignored")
            break
        if line.startswith("p"):
            parts = line.split()
            if n is not None:
                diag.error(lineno, "duplicate problem line")
                continue
            if len(parts) != 4 or parts[1] != "cnf":
                diag.error(lineno, "malformed problem line (expected 'p cnf <n> <m>')")
                continue
            if not all(_INT.fullmatch(p) for p in parts[2:]):
                diag.error(lineno, "non-integer value in problem line")
                continue
            n, declared_m = int(parts[2]), int(parts[3])
            if n < 0 or declared_m < 0:
                diag.error(lineno, "negative value in problem line")
                n = declared_m = None
            continue
        if n is None:
            diag.error(lineno, "clause data before problem line")
            return None, diag
        for token in line.split():
            if not _INT.fullmatch(token):
                diag.error(lineno, f"malformed token {token!r}")
                continue
            lit = int(token)
            if lit == 0:
                close_clause(current_line or lineno)
                current = []
                current_line = None
                continue
            if abs(lit) > n:
                diag.error(lineno, f"literal {lit} out of range for n={n}")
                continue
            if current_line is None:
                current_line = lineno
            current.append(lit)

    if n is None:
        diag.error(max(lineno, 1), "missing problem line")
        return None, diag
    if current:
        diag.warn(lineno, "last clause not terminated by 0; accepted")
        close_clause(current_line)
    if declared_m != len(clauses) and not diag.errors:
        diag.warn(lineno, f"header declares {declared_m} clauses, found {len(clauses)}")
    if diag.errors:
        return None, diag
    return Formula(n, tuple(clauses)), diag


def write_dimacs(formula: Formula) -> bytes:
    lines = [f"p cnf {formula.n} {formula.m}"]
    lines.extend(" ".join(map(str, clause + (0,))) for clause in formula.clauses)
    return ("\n".join(lines) + "\n").encode("ascii")


def read_dimacs(path) -> Formula:
    """Parse a file, raising DimacsError on any error diagnostic."""
    with open(path, "rb") as fh:
        formula, diag = parse_dimacs(fh.read())
    if formula is None:
        raise DimacsError(diag)
    return formula


def save_dimacs(formula: Formula, path) -> None:
    with open(path, "wb") as fh:
        fh.write(write_dimacs(formula))
