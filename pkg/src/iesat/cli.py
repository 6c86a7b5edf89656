"""Command-line front end.

``count``, ``solve`` and ``oracle`` follow the usual solver exit codes:
10 satisfiable, 20 unsatisfiable, 0 when no answer was reached (pattern
store limit). Usage and input errors exit with 1 (2 from argparse itself).
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import bench
from .combinatorics import (
    classify_density,
    decimal_string,
    expected_overlaps,
    p_overlap,
    scientific_string,
)
from .dimacs import DimacsError, read_dimacs, save_dimacs, write_dimacs
from .engine import EngineConfig, PatternStoreLimitError, count_models
from .generator import DENSITY_TYPES, GenSpec, best_case_instance, random_instance, worst_case_instance
from .model import InputError
from .oracle import OracleLimit, OracleRefusal, brute_force_count, brute_force_models
from .solutions import UnsatisfiableError, find_solution, per_literal_counts

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_UNKNOWN = 0
EXIT_ERROR = 1


def _literal_list(text):
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a literal list: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iesat", description="Inclusion-exclusion SAT / #SAT toolkit")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count models of a DIMACS CNF file")
    p.add_argument("cnf")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--max-patterns", type=int)

    p = sub.add_parser("solve", help="print one satisfying assignment")
    p.add_argument("cnf")
    p.add_argument("--priority", type=_literal_list, help="literal order, e.g. '1 -2 3'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-patterns", type=int)

    p = sub.add_parser("lits", help="models per literal")
    p.add_argument("cnf")
    p.add_argument("--max-patterns", type=int)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--k", type=int)
    group.add_argument("--density-type", choices=DENSITY_TYPES)
    p.add_argument("--seed", type=int, default=0)
    shape = p.add_mutually_exclusive_group()
    shape.add_argument("--best-case", action="store_true")
    shape.add_argument("--worst-case", action="store_true")
    p.add_argument("-o", "--output", default="-")

    p = sub.add_parser("oracle", help="truth-table count (small n only)")
    p.add_argument("cnf")
    p.add_argument("--max-n", type=int, default=24)
    p.add_argument("--models", action="store_true")

    p = sub.add_parser("poverlap", help="exact overlap probability")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kc", type=int, required=True)
    p.add_argument("--kd", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--tuple-size", type=int, choices=(2, 3), default=2)
    p.add_argument("--model", choices=("widened", "squared"), default="widened",
                   help="three-clause expectation model")

    p = sub.add_parser("bench", help="run a benchmark grid and append CSV rows")
    p.add_argument("--grid", default=bench.DESK_GRID)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-patterns", type=int)
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("report", help="scaling checks over a benchmark CSV")
    p.add_argument("csv")
    return parser


def _config(args, stats=False):
    return EngineConfig(max_pattern_store=getattr(args, "max_patterns", None), collect_stats=stats)


def cmd_count(args):
    formula = read_dimacs(args.cnf)
    try:
        result = count_models(formula, _config(args, args.stats))
    except PatternStoreLimitError as exc:
        print("s UNKNOWN")
        print(f"c {exc}")
        return EXIT_UNKNOWN
    print(f"s {result.verdict}")
    print(f"solutions {result.solutions}")
    if args.stats:
        st = result.stats
        print(f"c clauses_processed {st.clauses_processed}")
        print(f"c overlap_count {st.overlap_count}")
        print(f"c pattern_store_size {st.pattern_store_size}")
        print(f"c merges_attempted {st.merges_attempted}")
        print(f"c merge_literal_scans {st.merge_literal_scans}")
        print(f"c mean_merge_scan {st.mean_merge_scan:.4f}")
        print(f"c early_terminated {st.early_terminated}")
    return EXIT_SAT if result.satisfiable else EXIT_UNSAT


def cmd_solve(args):
    formula = read_dimacs(args.cnf)
    try:
        assignment = find_solution(formula, args.priority, _config(args), seed=args.seed)
    except UnsatisfiableError:
        print("s UNSATISFIABLE")
        return EXIT_UNSAT
    except PatternStoreLimitError as exc:
        print("s UNKNOWN")
        print(f"c {exc}")
        return EXIT_UNKNOWN
    lits = [v if a else -v for v, a in enumerate(assignment, start=1)]
    print("s SATISFIABLE")
    print("v " + " ".join(map(str, lits + [0])))
    return EXIT_SAT


def cmd_lits(args):
    formula = read_dimacs(args.cnf)
    report = per_literal_counts(formula, _config(args))
    for line in report.lines():
        print(line)
    print(f"c total {report.total}")
    return EXIT_SAT if report.total else EXIT_UNSAT


def cmd_gen(args):
    if args.worst_case:
        if args.k is None:
            raise InputError("--worst-case needs --k")
        formula = worst_case_instance(args.n, args.k)
    else:
        if args.m is None:
            raise InputError("--m is required")
        if args.best_case:
            if args.k is None:
                raise InputError("--best-case needs --k")
            formula = best_case_instance(args.n, args.k, args.m, args.seed)
        else:
            if args.k is None and args.density_type is None:
                raise InputError("give --k or --density-type")
            spec = GenSpec(n=args.n, m=args.m, seed=args.seed, k=args.k, density_type=args.density_type)
            formula = random_instance(spec)
    if args.output == "-":
        sys.stdout.write(write_dimacs(formula).decode("ascii"))
    else:
        save_dimacs(formula, args.output)
    return 0


def cmd_oracle(args):
    formula = read_dimacs(args.cnf)
    limit = OracleLimit(max_n=args.max_n)
    count = brute_force_count(formula, limit)
    print(f"solutions {count}")
    if args.models:
        for model in brute_force_models(formula, limit):
            print("".join(map(str, model)))
    return EXIT_SAT if count else EXIT_UNSAT


def cmd_poverlap(args):
    p = p_overlap(args.n, args.kc, args.kd)
    print(f"p_overlap {p.numerator}/{p.denominator}")
    print(f"decimal {decimal_string(p)}")
    print(f"scientific {scientific_string(p)}")
    if args.kc == args.kd and args.kc >= 1:
        report = classify_density(args.n, args.kc)
        print(f"k^2/2n {float(report.ratio):.1f} dense {report.dense}")
    if args.m is not None:
        if args.kc != args.kd:
            raise InputError("expected overlaps need --kc == --kd")
        e = expected_overlaps(args.n, args.kc, args.m, args.tuple_size, args.model)
        print(f"expected_overlaps {float(e):.6g}")
    return 0


def cmd_bench(args):
    cells = bench.parse_grid(args.grid)
    rows = bench.run_grid(cells, args.repeats, args.seed, EngineConfig(args.max_patterns, True))
    written = bench.append_csv(rows, args.output)
    print(f"wrote {written} rows to {args.output}")
    return 0


def cmd_report(args):
    print(bench.format_report(bench.scaling_report(bench.read_csv(args.csv))))
    return 0


COMMANDS = {
    "count": cmd_count,
    "solve": cmd_solve,
    "lits": cmd_lits,
    "gen": cmd_gen,
    "oracle": cmd_oracle,
    "poverlap": cmd_poverlap,
    "bench": cmd_bench,
    "report": cmd_report,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (OSError, DimacsError, InputError, OracleRefusal, ValueError) as exc:
        print(f"iesat: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
