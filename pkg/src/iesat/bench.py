"""Benchmark grid runner and scaling checks.

A grid is written as ``n=100,200;m=100,1000;dt=0.9N,7RootN`` (``k=...`` may
replace ``dt``). Every (n, m, dt, run) cell gets its own instance seed derived
from the base seed, so reruns reproduce counts and overlap figures exactly.

CSV columns, in order::

    n, m, k, density_type, seed, run_index, wall_time_seconds, solutions,
    verdict, overlap_count, overlap_ratio, pattern_store_size,
    mean_merge_scan, mean_empty_merge_scan, early_terminated
"""

from __future__ import annotations

import csv
import hashlib
import itertools
import logging
import os
import time
from collections import defaultdict
from dataclasses import asdict, dataclass, fields
from statistics import mean
from typing import Iterable, Optional

from .engine import EngineConfig, count_models
from .generator import GenSpec, k_for_density, random_instance

log = logging.getLogger(__name__)

DESK_GRID = "n=100,200,800;m=100,1000,2000;dt=0.9N,7RootN,6RootN,5RootN"
FULL_GRID = "n=100,200,800,5000,20000;m=100,1000,10000,100000;dt=0.9N,7RootN,6RootN,5RootN,4RootN,3RootN"

# Observed/expected ratios inside [LOW, HIGH] count as compatible.
BAND_LOW, BAND_HIGH = 0.5, 2.0


@dataclass
class BenchRow:
    n: int
    m: int
    k: int
    density_type: str
    seed: int
    run_index: int
    wall_time_seconds: float
    solutions: str
    verdict: str
    overlap_count: int
    overlap_ratio: float
    pattern_store_size: int
    mean_merge_scan: float
    mean_empty_merge_scan: float
    early_terminated: bool


CSV_FIELDS = [f.name for f in fields(BenchRow)]


@dataclass(frozen=True)
class Cell:
    n: int
    m: int
    density_type: Optional[str] = None
    k: Optional[int] = None

    @property
    def resolved_k(self) -> int:
        return self.k if self.k is not None else k_for_density(self.n, self.density_type)

    @property
    def label(self) -> str:
        return self.density_type if self.density_type is not None else f"k={self.k}"


def parse_grid(text: str) -> list[Cell]:
    parts = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, _, values = chunk.partition("=")
        key = key.strip()
        if key not in ("n", "m", "dt", "k") or not values:
            raise ValueError(f"bad grid segment {chunk!r}")
        parts[key] = [v.strip() for v in values.split(",") if v.strip()]
    if "n" not in parts or "m" not in parts or ("dt" in parts) == ("k" in parts):
        raise ValueError("grid needs n=..., m=... and exactly one of dt=... or k=...")
    ns = [int(v) for v in parts["n"]]
    ms = [int(v) for v in parts["m"]]
    if "dt" in parts:
        return [Cell(n, m, density_type=dt) for n, m, dt in itertools.product(ns, ms, parts["dt"])]
    return [Cell(n, m, k=int(k)) for n, m, k in itertools.product(ns, ms, parts["k"])]


def derive_seed(base_seed: int, cell: Cell, run_index: int) -> int:
    key = f"{base_seed}:{cell.n}:{cell.m}:{cell.label}:{run_index}".encode()
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "little")


def run_cell(cell: Cell, seed: int, run_index: int, config: Optional[EngineConfig] = None) -> BenchRow:
    config = config or EngineConfig(collect_stats=True)
    if not config.collect_stats:
        config = EngineConfig(config.max_pattern_store, collect_stats=True)
    spec = GenSpec(n=cell.n, m=cell.m, seed=seed, k=cell.k, density_type=cell.density_type)
    formula = random_instance(spec)
    start = time.perf_counter()
    result = count_models(formula, config)
    elapsed = time.perf_counter() - start
    stats = result.stats
    return BenchRow(
        n=cell.n,
        m=cell.m,
        k=spec.resolved_k,
        density_type=cell.label,
        seed=seed,
        run_index=run_index,
        wall_time_seconds=elapsed,
        solutions=str(result.solutions),
        verdict=str(result.verdict),
        overlap_count=stats.overlap_count,
        overlap_ratio=stats.overlap_count / cell.m if cell.m else 0.0,
        pattern_store_size=stats.pattern_store_size,
        mean_merge_scan=stats.mean_merge_scan,
        mean_empty_merge_scan=stats.mean_empty_merge_scan,
        early_terminated=stats.early_terminated,
    )


def run_grid(cells: Iterable[Cell], repeats: int, base_seed: int, config: Optional[EngineConfig] = None):
    """Yield one BenchRow per (cell, repeat)."""
    for cell in cells:
        for r in range(repeats):
            row = run_cell(cell, derive_seed(base_seed, cell, r), r, config)
            log.info("n=%d m=%d %s run %d: %.4fs overlaps=%d",
                     row.n, row.m, row.density_type, r, row.wall_time_seconds, row.overlap_count)
            yield row


def append_csv(rows: Iterable[BenchRow], path) -> int:
    """Append rows to ``path``, writing the header first if the file is new."""
    new_file = not os.path.exists(path) or os.path.getsize(path) == 0
    if not new_file:
        with open(path, newline="") as fh:
            header = next(csv.reader(fh), None)
        if header != CSV_FIELDS:
            raise ValueError(f"{path} has a different CSV header")
    written = 0
    with open(path, "a", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        if new_file:
            writer.writeheader()
        for row in rows:
            writer.writerow(asdict(row))
            fh.flush()
            written += 1
    return written


def read_csv(path) -> list[BenchRow]:
    rows = []
    with open(path, newline="") as fh:
        for rec in csv.DictReader(fh):
            rows.append(BenchRow(
                n=int(rec["n"]),
                m=int(rec["m"]),
                k=int(rec["k"]),
                density_type=rec["density_type"],
                seed=int(rec["seed"]),
                run_index=int(rec["run_index"]),
                wall_time_seconds=float(rec["wall_time_seconds"]),
                solutions=rec["solutions"],
                verdict=rec["verdict"],
                overlap_count=int(rec["overlap_count"]),
                overlap_ratio=float(rec["overlap_ratio"]),
                pattern_store_size=int(rec["pattern_store_size"]),
                mean_merge_scan=float(rec["mean_merge_scan"]),
                mean_empty_merge_scan=float(rec["mean_empty_merge_scan"]),
                early_terminated=rec["early_terminated"] == "True",
            ))
    return rows


@dataclass(frozen=True)
class Check:
    """One scaling comparison. ``compatible`` is None when data is missing."""

    kind: str
    density_type: str
    n: Optional[int]
    detail: str
    observed: Optional[float]
    expected: Optional[float]
    compatible: Optional[bool]

    @property
    def status(self) -> str:
        if self.compatible is None:
            return "absent"
        return "yes" if self.compatible else "no"


def within_band(observed: float, expected: float, low: float = BAND_LOW, high: float = BAND_HIGH) -> bool:
    return low * expected <= observed <= high * expected


def scaling_report(rows: Iterable[BenchRow]) -> list[Check]:
    """Quadratic-in-m, n/k and merge-scan checks over benchmark rows.

    * ``m^2``: for consecutive m levels at fixed (density type, n), mean time
      ratio against (m2/m1)^2.
    * ``n/k``: at fixed (n, m), mean time of a density type over the 0.9N
      baseline against n/k, pooled over the m levels both have.
    * ``scan``: mean merge steps of empty merges against 2n/k.
    """
    rows = list(rows)
    times = defaultdict(list)
    scans = defaultdict(list)
    ks = {}
    for r in rows:
        times[(r.density_type, r.n, r.m)].append(r.wall_time_seconds)
        if r.mean_empty_merge_scan > 0:
            scans[(r.density_type, r.n)].append(r.mean_empty_merge_scan)
        ks[(r.density_type, r.n)] = r.k
    avg = {key: mean(v) for key, v in times.items()}
    checks = []

    groups = defaultdict(dict)
    for (dt, n, m), t in avg.items():
        groups[(dt, n)][m] = t
    for (dt, n), by_m in sorted(groups.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        levels = sorted(by_m)
        if len(levels) < 2:
            checks.append(Check("m^2", dt, n, f"m={levels[0]}", None, None, None))
            continue
        for lo, hi in zip(levels, levels[1:]):
            observed = by_m[hi] / by_m[lo]
            expected = (hi / lo) ** 2
            checks.append(Check("m^2", dt, n, f"m={hi} vs m={lo}", observed, expected,
                                within_band(observed, expected)))

    for (dt, n), by_m in sorted(groups.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        if dt == "0.9N":
            continue
        base = groups.get(("0.9N", n), {})
        common = sorted(set(base) & set(by_m))
        n_over_k = n / ks[(dt, n)]
        if not common:
            checks.append(Check("n/k", dt, n, "no 0.9N baseline", None, n_over_k, None))
            continue
        observed = sum(by_m[m] for m in common) / sum(base[m] for m in common)
        checks.append(Check("n/k", dt, n, f"m in {common}", observed, n_over_k,
                            within_band(observed, n_over_k)))

    for (dt, n), k in sorted(ks.items()):
        bound = 2 * n / k
        if (dt, n) not in scans:
            checks.append(Check("scan", dt, n, "no empty merges", None, bound, None))
            continue
        observed = mean(scans[(dt, n)])
        checks.append(Check("scan", dt, n, "mean steps of empty merges vs 2n/k", observed, bound,
                            observed <= BAND_HIGH * bound))
    return checks


def format_report(checks: list[Check]) -> str:
    lines = [f"{'check':<6} {'DT':<8} {'n':>6} {'observed':>10} {'expected':>10}  ok      detail"]
    for c in checks:
        obs = "-" if c.observed is None else f"{c.observed:.3f}"
        exp = "-" if c.expected is None else f"{c.expected:.3f}"
        lines.append(f"{c.kind:<6} {c.density_type:<8} {c.n if c.n is not None else '-':>6} "
                     f"{obs:>10} {exp:>10}  {c.status:<7} {c.detail}")
    return "\n".join(lines)
