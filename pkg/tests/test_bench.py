import csv

import pytest

from iesat.bench import (
    CSV_FIELDS,
    BenchRow,
    Cell,
    append_csv,
    derive_seed,
    parse_grid,
    read_csv,
    run_grid,
    scaling_report,
    within_band,
)


def row(dt="0.9N", n=100, m=100, k=90, t=1.0, scan=2.0, ov=0):
    return BenchRow(n=n, m=m, k=k, density_type=dt, seed=0, run_index=0, wall_time_seconds=t,
                    solutions="1", verdict="SAT", overlap_count=ov, overlap_ratio=ov / m,
                    pattern_store_size=m + ov, mean_merge_scan=scan, mean_empty_merge_scan=scan,
                    early_terminated=False)


def test_parse_grid():
    cells = parse_grid("n=100,200; m=10 ;dt=0.9N,7RootN")
    assert len(cells) == 4
    assert cells[1] == Cell(100, 10, density_type="7RootN")
    assert parse_grid("n=5;m=3;k=2") == [Cell(5, 3, k=2)]


@pytest.mark.parametrize("bad", ["n=1;m=2", "n=1;m=2;dt=0.9N;k=3", "q=1;n=1;m=1;k=1", "n=;m=1;k=1"])
def test_parse_grid_errors(bad):
    with pytest.raises(ValueError):
        parse_grid(bad)


def test_seed_derivation_is_stable():
    c = Cell(100, 10, density_type="0.9N")
    assert derive_seed(1, c, 0) == derive_seed(1, c, 0)
    assert derive_seed(1, c, 0) != derive_seed(1, c, 1)
    assert derive_seed(1, c, 0) != derive_seed(2, c, 0)


def test_desk_grid_rows():
    rows = list(run_grid(parse_grid("n=100;m=100,1000;dt=0.9N"), repeats=3, base_seed=5))
    assert len(rows) == 6
    assert all(r.overlap_count == 0 and r.overlap_ratio == 0 for r in rows)
    assert all(r.wall_time_seconds > 0 and r.k == 90 for r in rows)


def test_reruns_reproduce():
    grid = parse_grid("n=30;m=40;dt=3RootN")
    a = list(run_grid(grid, 2, 9))
    b = list(run_grid(grid, 2, 9))
    key = lambda r: (r.seed, r.solutions, r.overlap_count, r.pattern_store_size)
    assert [key(r) for r in a] == [key(r) for r in b]


def test_csv_append_and_read(tmp_path):
    path = tmp_path / "out.csv"
    rows = list(run_grid(parse_grid("n=20;m=5;k=3"), 2, 1))
    assert append_csv(rows, path) == 2
    assert append_csv(rows[:1], path) == 1
    with open(path) as fh:
        data = list(csv.reader(fh))
    assert data[0] == CSV_FIELDS
    assert len(data) == 4
    back = read_csv(path)
    assert back[0] == rows[0]


def test_csv_header_mismatch(tmp_path):
    path = tmp_path / "x.csv"
    path.write_text("a,b\n1,2\n")
    with pytest.raises(ValueError):
        append_csv([], path)


def test_band():
    assert within_band(96, 100)
    assert not within_band(300, 100)


def test_report_m_squared_compatible():
    rows = [row(m=100, t=0.01), row(m=1000, t=0.96)]
    [check] = [c for c in scaling_report(rows) if c.kind == "m^2"]
    assert check.observed == pytest.approx(96)
    assert check.expected == pytest.approx(100)
    assert check.status == "yes"


def test_report_m_squared_incompatible():
    rows = [row("3RootN", m=100, k=30, t=0.01), row("3RootN", m=1000, k=30, t=30.0)]
    [check] = [c for c in scaling_report(rows) if c.kind == "m^2"]
    assert check.status == "no"


def test_report_single_level_absent():
    [check] = [c for c in scaling_report([row()]) if c.kind == "m^2"]
    assert check.status == "absent"


def test_report_n_over_k():
    rows = [row(n=800, k=720, t=1.0), row("7RootN", n=800, k=197, t=5.0)]
    [check] = [c for c in scaling_report(rows) if c.kind == "n/k"]
    assert check.expected == pytest.approx(800 / 197)
    assert check.status == "yes"


def test_report_n_over_k_missing_baseline():
    [check] = [c for c in scaling_report([row("7RootN", k=70)]) if c.kind == "n/k"]
    assert check.status == "absent"


def test_report_scan():
    checks = [c for c in scaling_report([row(scan=1.5)]) if c.kind == "scan"]
    assert checks[0].expected == pytest.approx(200 / 90)
    assert checks[0].status == "yes"
