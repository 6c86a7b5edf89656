from collections import Counter
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from iesat.dimacs import write_dimacs
from iesat.engine import EngineConfig, _merge, count_models, intersect
from iesat.generator import (
    GenSpec,
    best_case_instance,
    k_for_density,
    random_instance,
    worst_case_instance,
)
from iesat.model import InputError, is_valid_clause
from iesat.oracle import brute_force_count
from iesat.rng import SplitMix64


def test_splitmix_reference_values():
    # Published SplitMix64 outputs for seed 1234567.
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(3)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423,
    ]


def test_below_range():
    rng = SplitMix64(0)
    draws = [rng.below(7) for _ in range(2000)]
    assert set(draws) == set(range(7))


@pytest.mark.parametrize("n,dt,k", [
    (20000, "6RootN", 848), (5000, "7RootN", 494), (20000, "0.9N", 18000),
    (100, "6RootN", 60), (800, "7RootN", 197), (100, "3RootN", 30),
])
def test_density_types(n, dt, k):
    assert k_for_density(n, dt) == k
    assert GenSpec(n=n, m=1, seed=0, density_type=dt).resolved_k == k


def test_unknown_density_type():
    with pytest.raises(InputError):
        k_for_density(100, "2N")


def test_spec_validation():
    with pytest.raises(InputError):
        GenSpec(n=3, m=1, seed=0, k=4)
    with pytest.raises(InputError):
        GenSpec(n=3, m=1, seed=0)
    with pytest.raises(InputError):
        GenSpec(n=3, m=1, seed=0, k=2, density_type="0.9N")


def test_k_equals_n():
    f = random_instance(GenSpec(n=3, m=1, k=3, seed=42))
    assert [abs(x) for x in f.clauses[0]] == [1, 2, 3]


@given(st.integers(1, 40).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))),
       st.integers(0, 30), st.integers(0, 2**64 - 1))
def test_random_instance_valid_and_deterministic(nk, m, seed):
    n, k = nk
    spec = GenSpec(n=n, m=m, k=k, seed=seed)
    f = random_instance(spec)
    assert f.m == m
    assert all(len(c) == k and is_valid_clause(c, n) for c in f.clauses)
    assert write_dimacs(random_instance(spec)) == write_dimacs(f)


def test_statistical_uniformity():
    n, k, m = 20, 5, 100_000
    f = random_instance(GenSpec(n=n, m=m, k=k, seed=12345))
    var_counts = Counter(abs(x) for c in f.clauses for x in c)
    pos = sum(1 for c in f.clauses for x in c if x > 0)
    p = k / n
    se = (p * (1 - p) / m) ** 0.5
    for v in range(1, n + 1):
        assert abs(var_counts[v] / m - p) <= 5 * se
    total = m * k
    assert abs(pos / total - 0.5) <= 5 * (0.25 / total) ** 0.5


def test_best_case_shape():
    f = best_case_instance(5, 3, 3, seed=1)
    assert f.clauses[0][0] == 1
    assert f.clauses[1][:2] == (-1, 2)
    assert f.clauses[2] == (-1, -2, 3)
    assert all(len(c) == 3 for c in f.clauses)


@pytest.mark.parametrize("n,k,m,seed", [(30, 10, 10, 0), (50, 20, 12, 3), (8, 8, 8, 9)])
def test_best_case_pairwise_disjoint(n, k, m, seed):
    f = best_case_instance(n, k, m, seed)
    for i, j in combinations(range(m), 2):
        result, steps = _merge(f.clauses[i], f.clauses[j])
        assert result is None
        assert steps <= i + 2  # clash at variable i + 1 (1-based)
    stats = count_models(f, EngineConfig(collect_stats=True)).stats
    assert stats.overlap_count == 0


def test_best_case_needs_m_le_k():
    with pytest.raises(InputError):
        best_case_instance(10, 3, 4, seed=0)


def test_worst_case_shape():
    f = worst_case_instance(6, 4)
    assert f.clauses == ((1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 3, 6))
    assert count_models(f).solutions == brute_force_count(f) == 57


@pytest.mark.parametrize("n,k", [(6, 4), (10, 3), (12, 1), (9, 9)])
def test_worst_case_store(n, k):
    f = worst_case_instance(n, k)
    m = n - k + 1
    assert f.m == m
    r = count_models(f, EngineConfig(collect_stats=True))
    assert r.stats.pattern_store_size == 2**m - 1
    assert r.solutions == brute_force_count(f)
