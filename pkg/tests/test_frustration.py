import numpy as np
import pytest

from signedbalance import (
    AnnealSchedule,
    EmptyGraphError,
    GraphTooLargeError,
    InvalidScheduleError,
    ZeroEdgesError,
    build_graph,
    compute_frustration,
    count_frustrated,
    eigen_decompose,
    frustration_anneal,
    frustration_exact,
    normalized_frustration,
)
from signedbalance.spectral import BALANCE_TOLERANCE

from conftest import brute_force_epsilon, random_signed_graph, small_graph_suite


def test_exact_balanced(balanced_graph):
    r = frustration_exact(balanced_graph)
    assert r.epsilon == 0
    assert r.normalized == 1.0
    assert r.exact is True
    assert r.deletion_set == ()
    assert count_frustrated(balanced_graph, r.best_partition)[0] == 0


def test_exact_unbalanced(unbalanced_graph):
    r = frustration_exact(unbalanced_graph)
    assert r.epsilon == 1
    assert r.normalized == 0.75
    assert [(e.u, e.v, e.sign) for e in r.deletion_set] == [(2, 5, 1)]


def test_exact_lexicographic_tie_break(balanced_graph):
    # ties resolve to the lexicographically smallest assignment vector
    # (node order, -1 < +1); for the worked example that is (-1,-1,-1,1,1)
    r = frustration_exact(balanced_graph)
    assert [r.best_partition[u] for u in balanced_graph.nodes] == [-1, -1, -1, 1, 1]


def test_exact_all_positive_triangle():
    g = build_graph([1, 2, 3], [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
    r = frustration_exact(g)
    assert r.epsilon == 0
    # every bipartition works; lexicographically smallest is all -1
    assert [r.best_partition[u] for u in g.nodes] == [-1, -1, -1]


def test_exact_frustrated_triangle():
    g = build_graph([1, 2, 3], [(1, 2, 1), (2, 3, 1), (1, 3, -1)])
    r = frustration_exact(g)
    assert r.epsilon == 1
    assert len(r.deletion_set) == 1


def test_exact_matches_independent_brute_force():
    rng = np.random.default_rng(321)
    for _ in range(30):
        g = random_signed_graph(rng, int(rng.integers(3, 10)), 0.6, 0.5)
        assert frustration_exact(g).epsilon == brute_force_epsilon(g)


def test_exact_size_cap():
    g = build_graph(list(range(21)), [(i, i + 1, 1) for i in range(20)])
    with pytest.raises(GraphTooLargeError):
        frustration_exact(g)
    # the cap is adjustable
    r = frustration_exact(g, n_exact=21)
    assert r.epsilon == 0


def test_exact_empty_graph():
    with pytest.raises(EmptyGraphError):
        frustration_exact(build_graph([], []))


def test_exact_single_node_and_edgeless():
    r = frustration_exact(build_graph([1], []))
    assert r.epsilon == 0
    assert r.normalized == 1.0
    r2 = frustration_exact(build_graph([1, 2, 3], []))
    assert r2.epsilon == 0
    assert r2.normalized == 1.0


def test_deletion_set_balances(unbalanced_graph):
    r = frustration_exact(unbalanced_graph)
    kept = [
        (e.u, e.v, e.sign)
        for e in unbalanced_graph.edges
        if e not in r.deletion_set
    ]
    g2 = build_graph([1, 2, 3, 4, 5], kept)
    assert eigen_decompose(g2).lambda_min < BALANCE_TOLERANCE


def test_normalized_frustration_values():
    assert normalized_frustration(0, 9) == 1.0
    assert abs(normalized_frustration(1, 9) - 0.7778) < 1e-4
    assert normalized_frustration(5, 10) == 0.0


def test_normalized_frustration_errors():
    with pytest.raises(ZeroEdgesError):
        normalized_frustration(0, 0)
    with pytest.raises(ValueError):
        normalized_frustration(-1, 5)
    with pytest.raises(ValueError):
        normalized_frustration(6, 5)


def test_anneal_matches_exact_on_fixture(unbalanced_graph):
    r = frustration_anneal(unbalanced_graph, seed=0)
    assert r.epsilon == 1
    assert r.exact is False
    assert count_frustrated(unbalanced_graph, r.best_partition)[0] == r.epsilon


def test_anneal_deterministic(unbalanced_graph):
    a = frustration_anneal(unbalanced_graph, seed=42)
    b = frustration_anneal(unbalanced_graph, seed=42)
    assert a.epsilon == b.epsilon
    assert a.best_partition == b.best_partition


def test_anneal_never_undercuts_exact():
    for g in small_graph_suite(40):
        exact = frustration_exact(g).epsilon
        anneal = frustration_anneal(g, seed=7).epsilon
        assert anneal >= exact


def test_anneal_empty_and_edgeless():
    with pytest.raises(EmptyGraphError):
        frustration_anneal(build_graph([], []))
    r = frustration_anneal(build_graph([1, 2], []), seed=1)
    assert r.epsilon == 0
    assert r.normalized == 1.0


def test_anneal_respects_restart_count(unbalanced_graph):
    one = frustration_anneal(unbalanced_graph, AnnealSchedule(restarts=1), seed=5)
    assert count_frustrated(unbalanced_graph, one.best_partition)[0] == one.epsilon


def test_schedule_validation():
    bad = [
        AnnealSchedule(t0=0.0),
        AnnealSchedule(t0=-1.0),
        AnnealSchedule(cooling=0.0),
        AnnealSchedule(cooling=1.0),
        AnnealSchedule(cooling=1.5),
        AnnealSchedule(iters_per_level=0),
        AnnealSchedule(t_min=0.0),
        AnnealSchedule(patience=0),
        AnnealSchedule(restarts=0),
    ]
    g = build_graph([1, 2, 3], [(1, 2, 1), (2, 3, -1), (1, 3, 1)])
    for schedule in bad:
        with pytest.raises(InvalidScheduleError):
            frustration_anneal(g, schedule)


def test_lambda_lower_bounds_epsilon():
    for g in small_graph_suite(30):
        lam = eigen_decompose(g).lambda_min
        eps = frustration_exact(g).epsilon
        assert lam <= eps + 1e-9


def test_switching_preserves_epsilon(unbalanced_graph):
    node = 2
    switched = [
        (e.u, e.v, -e.sign if node in (e.u, e.v) else e.sign)
        for e in unbalanced_graph.edges
    ]
    g2 = build_graph([1, 2, 3, 4, 5], switched)
    assert frustration_exact(g2).epsilon == frustration_exact(unbalanced_graph).epsilon


def test_result_json_shape(unbalanced_graph):
    obj = frustration_exact(unbalanced_graph).to_json_obj()
    assert set(obj) == {"epsilon", "normalized", "exact", "partition", "deletion_set"}
    assert obj["partition"]["1"] in (1, -1)
    assert obj["deletion_set"][0]["u"] == 2


def test_compute_frustration_dispatch(unbalanced_graph):
    auto = compute_frustration(unbalanced_graph)
    assert auto.exact is True  # 5 nodes, auto picks enumeration
    big = build_graph(list(range(25)), [(i, (i + 1) % 25, 1) for i in range(25)])
    assert compute_frustration(big).exact is False
    with pytest.raises(ValueError):
        compute_frustration(unbalanced_graph, method="guess")
