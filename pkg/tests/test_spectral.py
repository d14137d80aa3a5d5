import numpy as np
import pytest

from signedbalance import (
    DegenerateDenominatorError,
    EmptyGraphError,
    NoEdgesError,
    algebraic_conflict,
    build_graph,
    d_bar_max,
    eigen_decompose,
    eigenvector_stats,
    partition_from_eigenvector,
    signed_laplacian,
)
from signedbalance.spectral import BALANCE_TOLERANCE, balance_score_from

from conftest import random_signed_graph

# Frozen from the worked example: L = D - A with unsigned degrees.
EXPECTED_BALANCED_LAPLACIAN = np.array(
    [
        [3, -1, -1, 1, 0],
        [-1, 3, -1, 0, 1],
        [-1, -1, 4, 1, 1],
        [1, 0, 1, 3, -1],
        [0, 1, 1, -1, 3],
    ],
    dtype=np.float64,
)


def test_signed_laplacian_matrix(balanced_graph):
    lap = signed_laplacian(balanced_graph)
    assert np.array_equal(lap, EXPECTED_BALANCED_LAPLACIAN)


def test_balanced_spectrum(balanced_graph):
    r = eigen_decompose(balanced_graph)
    assert np.allclose(sorted(r.eigenvalues), [0, 3, 3, 5, 5], atol=1e-9)
    assert abs(r.lambda_min) < 1e-9
    assert np.allclose(np.abs(r.u_min), 0.4472, atol=1e-4)
    # sign pattern separates the two camps
    signs = {u: (1 if x >= 0 else -1) for u, x in r.node_values.items()}
    assert signs[1] == signs[2] == signs[3]
    assert signs[4] == signs[5]
    assert signs[1] != signs[4]


def test_eigenvalues_descending(unbalanced_graph):
    r = eigen_decompose(unbalanced_graph)
    assert all(a >= b for a, b in zip(r.eigenvalues, r.eigenvalues[1:]))


def test_unbalanced_spectrum(unbalanced_graph):
    r = eigen_decompose(unbalanced_graph)
    assert abs(r.lambda_min - 0.5505) < 1e-3
    expected = np.array([0.5411, 0.2979, 0.4865, 0.5411, 0.2979])
    assert np.allclose(np.abs(r.u_min), expected, atol=1e-3)


def test_sign_convention_pivot_nonnegative(unbalanced_graph):
    r = eigen_decompose(unbalanced_graph)
    pivot = int(np.argmax(np.abs(r.u_min)))
    assert r.u_min[pivot] >= 0


def test_residual_bound(unbalanced_graph, balanced_graph):
    for g in (balanced_graph, unbalanced_graph):
        lap = signed_laplacian(g)
        r = eigen_decompose(g)
        residual = np.linalg.norm(lap @ r.u_min - r.lambda_min * r.u_min)
        assert residual < 1e-8 * np.linalg.norm(lap)


def test_psd_within_tolerance():
    rng = np.random.default_rng(101)
    for _ in range(25):
        g = random_signed_graph(rng, int(rng.integers(3, 30)), 0.4, 0.5)
        if g.n_edges == 0:
            continue
        r = eigen_decompose(g)
        assert r.lambda_min > -1e-9
        # Gershgorin: rows have center deg(u) and radius deg(u)
        dmax = max(g.degree(u) for u in g.nodes)
        assert r.eigenvalues[0] <= 2 * dmax + 1e-9


def test_single_negative_edge():
    g = build_graph([1, 2], [(1, 2, -1)])
    lap = signed_laplacian(g)
    assert np.array_equal(lap, np.array([[1.0, 1.0], [1.0, 1.0]]))
    r = eigen_decompose(g)
    assert np.allclose(sorted(r.eigenvalues), [0.0, 2.0], atol=1e-12)


def test_two_isolated_nodes():
    g = build_graph([1, 2], [])
    r = eigen_decompose(g)
    assert np.allclose(r.eigenvalues, [0.0, 0.0])


def test_empty_graph_rejected():
    with pytest.raises(EmptyGraphError):
        eigen_decompose(build_graph([], []))
    with pytest.raises(EmptyGraphError):
        algebraic_conflict(build_graph([], []))


def test_conflict_score_balanced(balanced_graph):
    score = algebraic_conflict(balanced_graph)
    assert score.is_balanced
    assert score.algebraic_conflict_normalized == 1.0
    assert score.d_bar_max == 3.5


def test_conflict_score_unbalanced(unbalanced_graph):
    score = algebraic_conflict(unbalanced_graph)
    assert not score.is_balanced
    assert abs(score.algebraic_conflict_normalized - 0.7797) < 1e-3
    assert score.d_bar_max == 3.5


def test_conflict_score_errors():
    with pytest.raises(NoEdgesError):
        algebraic_conflict(build_graph([1, 2], []))
    # single edge: both endpoints have degree 1, so d_bar_max = 1
    with pytest.raises(DegenerateDenominatorError):
        algebraic_conflict(build_graph([1, 2], [(1, 2, -1)]))


def test_d_bar_max(unbalanced_graph):
    assert d_bar_max(unbalanced_graph) == 3.5
    with pytest.raises(NoEdgesError):
        d_bar_max(build_graph([1], []))


def test_balance_tolerance_clamp():
    # a balanced graph's tiny negative eigenvalue must still report 1.0
    g = build_graph([1, 2, 3], [(1, 2, 1), (2, 3, 1), (1, 3, 1)])
    score = algebraic_conflict(g)
    assert score.lambda_min < BALANCE_TOLERANCE
    assert score.algebraic_conflict_normalized == 1.0
    assert score.is_balanced


def test_switching_invariance(unbalanced_graph):
    # flipping all signs at one node must not change the spectrum
    node = 3
    switched = []
    for e in unbalanced_graph.edges:
        sign = -e.sign if node in (e.u, e.v) else e.sign
        switched.append((e.u, e.v, sign))
    g2 = build_graph([1, 2, 3, 4, 5], switched)
    r1 = eigen_decompose(unbalanced_graph)
    r2 = eigen_decompose(g2)
    assert np.allclose(r1.eigenvalues, r2.eigenvalues, atol=1e-9)


def test_sparse_path_matches_dense():
    rng = np.random.default_rng(55)
    g = random_signed_graph(rng, 80, 0.12, 0.4)
    dense = eigen_decompose(g)
    sparse = eigen_decompose(g, dense_cutoff=10)
    assert abs(dense.lambda_min - sparse.lambda_min) < 1e-8
    assert np.allclose(np.abs(dense.u_min), np.abs(sparse.u_min), atol=1e-6)


def test_sparse_path_deterministic():
    rng = np.random.default_rng(56)
    g = random_signed_graph(rng, 60, 0.15, 0.5)
    r1 = eigen_decompose(g, dense_cutoff=10)
    r2 = eigen_decompose(g, dense_cutoff=10)
    assert np.array_equal(r1.u_min, r2.u_min)
    assert np.array_equal(r1.eigenvalues, r2.eigenvalues)


def test_partition_from_eigenvector(unbalanced_graph):
    part = partition_from_eigenvector(eigen_decompose(unbalanced_graph))
    assert set(part.values()) <= {1, -1}
    assert part[1] == part[2] == part[3]
    assert part[4] == part[5] != part[1]


def test_eigenvector_stats(unbalanced_graph):
    mean_abs, std_abs = eigenvector_stats(eigen_decompose(unbalanced_graph))
    assert abs(mean_abs - 0.4329) < 1e-3
    assert std_abs > 0


def test_eigenvector_stats_single_node():
    r = eigen_decompose(build_graph([1], []))
    mean_abs, std_abs = eigenvector_stats(r)
    assert mean_abs == 1.0
    assert std_abs == 0.0


def test_balance_json_keys(balanced_graph):
    obj = algebraic_conflict(balanced_graph).to_json_obj()
    assert set(obj) == {"lambda_min", "algebraic_conflict", "d_bar_max", "is_balanced"}
    assert obj["is_balanced"] is True


def test_balance_score_from_mismatched_nodes(balanced_graph, unbalanced_graph):
    from signedbalance import MismatchedResultError

    r = eigen_decompose(build_graph([1, 2, 9], [(1, 2, 1), (2, 9, 1), (1, 9, 1)]))
    with pytest.raises(MismatchedResultError):
        balance_score_from(balanced_graph, r)
