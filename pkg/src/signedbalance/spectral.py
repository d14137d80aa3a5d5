"""Spectral balance measures built on the signed Laplacian.

The signed Laplacian is L = D - A where A is the signed adjacency and D is
the diagonal of unsigned degrees (negative edges still add 1). L is
positive semidefinite with smallest eigenvalue 0 exactly when the graph is
structurally balanced; the smallest eigenvalue grows with the amount of
conflict and its eigenvector points at the least-frustrated bipartition.

The normalized conflict score maps that eigenvalue onto [0, 1] where 1
means balanced:

    score = 1 - lambda_min / (d_bar_max - 1)

with d_bar_max the largest mean endpoint degree over edges.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .errors import (
    ConvergenceFailureError,
    DegenerateDenominatorError,
    EmptyGraphError,
    MismatchedResultError,
    NoEdgesError,
)
from .graph import NodeId, SignedGraph, signed_adjacency

#: Eigenvalues below this are treated as numerically zero, i.e. balanced.
BALANCE_TOLERANCE = 1e-6

#: Graphs up to this many nodes use a dense full eigendecomposition.
DENSE_CUTOFF = 2000


@dataclass(frozen=True)
class SpectralResult:
    """Eigenstructure of the signed Laplacian.

    ``eigenvalues`` is descending. On the iterative path (large graphs)
    only the smallest few eigenvalues are computed, so the array may be
    short; ``lambda_min`` is always the smallest. ``u_min`` follows the
    graph's canonical node order and its largest-magnitude entry is
    non-negative.
    """

    nodes: tuple[NodeId, ...]
    eigenvalues: np.ndarray
    lambda_min: float
    u_min: np.ndarray

    @property
    def node_values(self) -> dict[NodeId, float]:
        return {u: float(x) for u, x in zip(self.nodes, self.u_min)}


@dataclass(frozen=True)
class BalanceScore:
    """Normalized conflict score; 1.0 means balanced, values fall toward 0."""

    lambda_min: float
    algebraic_conflict_normalized: float
    d_bar_max: float
    is_balanced: bool

    def to_json_obj(self) -> dict:
        return {
            "lambda_min": self.lambda_min,
            "algebraic_conflict": self.algebraic_conflict_normalized,
            "d_bar_max": self.d_bar_max,
            "is_balanced": self.is_balanced,
        }


def signed_laplacian(g: SignedGraph) -> np.ndarray:
    """Dense signed Laplacian in canonical node order."""
    a = signed_adjacency(g)
    degrees = np.abs(a).sum(axis=1)
    return np.diag(degrees) - a


def _sparse_laplacian(g: SignedGraph) -> sp.csr_matrix:
    n = g.n_nodes
    ii, jj, ss = g.edge_index_arrays()
    signs = ss.astype(np.float64)
    rows = np.concatenate([ii, jj])
    cols = np.concatenate([jj, ii])
    data = np.concatenate([-signs, -signs])
    lap = sp.coo_matrix((data, (rows, cols)), shape=(n, n))
    deg = np.bincount(rows, minlength=n).astype(np.float64)
    return (lap + sp.diags(deg)).tocsr()


def _orient(vec: np.ndarray) -> np.ndarray:
    """Fix the eigenvector's global sign: largest-|entry| made non-negative."""
    pivot = int(np.argmax(np.abs(vec)))
    if vec[pivot] < 0:
        return -vec
    return vec


def eigen_decompose(g: SignedGraph, dense_cutoff: int = DENSE_CUTOFF) -> SpectralResult:
    """Eigenvalues and minimal eigenvector of the signed Laplacian.

    Dense symmetric solve up to ``dense_cutoff`` nodes, shift-invert
    Lanczos above it (deterministic start vector, so results are
    reproducible). Raises :class:`EmptyGraphError` on zero nodes and
    :class:`ConvergenceFailureError` if the iterative solver gives up.
    """
    n = g.n_nodes
    if n == 0:
        raise EmptyGraphError("spectral decomposition needs at least one node")
    if n <= dense_cutoff:
        lap = signed_laplacian(g)
        w, v = np.linalg.eigh(lap)
        eigenvalues = w[::-1].copy()
        u_min = _orient(v[:, 0].copy())
        return SpectralResult(g.nodes, eigenvalues, float(w[0]), u_min)

    lap = _sparse_laplacian(g)
    k = min(2, n - 1)
    v0 = np.full(n, 1.0 / np.sqrt(n))
    try:
        # Shift-invert around a negative sigma keeps the factorization
        # nonsingular even when 0 is an eigenvalue (balanced graphs).
        w, v = spla.eigsh(lap, k=k, sigma=-0.1, which="LM", v0=v0)
    except spla.ArpackNoConvergence as exc:
        raise ConvergenceFailureError(f"eigensolver did not converge on {n} nodes: {exc}") from exc
    order = np.argsort(w)
    w = w[order]
    v = v[:, order]
    eigenvalues = w[::-1].copy()
    u_min = _orient(v[:, 0].copy())
    return SpectralResult(g.nodes, eigenvalues, float(w[0]), u_min)


def d_bar_max(g: SignedGraph) -> float:
    """Largest mean endpoint degree, max over edges of (deg(u) + deg(v)) / 2."""
    if g.n_edges == 0:
        raise NoEdgesError("d_bar_max needs at least one edge")
    ii, jj, _ = g.edge_index_arrays()
    deg = np.bincount(np.concatenate([ii, jj]), minlength=g.n_nodes)
    return float(np.max((deg[ii] + deg[jj]) / 2.0))


def balance_score_from(g: SignedGraph, result: SpectralResult) -> BalanceScore:
    """Normalized conflict score reusing an existing decomposition."""
    if tuple(result.nodes) != tuple(g.nodes):
        raise MismatchedResultError("spectral result belongs to a different node set")
    dmax = d_bar_max(g)
    if dmax <= 1.0:
        raise DegenerateDenominatorError(f"normalization needs d_bar_max > 1, got {dmax}")
    lam = result.lambda_min
    if lam < BALANCE_TOLERANCE:
        # Numerically zero: report the graph as exactly balanced.
        return BalanceScore(lam, 1.0, dmax, True)
    return BalanceScore(lam, 1.0 - lam / (dmax - 1.0), dmax, False)


def algebraic_conflict(g: SignedGraph) -> BalanceScore:
    """Normalized spectral conflict score of a graph.

    Raises :class:`EmptyGraphError` on zero nodes, :class:`NoEdgesError`
    on zero edges, and :class:`DegenerateDenominatorError` when every edge
    has mean endpoint degree <= 1 (the normalization divides by zero).
    """
    if g.n_nodes == 0:
        raise EmptyGraphError("conflict score needs at least one node")
    if g.n_edges == 0:
        raise NoEdgesError("conflict score needs at least one edge")
    return balance_score_from(g, eigen_decompose(g))


def partition_from_eigenvector(result: SpectralResult) -> dict[NodeId, int]:
    """Two-side partition from the minimal eigenvector's signs.

    Zero entries land on the +1 side so the partition is always total.
    """
    return {u: (1 if x >= 0 else -1) for u, x in zip(result.nodes, result.u_min)}


def eigenvector_stats(result: SpectralResult) -> tuple[float, float]:
    """Mean and standard deviation of |u_min| entries.

    Near-uniform magnitudes (std close to 0) indicate a clean two-camp
    split; spread-out magnitudes indicate localized conflict.
    """
    mags = np.abs(result.u_min)
    return float(np.mean(mags)), float(np.std(mags))
