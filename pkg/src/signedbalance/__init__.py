"""Structural balance of signed networks.

A signed network carries +1 (friendly, agreeing) and -1 (hostile,
opposing) edges. It is balanced when the nodes split into two camps with
all positive edges inside camps and all negative edges between them.
This package quantifies how far a network is from that ideal, from two
angles that provably meet in the middle:

- spectral: the smallest eigenvalue of the signed Laplacian is zero
  exactly on balanced graphs and grows with conflict
  (:func:`algebraic_conflict`);
- combinatorial: the frustration index, the minimum number of edges any
  two-camp split leaves violated (:func:`frustration_exact`,
  :func:`frustration_anneal`).

It also ingests roll-call vote data into signed agreement networks,
draws deterministic eigenvector layouts, generates random signed
networks with planted camps, and ships a timing harness. The
``signedbalance`` command exposes all of it; see the README.

Quick usage::

    from signedbalance import build_graph, algebraic_conflict, frustration_exact

    g = build_graph([1, 2, 3], [(1, 2, 1), (2, 3, 1), (1, 3, -1)])
    algebraic_conflict(g).algebraic_conflict_normalized  # ~0.0, maximal conflict
    frustration_exact(g).epsilon  # 1: deleting one edge balances a triangle
"""

from .errors import (
    ConvergenceFailureError,
    DanglingEndpointError,
    DegenerateDenominatorError,
    DegenerateSampleError,
    DisconnectedError,
    DuplicateEdgeError,
    DuplicateNodeError,
    EmptyGraphError,
    EmptyPoolError,
    GraphTooLargeError,
    InvalidScheduleError,
    MismatchedResultError,
    MissingGraphError,
    NoEdgesError,
    PartialPartitionError,
    SchemaError,
    SelfLoopError,
    SignedBalanceError,
    TooFewVotersError,
    UnknownCastCodeError,
    UnknownGroupColorError,
    UnmatchedMemberError,
    UnreadableFileError,
    ZeroEdgesError,
)
from .graph import (
    SignedEdge,
    SignedGraph,
    build_graph,
    count_frustrated,
    graph_from_json_obj,
    graph_to_json_obj,
    is_connected,
    read_graph_auto,
    read_graph_csv,
    read_graph_json,
    signed_adjacency,
    write_edge_csv,
    write_graph_json,
    write_node_csv,
)
from .spectral import (
    BALANCE_TOLERANCE,
    BalanceScore,
    SpectralResult,
    algebraic_conflict,
    balance_score_from,
    d_bar_max,
    eigen_decompose,
    eigenvector_stats,
    partition_from_eigenvector,
    signed_laplacian,
)
from .frustration import (
    AnnealSchedule,
    FrustrationResult,
    N_EXACT,
    compute_frustration,
    frustration_anneal,
    frustration_exact,
    normalized_frustration,
)
from .layout import LayoutResult, StyleOptions, classify_edges, compute_layout, render_svg
from .generator import GenConfig, default_edge_probability, generate
from .ingest import (
    CollapsedVoteNetwork,
    PairStats,
    RollCallRecord,
    ThresholdPair,
    agreement_samples,
    build_congress_graph,
    collapse_votes,
    compute_thresholds,
    homophily_overlap,
    ingest_to_graph,
    kde_threshold,
    parse_votes,
    per_vote_network,
)
from .bench import BenchRecord, congress_sweep, run_grid, trend_summary

__version__ = "0.1.0"

__all__ = [
    "AnnealSchedule",
    "BALANCE_TOLERANCE",
    "BalanceScore",
    "BenchRecord",
    "CollapsedVoteNetwork",
    "FrustrationResult",
    "GenConfig",
    "LayoutResult",
    "N_EXACT",
    "PairStats",
    "RollCallRecord",
    "SignedEdge",
    "SignedGraph",
    "SpectralResult",
    "StyleOptions",
    "ThresholdPair",
    "agreement_samples",
    "algebraic_conflict",
    "balance_score_from",
    "build_congress_graph",
    "build_graph",
    "classify_edges",
    "collapse_votes",
    "compute_frustration",
    "compute_layout",
    "compute_thresholds",
    "congress_sweep",
    "count_frustrated",
    "d_bar_max",
    "default_edge_probability",
    "eigen_decompose",
    "eigenvector_stats",
    "frustration_anneal",
    "frustration_exact",
    "generate",
    "graph_from_json_obj",
    "graph_to_json_obj",
    "homophily_overlap",
    "ingest_to_graph",
    "is_connected",
    "kde_threshold",
    "normalized_frustration",
    "parse_votes",
    "partition_from_eigenvector",
    "per_vote_network",
    "read_graph_auto",
    "read_graph_csv",
    "read_graph_json",
    "render_svg",
    "run_grid",
    "signed_adjacency",
    "signed_laplacian",
    "trend_summary",
    "write_edge_csv",
    "write_graph_json",
    "write_node_csv",
    # errors
    "SignedBalanceError",
    "ConvergenceFailureError",
    "DanglingEndpointError",
    "DegenerateDenominatorError",
    "DegenerateSampleError",
    "DisconnectedError",
    "DuplicateEdgeError",
    "DuplicateNodeError",
    "EmptyGraphError",
    "EmptyPoolError",
    "GraphTooLargeError",
    "InvalidScheduleError",
    "MismatchedResultError",
    "MissingGraphError",
    "NoEdgesError",
    "PartialPartitionError",
    "SchemaError",
    "SelfLoopError",
    "TooFewVotersError",
    "UnknownCastCodeError",
    "UnknownGroupColorError",
    "UnmatchedMemberError",
    "UnreadableFileError",
    "ZeroEdgesError",
]
