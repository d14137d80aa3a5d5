"""Random signed networks with a planted two-camp structure.

The model starts from perfect balance: two Erdos-Renyi blocks wired
internally with positive edges and across with negative edges, so the
planted partition (block A = +1, block B = -1) frustrates nothing. A
chosen fraction of edges then has its sign flipped, and each flipped edge
is frustrated under the planted partition by construction. That makes the
flip count an upper bound on the true frustration index, with the planted
partition as a certificate.

Flips are the first k entries of one seed-determined permutation of the
edge list. A uniform permutation prefix is a uniform k-subset, and it
nests across fractions: for a fixed seed, the flip set at fraction 0.2
contains the flip set at 0.1, which benchmark sweeps exploit as a paired
design.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DisconnectedError, EmptyPoolError
from .graph import SignedEdge, SignedGraph, build_graph, is_connected

MAX_ATTEMPTS = 25


@dataclass(frozen=True)
class GenConfig:
    """Generation parameters.

    ``p_intra``/``p_inter`` are independent edge probabilities inside and
    across the two blocks. ``frustrated_fraction`` in [0, 1) chooses the
    share of edges to sign-flip. ``split`` optionally fixes the share of
    flips drawn from the cross-block pool (None means one uniform pool).
    """

    n_a: int
    n_b: int
    p_intra: float
    p_inter: float
    frustrated_fraction: float = 0.0
    seed: int = 0
    split: Optional[float] = None

    def validate(self) -> None:
        if self.n_a < 1 or self.n_b < 1:
            raise ValueError(f"both blocks need at least one node, got {self.n_a} and {self.n_b}")
        for name, p in (("p_intra", self.p_intra), ("p_inter", self.p_inter)):
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")
        if not 0.0 <= self.frustrated_fraction < 1.0:
            raise ValueError(f"frustrated_fraction must lie in [0, 1), got {self.frustrated_fraction}")
        if self.split is not None and not 0.0 <= self.split <= 1.0:
            raise ValueError(f"split must lie in [0, 1], got {self.split}")


def default_edge_probability(n: int) -> float:
    """Density heuristic keeping expected degree near 10: p = 10 / (n - 1)."""
    if n < 2:
        return 1.0
    return min(1.0, 10.0 / (n - 1))


def _sample_pairs(rng: np.random.Generator, pairs: np.ndarray, p: float) -> np.ndarray:
    if len(pairs) == 0 or p <= 0.0:
        return pairs[:0]
    return pairs[rng.random(len(pairs)) < p]


def _block_pairs(lo: int, hi: int) -> np.ndarray:
    idx = np.arange(lo, hi)
    if len(idx) < 2:
        return np.empty((0, 2), dtype=np.int64)
    a, b = np.triu_indices(len(idx), k=1)
    return np.column_stack([idx[a], idx[b]])


def _cross_pairs(n_a: int, n: int) -> np.ndarray:
    a = np.arange(n_a)
    b = np.arange(n_a, n)
    return np.column_stack([np.repeat(a, len(b)), np.tile(b, len(a))])


def generate(cfg: GenConfig) -> tuple[SignedGraph, dict, tuple[SignedEdge, ...]]:
    """Generate one connected signed network.

    Returns ``(graph, planted_partition, planted_frustrated_edges)``.
    Node ids are 0..n-1 with group "A" or "B". The draw order (A pairs,
    B pairs, cross pairs, then one permutation for flips) is fixed, so a
    config is fully reproducible. Disconnected draws are retried with
    derived seeds up to 25 times before :class:`DisconnectedError`;
    :class:`EmptyPoolError` signals that a flip quota exceeds its pool.
    """
    cfg.validate()
    n = cfg.n_a + cfg.n_b
    last_exc = None
    for attempt in range(MAX_ATTEMPTS):
        rng = np.random.default_rng(np.random.SeedSequence([cfg.seed, attempt]))
        intra = np.vstack([
            _sample_pairs(rng, _block_pairs(0, cfg.n_a), cfg.p_intra),
            _sample_pairs(rng, _block_pairs(cfg.n_a, n), cfg.p_intra),
        ])
        cross = _sample_pairs(rng, _cross_pairs(cfg.n_a, n), cfg.p_inter)

        pairs = np.vstack([intra, cross])
        signs = np.concatenate([
            np.ones(len(intra), dtype=np.int8),
            -np.ones(len(cross), dtype=np.int8),
        ])
        m = len(pairs)

        flip = np.zeros(m, dtype=bool)
        k = int(round(cfg.frustrated_fraction * m))
        if cfg.split is None:
            if k > m:
                raise EmptyPoolError(f"cannot flip {k} of {m} edges")
            order = rng.permutation(m)
            flip[order[:k]] = True
        else:
            k_cross = int(round(cfg.split * k))
            k_intra = k - k_cross
            if k_intra > len(intra):
                raise EmptyPoolError(f"intra pool has {len(intra)} edges, need {k_intra} flips")
            if k_cross > len(cross):
                raise EmptyPoolError(f"cross pool has {len(cross)} edges, need {k_cross} flips")
            order_intra = rng.permutation(len(intra))
            order_cross = rng.permutation(len(cross))
            flip[order_intra[:k_intra]] = True
            flip[len(intra) + order_cross[:k_cross]] = True
        signs = np.where(flip, -signs, signs).astype(np.int8)

        nodes = [(i, {"group": "A" if i < cfg.n_a else "B"}) for i in range(n)]
        edges = [SignedEdge(int(u), int(v), int(s)) for (u, v), s in zip(pairs, signs)]
        g = build_graph(nodes, edges)
        if m == 0 or not is_connected(g):
            last_exc = DisconnectedError(
                f"no connected draw in {MAX_ATTEMPTS} attempts "
                f"(n_a={cfg.n_a}, n_b={cfg.n_b}, p_intra={cfg.p_intra}, p_inter={cfg.p_inter})"
            )
            continue

        planted = {i: (1 if i < cfg.n_a else -1) for i in range(n)}
        planted_frustrated = tuple(e for e, f in zip(edges, flip) if f)
        return g, planted, planted_frustrated
    raise last_exc


def write_planted_sidecar(path, planted: dict, flipped: tuple[SignedEdge, ...]) -> None:
    """Sidecar JSON recording the planted partition and flipped edges."""
    obj = {
        "planted_partition": {str(u): side for u, side in planted.items()},
        "flipped_edges": [{"u": e.u, "v": e.v, "sign": e.sign} for e in flipped],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=2)
        fh.write("\n")
