"""Timing harness for the two balance metrics.

Grid runs sweep graph size and planted frustrated fraction; each cell
times the annealing solver and the eigensolver separately. Timing
protocol: one untimed warm-up call per cell (JIT compilation, caches),
then the median wall time over the repetitions, measured with a
monotonic high-resolution clock. Graph generation is never inside the
timed region.

Seed derivation keeps rows comparable: each SIZE row uses one topology
seed shared by all fractions, so combined with nested flip sets the
fraction axis varies nothing but the amount of frustration (a paired
design). Annealing seeds derive per cell; repetitions re-time the same
seeded computation, so a record's value column is well defined and the
spread across repetitions is pure timer noise.
"""

from __future__ import annotations

import csv
import json
import os
import time
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import MissingGraphError, UnreadableFileError
from .frustration import AnnealSchedule, _derive_seed, frustration_anneal
from .generator import GenConfig, default_edge_probability, generate
from .graph import SignedGraph, count_frustrated, read_graph_json
from .spectral import (
    algebraic_conflict,
    eigen_decompose,
    eigenvector_stats,
    partition_from_eigenvector,
)

METRIC_FRUSTRATION = "frustration"
METRIC_EIGEN = "eigen"

BENCH_CSV_COLUMNS = ["n", "frustrated_fraction", "metric", "wall_seconds", "value", "seed", "reps", "machine"]


@dataclass(frozen=True)
class BenchRecord:
    """One timed cell: median wall seconds plus the metric's value."""

    n_nodes: int
    frustrated_fraction: float
    metric: str
    wall_seconds: float
    value: float
    seed: int
    repetitions: int
    machine: str = ""

    def to_row(self) -> list:
        return [
            self.n_nodes,
            self.frustrated_fraction,
            self.metric,
            self.wall_seconds,
            self.value,
            self.seed,
            self.repetitions,
            self.machine,
        ]


def _median_time(fn, reps: int) -> tuple[float, object]:
    fn()  # warm-up, discarded
    times = []
    result = None
    for _ in range(reps):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return float(np.median(times)), result


def run_grid(
    sizes: Sequence[int],
    fractions: Sequence[float],
    reps: int = 5,
    seed: int = 0,
    schedule: Optional[AnnealSchedule] = None,
    machine: str = "",
    progress=None,
) -> list[BenchRecord]:
    """Time both metrics over the size x fraction grid.

    Returns two records per cell (frustration first, then eigen) in grid
    order. ``progress`` is an optional callable fed one line per cell.
    """
    if schedule is None:
        schedule = AnnealSchedule()
    records: list[BenchRecord] = []
    for si, n in enumerate(sizes):
        topo_seed = _derive_seed(seed, si)
        for fj, fraction in enumerate(fractions):
            cfg = GenConfig(
                n_a=n // 2,
                n_b=n - n // 2,
                p_intra=default_edge_probability(n),
                p_inter=default_edge_probability(n),
                frustrated_fraction=fraction,
                seed=topo_seed,
            )
            g, _, _ = generate(cfg)
            anneal_seed = _derive_seed(seed, si, fj)

            t_fr, res = _median_time(lambda: frustration_anneal(g, schedule, seed=anneal_seed), reps)
            records.append(
                BenchRecord(n, fraction, METRIC_FRUSTRATION, t_fr, float(res.epsilon), anneal_seed, reps, machine)
            )

            t_ei, decomp = _median_time(lambda: eigen_decompose(g), reps)
            records.append(
                BenchRecord(n, fraction, METRIC_EIGEN, t_ei, float(decomp.lambda_min), anneal_seed, reps, machine)
            )
            if progress is not None:
                progress(
                    f"n={n} f={fraction:g}: anneal {t_fr:.3f}s (eps={res.epsilon}), "
                    f"eigen {t_ei:.4f}s (lambda={decomp.lambda_min:.4f})"
                )
    return records


def write_bench_csv(records: Sequence[BenchRecord], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(BENCH_CSV_COLUMNS)
        for rec in records:
            writer.writerow(rec.to_row())


def trend_summary(records: Sequence[BenchRecord]) -> dict:
    """Rank correlations the grid is expected to show.

    Returns per-size Spearman correlations of anneal time against
    fraction, the per-fraction correlation of anneal time against size,
    and the same statistics for the eigensolver (whose time should NOT
    track the fraction).
    """
    from scipy.stats import spearmanr

    by_metric: dict[str, list[BenchRecord]] = {METRIC_FRUSTRATION: [], METRIC_EIGEN: []}
    for rec in records:
        by_metric[rec.metric].append(rec)

    out: dict = {"anneal_fraction_spearman": {}, "eigen_fraction_spearman": {}, "anneal_size_spearman": {}}
    for metric, key in ((METRIC_FRUSTRATION, "anneal_fraction_spearman"), (METRIC_EIGEN, "eigen_fraction_spearman")):
        recs = by_metric[metric]
        for n in sorted({r.n_nodes for r in recs}):
            row = [r for r in recs if r.n_nodes == n]
            if len(row) >= 3:
                rho = spearmanr([r.frustrated_fraction for r in row], [r.wall_seconds for r in row]).statistic
                out[key][n] = float(rho)
    recs = by_metric[METRIC_FRUSTRATION]
    for f in sorted({r.frustrated_fraction for r in recs}):
        col = [r for r in recs if r.frustrated_fraction == f]
        if len(col) >= 3:
            rho = spearmanr([r.n_nodes for r in col], [r.wall_seconds for r in col]).statistic
            out["anneal_size_spearman"][f] = float(rho)
    return out


SWEEP_CSV_COLUMNS = [
    "name",
    "n",
    "m",
    "lambda_min",
    "algebraic_conflict",
    "epsilon",
    "normalized_frustration",
    "eigen_mean_abs",
    "eigen_std_abs",
    "frustrated_edges",
    "eigen_seconds",
    "anneal_seconds",
]


def congress_sweep(
    graph_dir,
    seed: int = 0,
    reps: int = 1,
    schedule: Optional[AnnealSchedule] = None,
) -> list[dict]:
    """Analyze and time every graph JSON in a directory.

    Rows are sorted by the number of frustrated edges under the
    eigenvector partition, most conflicted last. Raises
    :class:`MissingGraphError` when the directory does not exist and
    :class:`UnreadableFileError` when a file cannot be parsed; an empty
    directory yields an empty list (callers decide how loudly to fail).
    """
    if schedule is None:
        schedule = AnnealSchedule()
    if not os.path.isdir(graph_dir):
        raise MissingGraphError(f"graph directory {graph_dir!r} does not exist")
    rows: list[dict] = []
    names = sorted(f for f in os.listdir(graph_dir) if f.endswith(".json"))
    for i, name in enumerate(names):
        path = os.path.join(graph_dir, name)
        try:
            g = read_graph_json(path)
        except (json.JSONDecodeError, UnicodeDecodeError, OSError) as exc:
            raise UnreadableFileError(f"cannot parse graph file {path}: {exc}") from exc
        rows.append(_sweep_row(name, g, _derive_seed(seed, i), reps, schedule))
    rows.sort(key=lambda r: (r["frustrated_edges"], r["name"]))
    return rows


def _sweep_row(name: str, g: SignedGraph, seed: int, reps: int, schedule: AnnealSchedule) -> dict:
    t_ei, decomp = _median_time(lambda: eigen_decompose(g), reps)
    t_fr, res = _median_time(lambda: frustration_anneal(g, schedule, seed=seed), reps)
    score = algebraic_conflict(g)
    mean_abs, std_abs = eigenvector_stats(decomp)
    frustrated, _ = count_frustrated(g, partition_from_eigenvector(decomp))
    return {
        "name": name,
        "n": g.n_nodes,
        "m": g.n_edges,
        "lambda_min": score.lambda_min,
        "algebraic_conflict": score.algebraic_conflict_normalized,
        "epsilon": res.epsilon,
        "normalized_frustration": res.normalized,
        "eigen_mean_abs": mean_abs,
        "eigen_std_abs": std_abs,
        "frustrated_edges": frustrated,
        "eigen_seconds": t_ei,
        "anneal_seconds": t_fr,
    }


def write_sweep_csv(rows: Sequence[dict], path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SWEEP_CSV_COLUMNS)
        for row in rows:
            writer.writerow([row[c] for c in SWEEP_CSV_COLUMNS])
