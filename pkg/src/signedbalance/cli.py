"""Command line interface.

Subcommands:

- ``analyze``: full balance report (JSON) for one graph file.
- ``layout``: eigenvector layout of a graph as SVG or JSON.
- ``ingest``: roll-call CSVs -> collapsed counts, thresholds, graph.
- ``synth``: generate a random signed network with planted structure.
- ``bench grid`` / ``bench sweep``: timing harness.
- ``pipeline``: ingest + analyze + render for a range of congresses.

Exit codes: 0 success, 2 input or usage errors, 3 computational failures
(solver did not converge, generation failed, degenerate statistics).
All diagnostics go to stderr; results go to stdout or to files.

``BALANCER_THREADS`` caps pipeline parallelism (0 or unset = one worker
per CPU).
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence

from . import __version__
from .bench import congress_sweep, run_grid, write_bench_csv, write_sweep_csv
from .errors import (
    DanglingEndpointError,
    DuplicateEdgeError,
    DuplicateNodeError,
    MissingGraphError,
    SchemaError,
    SelfLoopError,
    SignedBalanceError,
    UnknownCastCodeError,
    UnmatchedMemberError,
    UnreadableFileError,
)
from .frustration import AnnealSchedule, _derive_seed, compute_frustration
from .generator import GenConfig, default_edge_probability, generate, write_planted_sidecar
from .graph import SignedGraph, count_frustrated, read_graph_auto, write_graph_json
from .ingest import (
    agreement_samples,
    build_congress_graph,
    collapse_votes,
    compute_thresholds,
    homophily_overlap,
    parse_votes,
    write_collapsed_csv,
)
from .layout import classify_edges, compute_layout, render_svg
from .spectral import eigen_decompose, eigenvector_stats, partition_from_eigenvector

log = logging.getLogger("signedbalance")

#: Errors that mean the input was wrong, not that the computation failed.
INPUT_ERRORS = (
    FileNotFoundError,
    IsADirectoryError,
    NotADirectoryError,
    PermissionError,
    json.JSONDecodeError,
    SchemaError,
    UnknownCastCodeError,
    UnmatchedMemberError,
    MissingGraphError,
    UnreadableFileError,
    DuplicateNodeError,
    DuplicateEdgeError,
    SelfLoopError,
    DanglingEndpointError,
    ValueError,
)


def parse_int_range(text: str) -> list[int]:
    """Accept ``100``, ``100,200,300``, or ``100..1000:100`` (inclusive)."""
    text = text.strip()
    if ".." in text:
        span, _, step_text = text.partition(":")
        start_text, _, stop_text = span.partition("..")
        start, stop = int(start_text), int(stop_text)
        step = int(step_text) if step_text else 1
        if step <= 0 or stop < start:
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        return list(range(start, stop + 1, step))
    return [int(part) for part in text.split(",") if part.strip()]


def parse_float_range(text: str) -> list[float]:
    """Accept ``0.5``, ``0.1,0.5,0.9``, or ``0.1..0.9:0.1`` (inclusive)."""
    text = text.strip()
    if ".." in text:
        span, _, step_text = text.partition(":")
        start_text, _, stop_text = span.partition("..")
        start, stop = float(start_text), float(stop_text)
        step = float(step_text) if step_text else 0.1
        if step <= 0 or stop < start:
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        values = []
        k = 0
        while True:
            v = round(start + k * step, 10)
            if v > stop + step / 2:
                break
            values.append(v)
            k += 1
        return values
    return [float(part) for part in text.split(",") if part.strip()]


def _schedule_from_args(args) -> AnnealSchedule:
    return AnnealSchedule(
        t0=args.t0,
        cooling=args.cooling,
        iters_per_level=args.iters_per_level,
        restarts=args.restarts,
    )


def _add_schedule_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--restarts", type=int, default=5, help="independent annealing restarts (default 5)")
    p.add_argument("--t0", type=float, default=5.0, help="initial temperature (default 5.0)")
    p.add_argument("--cooling", type=float, default=0.99, help="geometric cooling factor (default 0.99)")
    p.add_argument(
        "--iters-per-level", type=int, default=None, help="proposals per temperature level (default 50 per node)"
    )


def build_report(
    g: SignedGraph,
    method: str = "auto",
    schedule: Optional[AnnealSchedule] = None,
    seed: int = 0,
    homophily: Optional[float] = None,
) -> dict:
    """Assemble the analysis report dict all commands share."""
    spec = eigen_decompose(g)
    from .spectral import balance_score_from

    score = balance_score_from(g, spec)
    fr = compute_frustration(g, method=method, schedule=schedule, seed=seed)
    mean_abs, std_abs = eigenvector_stats(spec)
    classes = classify_edges(g, partition_from_eigenvector(spec))
    counts = {"positive": 0, "negative": 0, "non_frustrated": 0}
    for cls in classes.values():
        if cls == "frustrated_positive":
            counts["positive"] += 1
        elif cls == "frustrated_negative":
            counts["negative"] += 1
        else:
            counts["non_frustrated"] += 1
    return {
        "n_nodes": g.n_nodes,
        "n_edges": g.n_edges,
        "balance": score.to_json_obj(),
        "frustration": fr.to_json_obj(),
        "eigen_stats": {"mean_abs": mean_abs, "std_abs": std_abs},
        "frustrated_edge_counts": counts,
        "homophily_overlap": homophily,
    }


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    g = read_graph_auto(args.graph)
    report = build_report(g, method=args.method, schedule=_schedule_from_args(args), seed=args.seed)
    _emit(json.dumps(report, indent=2) + "\n", args.out)
    return 0


def cmd_layout(args) -> int:
    g = read_graph_auto(args.graph)
    layout = compute_layout(g, eigen_decompose(g))
    if args.format == "svg":
        _emit(render_svg(layout), args.out)
    else:
        _emit(json.dumps(layout.to_json_obj(), indent=2) + "\n", args.out)
    return 0


def cmd_ingest(args) -> int:
    records = parse_votes(args.votes, args.members, congress=args.congress, chamber=args.chamber)
    if not records:
        log.warning("no votes matched congress=%s chamber=%s", args.congress, args.chamber)
        return 3
    collapsed = collapse_votes(records)
    thresholds = compute_thresholds(collapsed)
    g = build_congress_graph(collapsed, thresholds)
    os.makedirs(args.out, exist_ok=True)
    write_collapsed_csv(collapsed, os.path.join(args.out, "collapsed.csv"))
    with open(os.path.join(args.out, "thresholds.json"), "w", encoding="utf-8") as fh:
        json.dump(thresholds.to_json_obj(), fh, indent=2)
        fh.write("\n")
    write_graph_json(g, os.path.join(args.out, "graph.json"))
    log.info(
        "congress %s %s: %d members, %d pairs, %d edges",
        args.congress, args.chamber, len(collapsed.members), len(collapsed.pair_stats), g.n_edges,
    )
    return 0


def cmd_synth(args) -> int:
    n = args.na + args.nb
    p_default = default_edge_probability(n)
    cfg = GenConfig(
        n_a=args.na,
        n_b=args.nb,
        p_intra=args.p_intra if args.p_intra is not None else p_default,
        p_inter=args.p_inter if args.p_inter is not None else p_default,
        frustrated_fraction=args.frustrated,
        seed=args.seed,
        split=args.split,
    )
    g, planted, flipped = generate(cfg)
    write_graph_json(g, args.out)
    base, _ = os.path.splitext(args.out)
    sidecar = base + ".planted.json"
    write_planted_sidecar(sidecar, planted, flipped)
    log.info("wrote %s (%d nodes, %d edges, %d flipped) and %s", args.out, g.n_nodes, g.n_edges, len(flipped), sidecar)
    return 0


def cmd_bench_grid(args) -> int:
    records = run_grid(
        args.sizes,
        args.fractions,
        reps=args.reps,
        seed=args.seed,
        machine=args.machine,
        progress=log.info,
    )
    write_bench_csv(records, args.out)
    log.info("wrote %d records to %s", len(records), args.out)
    return 0


def cmd_bench_sweep(args) -> int:
    rows = congress_sweep(args.graphs, seed=args.seed, reps=args.reps)
    write_sweep_csv(rows, args.out)
    if not rows:
        log.warning("no graph files found in %s", args.graphs)
        return 3
    log.info("wrote %d rows to %s", len(rows), args.out)
    return 0


SUMMARY_COLUMNS = [
    "congress",
    "chamber",
    "n_members",
    "n_edges",
    "lambda_min",
    "algebraic_conflict",
    "epsilon",
    "normalized_frustration",
    "eigen_mean_abs",
    "eigen_std_abs",
    "frustrated_positive",
    "frustrated_negative",
    "homophily_overlap",
    "positive_threshold",
    "negative_threshold",
]


def _pipeline_one(args, congress: int, records: list) -> dict:
    collapsed = collapse_votes(records)
    thresholds = compute_thresholds(collapsed)
    g = build_congress_graph(collapsed, thresholds)
    samples = agreement_samples(collapsed)
    overlap = homophily_overlap(samples["p_plus_intra"], samples["p_plus_inter"])
    report = build_report(
        g,
        method="auto",
        schedule=_schedule_from_args(args),
        seed=_derive_seed(args.seed, congress),
        homophily=overlap,
    )
    layout = compute_layout(g, eigen_decompose(g))

    prefix = os.path.join(args.out, f"congress_{congress:03d}_{args.chamber}")
    write_collapsed_csv(collapsed, prefix + "_collapsed.csv")
    with open(prefix + "_thresholds.json", "w", encoding="utf-8") as fh:
        json.dump(thresholds.to_json_obj(), fh, indent=2)
        fh.write("\n")
    write_graph_json(g, prefix + "_graph.json")
    with open(prefix + "_report.json", "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")
    with open(prefix + "_layout.svg", "w", encoding="utf-8") as fh:
        fh.write(render_svg(layout))

    return {
        "congress": congress,
        "chamber": args.chamber,
        "n_members": g.n_nodes,
        "n_edges": g.n_edges,
        "lambda_min": report["balance"]["lambda_min"],
        "algebraic_conflict": report["balance"]["algebraic_conflict"],
        "epsilon": report["frustration"]["epsilon"],
        "normalized_frustration": report["frustration"]["normalized"],
        "eigen_mean_abs": report["eigen_stats"]["mean_abs"],
        "eigen_std_abs": report["eigen_stats"]["std_abs"],
        "frustrated_positive": report["frustrated_edge_counts"]["positive"],
        "frustrated_negative": report["frustrated_edge_counts"]["negative"],
        "homophily_overlap": overlap,
        "positive_threshold": thresholds.positive_threshold,
        "negative_threshold": thresholds.negative_threshold,
    }


def cmd_pipeline(args) -> int:
    all_records = parse_votes(args.votes, args.members, congress=None, chamber=args.chamber)
    by_congress: dict[int, list] = {}
    for r in all_records:
        by_congress.setdefault(r.congress, []).append(r)

    os.makedirs(args.out, exist_ok=True)
    congresses = args.congresses
    failed: list[int] = []
    rows: dict[int, dict] = {}

    def work(c: int):
        records = by_congress.get(c, [])
        if not records:
            log.warning("congress %d %s: no matching votes, skipping", c, args.chamber)
            return c, None
        try:
            return c, _pipeline_one(args, c, records)
        except SignedBalanceError as exc:
            log.error("congress %d %s failed: %s", c, args.chamber, exc)
            return c, None

    threads = 0
    raw = os.environ.get("BALANCER_THREADS", "0")
    try:
        threads = int(raw)
    except ValueError:
        log.warning("BALANCER_THREADS=%r is not an integer, using auto", raw)
    if threads <= 0:
        threads = min(len(congresses), os.cpu_count() or 1) or 1

    if threads > 1 and len(congresses) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, congresses))
    else:
        results = [work(c) for c in congresses]

    for c, row in results:
        if row is None:
            failed.append(c)
        else:
            rows[c] = row

    summary_path = os.path.join(args.out, "summary.csv")
    with open(summary_path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(SUMMARY_COLUMNS)
        for c in sorted(rows):
            writer.writerow([rows[c][col] for col in SUMMARY_COLUMNS])
    log.info("wrote %s with %d row(s); %d congress(es) failed", summary_path, len(rows), len(failed))
    return 3 if failed or not rows else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="base seed for all randomized steps (default 0)")
    common.add_argument("--quiet", action="store_true", help="suppress progress output on stderr")

    parser = argparse.ArgumentParser(
        prog="signedbalance",
        description="Structural balance of signed networks: metrics, layouts, vote ingestion, benchmarks.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="balance report (JSON) for a graph file")
    p.add_argument("graph", help="graph .json or edge .csv file")
    p.add_argument(
        "--method",
        choices=["auto", "exact", "anneal"],
        default="auto",
        help="frustration solver; auto enumerates exactly up to 20 nodes",
    )
    _add_schedule_flags(p)
    p.add_argument("--out", default=None, help="write the report here instead of stdout")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("layout", parents=[common], help="eigenvector layout as SVG or JSON")
    p.add_argument("graph", help="graph .json or edge .csv file")
    p.add_argument("--format", choices=["svg", "json"], default="svg")
    p.add_argument("--out", default=None, help="write here instead of stdout")
    p.set_defaults(func=cmd_layout)

    p = sub.add_parser("ingest", parents=[common], help="roll-call CSVs to a signed congress graph")
    p.add_argument("--votes", required=True, help="votes CSV (congress,chamber,rollnumber,icpsr,cast_code)")
    p.add_argument("--members", required=True, help="members CSV (congress,chamber,icpsr,bioname,party_code)")
    p.add_argument("--congress", type=int, required=True)
    p.add_argument("--chamber", choices=["house", "senate"], required=True)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("synth", parents=[common], help="generate a random signed network")
    p.add_argument("--na", type=int, required=True, help="nodes in block A")
    p.add_argument("--nb", type=int, required=True, help="nodes in block B")
    p.add_argument("--p-intra", type=float, default=None, help="within-block edge probability (default 10/(n-1))")
    p.add_argument("--p-inter", type=float, default=None, help="cross-block edge probability (default 10/(n-1))")
    p.add_argument("--frustrated", type=float, default=0.0, help="fraction of edges to sign-flip (default 0)")
    p.add_argument("--split", type=float, default=None, help="fraction of flips drawn from the cross pool")
    p.add_argument("--out", required=True, help="output graph JSON (sidecar written next to it)")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("bench", help="timing harness")
    bench_sub = p.add_subparsers(dest="bench_command", required=True)

    pg = bench_sub.add_parser("grid", parents=[common], help="size x fraction timing grid")
    pg.add_argument("--sizes", type=parse_int_range, required=True, help="e.g. 100..1000:100 or 100,200")
    pg.add_argument("--fractions", type=parse_float_range, required=True, help="e.g. 0.1..0.9:0.1")
    pg.add_argument("--reps", type=int, default=5, help="timed repetitions per cell (median kept, default 5)")
    pg.add_argument("--machine", default="", help="free-text machine tag recorded in the CSV")
    pg.add_argument("--out", required=True, help="output CSV")
    pg.set_defaults(func=cmd_bench_grid)

    ps = bench_sub.add_parser("sweep", parents=[common], help="analyze every graph JSON in a directory")
    ps.add_argument("--graphs", required=True, help="directory of graph .json files")
    ps.add_argument("--reps", type=int, default=1, help="timed repetitions per graph (default 1)")
    ps.add_argument("--out", required=True, help="output CSV")
    ps.set_defaults(func=cmd_bench_sweep)

    p = sub.add_parser("pipeline", parents=[common], help="ingest + analyze + render a range of congresses")
    p.add_argument("--votes", required=True)
    p.add_argument("--members", required=True)
    p.add_argument("--congresses", type=parse_int_range, required=True, help="e.g. 82..108 or 93,94")
    p.add_argument("--chamber", choices=["house", "senate"], required=True)
    p.add_argument("--out", required=True, help="output directory")
    _add_schedule_flags(p)
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(levelname)s %(message)s",
    )
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        log.error("%s", exc)
        return 2
    except SignedBalanceError as exc:
        log.error("%s", exc)
        return 3


if __name__ == "__main__":
    sys.exit(main())
