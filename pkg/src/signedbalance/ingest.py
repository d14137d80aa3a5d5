"""Roll-call vote ingestion: from vote CSVs to a signed agreement network.

The pipeline has four stages:

1. ``parse_votes`` reads vote and membership CSVs into typed records,
   mapping raw cast codes onto {yea, nay, absent} (1-3 are yea variants,
   4-6 nay variants, 0 and 7-9 absences). Absences count as effective
   nays downstream: a member who does not help pass a measure acts, for
   agreement purposes, like one who voted against it.
2. ``per_vote_network`` turns one roll call into a complete signed graph
   (+1 same effective vote, -1 opposite), balanced by construction.
3. ``collapse_votes`` aggregates all roll calls into per-pair agreement
   and disagreement counts (one matrix product per quantity rather than a
   Python loop over pairs).
4. ``compute_thresholds`` + ``build_congress_graph`` reduce the counts to
   one signed edge per pair whose dominant relation clears a data-driven
   threshold, found where the within-party and cross-party agreement-rate
   densities cross.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence, Union

import numpy as np
from scipy.stats import gaussian_kde

from .errors import (
    DegenerateSampleError,
    SchemaError,
    TooFewVotersError,
    UnknownCastCodeError,
    UnmatchedMemberError,
)
from .graph import SignedGraph, build_graph, node_sort_key

MemberId = Union[int, str]

YEA_CODES = frozenset({1, 2, 3})
NAY_CODES = frozenset({4, 5, 6})
ABSENT_CODES = frozenset({0, 7, 8, 9})

DEFAULT_PARTY_NAMES = {100: "Democrat", 200: "Republican"}

RELATION_INTRA = "intra_party"
RELATION_INTER = "inter_party"

KDE_GRID_POINTS = 512

_trapz = getattr(np, "trapezoid", None) or np.trapz


@dataclass(frozen=True)
class RollCallRecord:
    """One member's position on one roll call."""

    congress: int
    chamber: str
    rollnumber: int
    member_id: MemberId
    cast: str  # "yea", "nay", or "absent"
    party: str


@dataclass(frozen=True)
class PairStats:
    """Agreement tallies for one member pair across shared roll calls."""

    e_plus: int
    e_minus: int
    p_plus: float
    p_minus: float
    relation: str


@dataclass(frozen=True)
class CollapsedVoteNetwork:
    """All pairwise agreement statistics for one congress and chamber.

    ``pair_stats`` keys are (u, v) with u ordered before v; pairs that
    never co-participated carry no entry.
    """

    members: tuple[MemberId, ...]
    parties: dict[MemberId, str]
    pair_stats: dict[tuple[MemberId, MemberId], PairStats]


@dataclass(frozen=True)
class ThresholdPair:
    """Data-driven cutoffs for positive and negative edges plus diagnostics."""

    positive_threshold: float
    negative_threshold: float
    diagnostics: dict

    def to_json_obj(self) -> dict:
        return {
            "positive_threshold": self.positive_threshold,
            "negative_threshold": self.negative_threshold,
            "diagnostics": self.diagnostics,
        }


def cast_from_code(code: int) -> str:
    """Map a raw cast code onto yea/nay/absent; raises on codes outside 0-9."""
    if code in YEA_CODES:
        return "yea"
    if code in NAY_CODES:
        return "nay"
    if code in ABSENT_CODES:
        return "absent"
    raise UnknownCastCodeError(f"cast code {code!r} is outside the documented 0-9 range")


def effective_vote(cast: str) -> str:
    """Collapse yea/nay/absent onto the two-sided effective position."""
    return "yea" if cast == "yea" else "nay"


def party_name(party_code: int, party_names: Optional[Mapping[int, str]] = None) -> str:
    names = DEFAULT_PARTY_NAMES if party_names is None else party_names
    return names.get(party_code, "Other")


def _open_maybe(path_or_stream, mode="r"):
    if hasattr(path_or_stream, "read"):
        return path_or_stream, False
    return open(path_or_stream, mode, encoding="utf-8", newline=""), True


def _require_columns(fieldnames, required, what: str) -> None:
    missing = [c for c in required if c not in (fieldnames or [])]
    if missing:
        raise SchemaError(f"{what} is missing column(s) {missing}; got {fieldnames}")


def parse_votes(
    votes_csv,
    members_csv,
    congress: Optional[int] = None,
    chamber: Optional[str] = None,
    party_names: Optional[Mapping[int, str]] = None,
) -> list[RollCallRecord]:
    """Read vote and membership CSVs into records, optionally filtered.

    ``votes_csv`` needs columns congress,chamber,rollnumber,icpsr,cast_code;
    ``members_csv`` needs congress,chamber,icpsr,bioname,party_code. Both
    accept a path or an open text stream. Chamber comparison ignores case.

    Raises :class:`SchemaError` on missing columns or duplicate
    (congress, chamber, rollnumber, member) rows,
    :class:`UnknownCastCodeError` on cast codes outside 0-9, and
    :class:`UnmatchedMemberError` when a vote's member is absent from the
    membership table.
    """
    want_chamber = chamber.strip().lower() if chamber else None

    members_fh, close_members = _open_maybe(members_csv)
    try:
        reader = csv.DictReader(members_fh)
        _require_columns(reader.fieldnames, ["congress", "chamber", "icpsr", "party_code"], "members CSV")
        parties: dict[tuple[int, str, int], str] = {}
        for row in reader:
            key = (int(row["congress"]), row["chamber"].strip().lower(), int(row["icpsr"]))
            parties[key] = party_name(int(row["party_code"]), party_names)
    finally:
        if close_members:
            members_fh.close()

    votes_fh, close_votes = _open_maybe(votes_csv)
    try:
        reader = csv.DictReader(votes_fh)
        _require_columns(reader.fieldnames, ["congress", "chamber", "rollnumber", "icpsr", "cast_code"], "votes CSV")
        records: list[RollCallRecord] = []
        seen: set[tuple[int, str, int, int]] = set()
        for row in reader:
            row_congress = int(row["congress"])
            row_chamber = row["chamber"].strip().lower()
            if congress is not None and row_congress != congress:
                continue
            if want_chamber is not None and row_chamber != want_chamber:
                continue
            icpsr = int(row["icpsr"])
            rollnumber = int(row["rollnumber"])
            key = (row_congress, row_chamber, rollnumber, icpsr)
            if key in seen:
                raise SchemaError(f"duplicate vote row for {key}")
            seen.add(key)
            member_key = (row_congress, row_chamber, icpsr)
            if member_key not in parties:
                raise UnmatchedMemberError(f"member {icpsr} not in membership table for {member_key[:2]}")
            records.append(
                RollCallRecord(
                    congress=row_congress,
                    chamber=row_chamber,
                    rollnumber=rollnumber,
                    member_id=icpsr,
                    cast=cast_from_code(int(row["cast_code"])),
                    party=parties[member_key],
                )
            )
        return records
    finally:
        if close_votes:
            votes_fh.close()


def per_vote_network(records: Sequence[RollCallRecord]) -> SignedGraph:
    """Complete signed graph of one roll call.

    All records must belong to a single roll call with at least two
    voters. Members with the same effective vote connect positively,
    opposite votes negatively; the graph is balanced by construction
    (the yea camp versus the rest).
    """
    rolls = {(r.congress, r.chamber, r.rollnumber) for r in records}
    if len(rolls) > 1:
        raise ValueError(f"records span {len(rolls)} roll calls; pass exactly one")
    if len(records) < 2:
        raise TooFewVotersError(f"a roll call network needs >= 2 voters, got {len(records)}")
    ordered = sorted(records, key=lambda r: node_sort_key(r.member_id))
    nodes = [(r.member_id, {"group": r.party}) for r in ordered]
    effective = {r.member_id: effective_vote(r.cast) for r in ordered}
    edges = []
    for i, a in enumerate(ordered):
        for b in ordered[i + 1:]:
            sign = 1 if effective[a.member_id] == effective[b.member_id] else -1
            edges.append((a.member_id, b.member_id, sign))
    return build_graph(nodes, edges)


def collapse_votes(records: Iterable[RollCallRecord]) -> CollapsedVoteNetwork:
    """Aggregate many roll calls into per-pair agreement counts.

    For members i and j: e_plus counts shared roll calls with equal
    effective votes, e_minus those with opposite ones, and p_plus/p_minus
    are the corresponding rates over co-participation. Computed with two
    matrix products: with Y the (roll x member) matrix of +-1 effective
    votes (0 where a member has no record), Y'Y gives agreements minus
    disagreements and |Y|'|Y| gives co-participation.
    """
    records = list(records)
    members = sorted({r.member_id for r in records}, key=node_sort_key)
    parties = {}
    for r in records:
        parties[r.member_id] = r.party
    rolls = sorted({(r.congress, r.chamber, r.rollnumber) for r in records})
    member_index = {m: i for i, m in enumerate(members)}
    roll_index = {key: i for i, key in enumerate(rolls)}

    y = np.zeros((len(rolls), len(members)), dtype=np.float64)
    for r in records:
        value = 1.0 if effective_vote(r.cast) == "yea" else -1.0
        y[roll_index[(r.congress, r.chamber, r.rollnumber)], member_index[r.member_id]] = value

    s = y.T @ y
    p = np.abs(y).T @ np.abs(y)
    e_plus = np.rint((p + s) / 2.0).astype(np.int64)
    e_minus = np.rint((p - s) / 2.0).astype(np.int64)

    pair_stats: dict[tuple[MemberId, MemberId], PairStats] = {}
    for i, u in enumerate(members):
        for j in range(i + 1, len(members)):
            v = members[j]
            total = e_plus[i, j] + e_minus[i, j]
            if total == 0:
                continue
            relation = RELATION_INTRA if parties[u] == parties[v] else RELATION_INTER
            pair_stats[(u, v)] = PairStats(
                e_plus=int(e_plus[i, j]),
                e_minus=int(e_minus[i, j]),
                p_plus=float(e_plus[i, j] / total),
                p_minus=float(e_minus[i, j] / total),
                relation=relation,
            )
    return CollapsedVoteNetwork(tuple(members), parties, pair_stats)


def _fit_kde(samples: np.ndarray, what: str) -> gaussian_kde:
    if len(samples) == 0:
        raise DegenerateSampleError(f"{what}: empty sample set")
    if np.ptp(samples) == 0.0:
        raise DegenerateSampleError(f"{what}: zero-variance sample set (all values {samples[0]})")
    return gaussian_kde(samples, bw_method="silverman")


def _bandwidth(kde: gaussian_kde) -> float:
    return float(np.sqrt(kde.covariance[0, 0]))


def kde_threshold(samples_a, samples_b) -> tuple[float, dict]:
    """Density-crossing cutoff between two rate distributions on [0, 1].

    Fits a Gaussian KDE (Silverman bandwidth) to each sample set,
    evaluates both on a 512-point grid, and returns the crossing of the
    two densities that lies strictly between the sample means, choosing
    the crossing closest to the midpoint when there are several (crossing
    position refined by linear interpolation between grid points). When no
    crossing lies between the means, the midpoint of the means is returned
    and the diagnostics carry ``fallback=True``.

    Raises :class:`DegenerateSampleError` for empty or constant samples
    and for equal means (no "between" exists), and ``ValueError`` for
    values outside [0, 1].
    """
    a = np.asarray(samples_a, dtype=np.float64)
    b = np.asarray(samples_b, dtype=np.float64)
    for name, arr in (("samples_a", a), ("samples_b", b)):
        if arr.size and (arr.min() < 0.0 or arr.max() > 1.0):
            raise ValueError(f"{name} must lie in [0, 1]")
    kde_a = _fit_kde(a, "samples_a")
    kde_b = _fit_kde(b, "samples_b")
    mean_a, mean_b = float(a.mean()), float(b.mean())
    if mean_a == mean_b:
        raise DegenerateSampleError("sample means coincide; no threshold lies between them")
    lo, hi = min(mean_a, mean_b), max(mean_a, mean_b)
    mid = (lo + hi) / 2.0

    grid = np.linspace(0.0, 1.0, KDE_GRID_POINTS)
    diff = kde_a(grid) - kde_b(grid)
    crossings: list[float] = []
    for i in range(len(grid) - 1):
        d0, d1 = diff[i], diff[i + 1]
        if d0 == 0.0:
            crossings.append(float(grid[i]))
        elif d0 * d1 < 0.0:
            # Linear interpolation of the sign change inside the cell.
            crossings.append(float(grid[i] - d0 * (grid[i + 1] - grid[i]) / (d1 - d0)))
    if diff[-1] == 0.0:
        crossings.append(float(grid[-1]))
    between = [c for c in crossings if lo < c < hi]

    diagnostics = {
        "n_crossings": len(between),
        "bandwidth_a": _bandwidth(kde_a),
        "bandwidth_b": _bandwidth(kde_b),
        "fallback": False,
    }
    if not between:
        diagnostics["fallback"] = True
        return mid, diagnostics
    threshold = min(between, key=lambda c: (abs(c - mid), c))
    return threshold, diagnostics


def homophily_overlap(samples_intra, samples_inter) -> float:
    """Overlapping coefficient of two KDE densities on [0, 1].

    1 means the distributions are indistinguishable, 0 means disjoint
    (strong homophily when applied to within- versus cross-group
    agreement rates). Raises :class:`DegenerateSampleError` for empty or
    constant samples.
    """
    a = np.asarray(samples_intra, dtype=np.float64)
    b = np.asarray(samples_inter, dtype=np.float64)
    kde_a = _fit_kde(a, "samples_intra")
    kde_b = _fit_kde(b, "samples_inter")
    grid = np.linspace(0.0, 1.0, KDE_GRID_POINTS)
    return float(_trapz(np.minimum(kde_a(grid), kde_b(grid)), grid))


def agreement_samples(c: CollapsedVoteNetwork) -> dict[str, np.ndarray]:
    """p_plus and p_minus sample vectors split by pair relation."""
    out = {
        "p_plus_intra": [],
        "p_plus_inter": [],
        "p_minus_intra": [],
        "p_minus_inter": [],
    }
    for stats in c.pair_stats.values():
        suffix = "intra" if stats.relation == RELATION_INTRA else "inter"
        out[f"p_plus_{suffix}"].append(stats.p_plus)
        out[f"p_minus_{suffix}"].append(stats.p_minus)
    return {k: np.asarray(v, dtype=np.float64) for k, v in out.items()}


def compute_thresholds(c: CollapsedVoteNetwork) -> ThresholdPair:
    """Positive and negative edge cutoffs from the collapsed network.

    The positive threshold is the crossing of within-party and cross-party
    p_plus densities; the negative threshold likewise for p_minus. Both
    lie strictly between the respective sample means.
    """
    samples = agreement_samples(c)
    pos, diag_pos = kde_threshold(samples["p_plus_intra"], samples["p_plus_inter"])
    neg, diag_neg = kde_threshold(samples["p_minus_intra"], samples["p_minus_inter"])
    diagnostics = {
        "n_crossings_pos": diag_pos["n_crossings"],
        "n_crossings_neg": diag_neg["n_crossings"],
        "fallback_pos": diag_pos["fallback"],
        "fallback_neg": diag_neg["fallback"],
        "bandwidths": {
            "positive_intra": diag_pos["bandwidth_a"],
            "positive_inter": diag_pos["bandwidth_b"],
            "negative_intra": diag_neg["bandwidth_a"],
            "negative_inter": diag_neg["bandwidth_b"],
        },
    }
    return ThresholdPair(float(pos), float(neg), diagnostics)


def build_congress_graph(c: CollapsedVoteNetwork, thresholds: ThresholdPair) -> SignedGraph:
    """One signed edge per pair whose dominant relation clears its cutoff.

    A pair with p_plus > p_minus gets a +1 edge if p_plus >= the positive
    threshold; a pair with p_minus > p_plus gets a -1 edge if p_minus >=
    the negative threshold; exact ties count as agreement. Pairs clearing
    neither cutoff stay unconnected.
    """
    nodes = [(m, {"group": c.parties[m]}) for m in c.members]
    edges = []
    for (u, v), stats in c.pair_stats.items():
        if stats.p_plus >= stats.p_minus:
            if stats.p_plus >= thresholds.positive_threshold:
                edges.append((u, v, 1))
        else:
            if stats.p_minus >= thresholds.negative_threshold:
                edges.append((u, v, -1))
    return build_graph(nodes, edges)


def ingest_to_graph(
    votes_csv,
    members_csv,
    congress: int,
    chamber: str,
    party_names: Optional[Mapping[int, str]] = None,
) -> tuple[CollapsedVoteNetwork, ThresholdPair, SignedGraph]:
    """End-to-end convenience: CSVs in, signed congress graph out."""
    records = parse_votes(votes_csv, members_csv, congress=congress, chamber=chamber, party_names=party_names)
    collapsed = collapse_votes(records)
    thresholds = compute_thresholds(collapsed)
    return collapsed, thresholds, build_congress_graph(collapsed, thresholds)


def write_collapsed_csv(c: CollapsedVoteNetwork, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["u", "v", "e_plus", "e_minus", "p_plus", "p_minus", "relation"])
        for (u, v), stats in c.pair_stats.items():
            writer.writerow([u, v, stats.e_plus, stats.e_minus, stats.p_plus, stats.p_minus, stats.relation])
