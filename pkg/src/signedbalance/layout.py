"""Deterministic balance-aligned layout and SVG rendering.

Nodes are placed by the minimal eigenvector of the signed Laplacian: the
x coordinate is each node's eigenvector entry, so the two camps separate
horizontally and straddlers sit near zero. The x range splits into 40
equal buckets; nodes in one bucket stack vertically in id order, one unit
apart. The result is fully determined by the graph alone (no randomness),
so renders are byte-identical across runs.

Edges are classified against the eigenvector's sign partition:
``non_frustrated`` (gray), ``frustrated_positive`` (a positive edge
between camps, blue), ``frustrated_negative`` (a negative edge inside a
camp, red).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .errors import MismatchedResultError, UnknownGroupColorError
from .graph import NodeId, SignedEdge, SignedGraph, node_sort_key
from .spectral import (
    BalanceScore,
    SpectralResult,
    balance_score_from,
    partition_from_eigenvector,
)

EDGE_CLASS_NON_FRUSTRATED = "non_frustrated"
EDGE_CLASS_FRUSTRATED_POSITIVE = "frustrated_positive"
EDGE_CLASS_FRUSTRATED_NEGATIVE = "frustrated_negative"

DEFAULT_EDGE_COLORS = {
    EDGE_CLASS_NON_FRUSTRATED: "gray",
    EDGE_CLASS_FRUSTRATED_POSITIVE: "blue",
    EDGE_CLASS_FRUSTRATED_NEGATIVE: "red",
}

DEFAULT_GROUP_COLORS = {
    "Democrat": "#2166ac",
    "Republican": "#b2182b",
    "Other": "#7f7f7f",
    "": "#555555",
}


@dataclass(frozen=True)
class StyleOptions:
    """Rendering knobs; everything has a usable default.

    ``group_colors`` maps node group names to fill colors. Groups missing
    from the map fall back to ``default_node_color``; set that to None to
    make unknown groups a hard error instead.
    """

    width: int = 1200
    height: int = 800
    margin_frac: float = 0.05
    group_colors: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_GROUP_COLORS))
    default_node_color: Optional[str] = "#555555"
    edge_colors: Mapping[str, str] = field(default_factory=lambda: dict(DEFAULT_EDGE_COLORS))
    node_radius: Optional[float] = None
    caption: bool = True


@dataclass(frozen=True)
class LayoutResult:
    """Node coordinates plus per-edge classes and the balance annotation."""

    coords: dict[NodeId, tuple[float, float]]
    edge_classes: dict[SignedEdge, str]
    balance: BalanceScore
    groups: dict[NodeId, str]

    def to_json_obj(self) -> dict:
        return {
            "nodes": [
                {"id": u, "x": xy[0], "y": xy[1], "group": self.groups[u]}
                for u, xy in self.coords.items()
            ],
            "edges": [
                {"u": e.u, "v": e.v, "sign": e.sign, "class": cls}
                for e, cls in self.edge_classes.items()
            ],
            "balance": self.balance.to_json_obj(),
        }


def classify_edges(g: SignedGraph, partition: Mapping[NodeId, int]) -> dict[SignedEdge, str]:
    """Assign each edge a frustration class under a two-side partition."""
    classes: dict[SignedEdge, str] = {}
    for e in g.edges:
        same_side = partition[e.u] == partition[e.v]
        if e.sign > 0:
            classes[e] = EDGE_CLASS_NON_FRUSTRATED if same_side else EDGE_CLASS_FRUSTRATED_POSITIVE
        else:
            classes[e] = EDGE_CLASS_FRUSTRATED_NEGATIVE if same_side else EDGE_CLASS_NON_FRUSTRATED
    return classes


def _degenerate_balance(g: SignedGraph, r: SpectralResult) -> BalanceScore:
    # Edgeless graphs cannot be normalized but still deserve a layout;
    # they are trivially balanced.
    return BalanceScore(r.lambda_min, 1.0, 0.0, True)


def compute_layout(g: SignedGraph, r: SpectralResult, buckets: int = 40) -> LayoutResult:
    """Bucketed eigenvector layout.

    ``r`` must decompose this graph's node set, otherwise
    :class:`MismatchedResultError` is raised. x is the raw eigenvector
    entry; y stacks same-bucket nodes (sorted by id) one unit apart.
    """
    if set(r.nodes) != set(g.nodes) or len(r.nodes) != g.n_nodes:
        raise MismatchedResultError("spectral result does not match the graph's node set")

    values = r.node_values
    xs = [values[u] for u in g.nodes]
    x_min, x_max = min(xs), max(xs)
    # spans at rounding-noise scale would scatter mathematically equal
    # entries across buckets, so collapse them to a single stack
    span = x_max - x_min if x_max - x_min > 1e-12 else 0.0
    delta = span / buckets

    def bucket_of(x: float) -> int:
        if delta == 0:
            return 0
        return min(int((x - x_min) / delta), buckets - 1)

    by_bucket: dict[int, list[NodeId]] = {}
    for u in g.nodes:
        by_bucket.setdefault(bucket_of(values[u]), []).append(u)

    coords: dict[NodeId, tuple[float, float]] = {}
    for b in sorted(by_bucket):
        for rank, u in enumerate(sorted(by_bucket[b], key=node_sort_key)):
            coords[u] = (values[u], float(rank))
    coords = {u: coords[u] for u in g.nodes}

    partition = partition_from_eigenvector(r)
    balance = balance_score_from(g, r) if g.n_edges > 0 else _degenerate_balance(g, r)
    groups = {u: g.group(u) for u in g.nodes}
    return LayoutResult(coords, classify_edges(g, partition), balance, groups)


def _fmt(v: float) -> str:
    return f"{v:.4f}"


def render_svg(layout: LayoutResult, style: Optional[StyleOptions] = None) -> str:
    """Render a layout to a standalone SVG string.

    Output is byte-identical for identical inputs: fixed float formatting,
    stable element order (edges first in graph order, then nodes in
    canonical order). Raises :class:`UnknownGroupColorError` when a node's
    group has no color and no default is configured.
    """
    if style is None:
        style = StyleOptions()

    n = len(layout.coords)
    xs = [xy[0] for xy in layout.coords.values()]
    ys = [xy[1] for xy in layout.coords.values()]
    x_min, x_max = (min(xs), max(xs)) if xs else (0.0, 1.0)
    y_min, y_max = (min(ys), max(ys)) if ys else (0.0, 1.0)

    margin_x = style.width * style.margin_frac
    margin_y = style.height * style.margin_frac

    def scale(lo: float, hi: float, out_lo: float, out_hi: float):
        span = hi - lo
        if span == 0:
            mid = (out_lo + out_hi) / 2.0
            return lambda v: mid
        k = (out_hi - out_lo) / span
        return lambda v: out_lo + (v - lo) * k

    sx = scale(x_min, x_max, margin_x, style.width - margin_x)
    # SVG y grows downward; flip so larger stack positions render higher.
    sy = scale(y_min, y_max, style.height - margin_y, margin_y)

    radius = style.node_radius if style.node_radius is not None else max(3.0, 60.0 / max(n, 1) ** 0.5)

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{style.width}" height="{style.height}" '
        f'viewBox="0 0 {style.width} {style.height}">'
    )
    parts.append(f'<rect width="{style.width}" height="{style.height}" fill="white"/>')

    # Vertical reference line at eigenvector value zero, when in range.
    if x_min <= 0.0 <= x_max and x_max > x_min:
        zero_x = _fmt(sx(0.0))
        parts.append(
            f'<line class="axis" x1="{zero_x}" y1="{_fmt(margin_y)}" x2="{zero_x}" '
            f'y2="{_fmt(style.height - margin_y)}" stroke="#cccccc" stroke-dasharray="4 4"/>'
        )

    for e, cls in layout.edge_classes.items():
        color = style.edge_colors.get(cls, DEFAULT_EDGE_COLORS[cls])
        x1, y1 = layout.coords[e.u]
        x2, y2 = layout.coords[e.v]
        parts.append(
            f'<line class="edge {cls}" x1="{_fmt(sx(x1))}" y1="{_fmt(sy(y1))}" '
            f'x2="{_fmt(sx(x2))}" y2="{_fmt(sy(y2))}" stroke="{color}" stroke-width="1.5"/>'
        )

    for u, (x, y) in layout.coords.items():
        group = layout.groups[u]
        color = style.group_colors.get(group)
        if color is None:
            color = style.default_node_color
            if color is None:
                raise UnknownGroupColorError(f"no color for group {group!r} and no default set")
        parts.append(
            f'<circle class="node" cx="{_fmt(sx(x))}" cy="{_fmt(sy(y))}" r="{_fmt(radius)}" '
            f'fill="{color}" stroke="black" stroke-width="0.5"/>'
        )

    if style.caption:
        b = layout.balance
        text = (
            f"conflict score = {b.algebraic_conflict_normalized:.4f}, "
            f"lambda_min = {b.lambda_min:.6f}, "
            f"balanced = {'yes' if b.is_balanced else 'no'}"
        )
        parts.append(
            f'<text class="caption" x="{_fmt(margin_x)}" y="{_fmt(style.height - margin_y / 2.0)}" '
            f'font-family="sans-serif" font-size="16">{text}</text>'
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_layout_json(layout: LayoutResult, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(layout.to_json_obj(), fh, indent=2)
        fh.write("\n")
