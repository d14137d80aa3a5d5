"""Signed graph data structures, construction, and file formats.

A signed graph here is simple and undirected: at most one edge per node
pair, no self loops, each edge carrying a sign in {+1, -1} and a positive
weight. Weights ride along through serialization but the balance metrics
in this package are unweighted (they count edges).

Node ids may be ints or strings. Matrix views (adjacency, Laplacian) index
nodes in insertion order, which is the canonical order everywhere.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from .errors import (
    DanglingEndpointError,
    DuplicateEdgeError,
    DuplicateNodeError,
    EmptyGraphError,
    PartialPartitionError,
    SchemaError,
    SelfLoopError,
)

NodeId = Union[int, str]


def node_sort_key(node: NodeId):
    """Deterministic ordering for mixed int/str node ids (ints first)."""
    if isinstance(node, str):
        return (1, node, 0)
    return (0, "", node)


@dataclass(frozen=True)
class SignedEdge:
    """One undirected signed edge; ``weight`` must be positive."""

    u: NodeId
    v: NodeId
    sign: int
    weight: float = 1.0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"edge ({self.u}, {self.v}): sign must be +1 or -1, got {self.sign!r}")
        if not self.weight > 0:
            raise ValueError(f"edge ({self.u}, {self.v}): weight must be positive, got {self.weight!r}")

    def pair(self) -> tuple[NodeId, NodeId]:
        """The unordered endpoint pair in canonical (sorted) order."""
        a, b = sorted((self.u, self.v), key=node_sort_key)
        return (a, b)


class SignedGraph:
    """Immutable simple undirected signed graph.

    Build instances through :func:`build_graph`, which validates input.
    """

    def __init__(self, nodes: Sequence[NodeId], node_attrs: Mapping[NodeId, dict], edges: Sequence[SignedEdge]):
        self._nodes: tuple[NodeId, ...] = tuple(nodes)
        self._attrs: dict[NodeId, dict] = {u: dict(node_attrs.get(u, {})) for u in self._nodes}
        for a in self._attrs.values():
            a.setdefault("label", "")
            a.setdefault("group", "")
        self._edges: tuple[SignedEdge, ...] = tuple(edges)
        self._index: dict[NodeId, int] = {u: i for i, u in enumerate(self._nodes)}

    # basic accessors ---------------------------------------------------

    @property
    def nodes(self) -> tuple[NodeId, ...]:
        return self._nodes

    @property
    def edges(self) -> tuple[SignedEdge, ...]:
        return self._edges

    @property
    def n_nodes(self) -> int:
        return len(self._nodes)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    def index_of(self, node: NodeId) -> int:
        return self._index[node]

    def label(self, node: NodeId) -> str:
        return self._attrs[node]["label"]

    def group(self, node: NodeId) -> str:
        return self._attrs[node]["group"]

    def attrs(self, node: NodeId) -> dict:
        return dict(self._attrs[node])

    def degree(self, node: NodeId) -> int:
        i = self._index[node]
        return int(self._degrees()[i])

    def __contains__(self, node: NodeId) -> bool:
        return node in self._index

    def __repr__(self) -> str:
        return f"SignedGraph(n_nodes={self.n_nodes}, n_edges={self.n_edges})"

    # array views ---------------------------------------------------------

    def edge_index_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Edges as parallel arrays (i, j, sign) of node indices; cached."""
        cached = getattr(self, "_edge_arrays", None)
        if cached is None:
            m = self.n_edges
            ii = np.empty(m, dtype=np.int64)
            jj = np.empty(m, dtype=np.int64)
            ss = np.empty(m, dtype=np.int8)
            for k, e in enumerate(self._edges):
                ii[k] = self._index[e.u]
                jj[k] = self._index[e.v]
                ss[k] = e.sign
            cached = (ii, jj, ss)
            object.__setattr__(self, "_edge_arrays", cached)
        return cached

    def _degrees(self) -> np.ndarray:
        cached = getattr(self, "_deg", None)
        if cached is None:
            ii, jj, _ = self.edge_index_arrays()
            cached = np.bincount(np.concatenate([ii, jj]), minlength=self.n_nodes).astype(np.int64)
            object.__setattr__(self, "_deg", cached)
        return cached

    def csr_arrays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Compressed adjacency (indptr, neighbor indices, neighbor signs)."""
        cached = getattr(self, "_csr", None)
        if cached is None:
            n = self.n_nodes
            ii, jj, ss = self.edge_index_arrays()
            deg = self._degrees()
            indptr = np.zeros(n + 1, dtype=np.int64)
            np.cumsum(deg, out=indptr[1:])
            neighbors = np.empty(indptr[-1], dtype=np.int64)
            signs = np.empty(indptr[-1], dtype=np.int8)
            cursor = indptr[:-1].copy()
            for k in range(len(ii)):
                a, b, s = ii[k], jj[k], ss[k]
                neighbors[cursor[a]] = b
                signs[cursor[a]] = s
                cursor[a] += 1
                neighbors[cursor[b]] = a
                signs[cursor[b]] = s
                cursor[b] += 1
            cached = (indptr, neighbors, signs)
            object.__setattr__(self, "_csr", cached)
        return cached


def build_graph(nodes: Iterable, edges: Iterable = ()) -> SignedGraph:
    """Validate and assemble a :class:`SignedGraph`.

    ``nodes`` holds node ids or ``(id, attrs)`` pairs where ``attrs`` is a
    dict with optional ``label`` and ``group`` keys. ``edges`` holds
    :class:`SignedEdge` instances or ``(u, v, sign)`` / ``(u, v, sign, weight)``
    tuples.

    Raises :class:`DuplicateNodeError`, :class:`DuplicateEdgeError`,
    :class:`SelfLoopError`, or :class:`DanglingEndpointError` on bad input.
    """
    node_list: list[NodeId] = []
    attrs: dict[NodeId, dict] = {}
    for item in nodes:
        if isinstance(item, tuple) and len(item) == 2 and isinstance(item[1], (dict, type(None))):
            nid, a = item
        else:
            nid, a = item, None
        if nid in attrs:
            raise DuplicateNodeError(f"duplicate node id {nid!r}")
        node_list.append(nid)
        attrs[nid] = dict(a) if a else {}

    edge_list: list[SignedEdge] = []
    seen_pairs: set[tuple[NodeId, NodeId]] = set()
    for item in edges:
        e = item if isinstance(item, SignedEdge) else SignedEdge(*item)
        if e.u == e.v:
            raise SelfLoopError(f"self loop on node {e.u!r}")
        for endpoint in (e.u, e.v):
            if endpoint not in attrs:
                raise DanglingEndpointError(f"edge ({e.u!r}, {e.v!r}) references unknown node {endpoint!r}")
        key = e.pair()
        if key in seen_pairs:
            raise DuplicateEdgeError(f"duplicate edge between {key[0]!r} and {key[1]!r}")
        seen_pairs.add(key)
        edge_list.append(e)

    return SignedGraph(node_list, attrs, edge_list)


def signed_adjacency(g: SignedGraph) -> np.ndarray:
    """Dense signed adjacency matrix A with A[i, j] = sign of edge (i, j).

    Node order is the graph's canonical (insertion) order. Raises
    :class:`EmptyGraphError` on a graph with no nodes.
    """
    if g.n_nodes == 0:
        raise EmptyGraphError("adjacency of an empty graph is undefined")
    a = np.zeros((g.n_nodes, g.n_nodes), dtype=np.float64)
    ii, jj, ss = g.edge_index_arrays()
    a[ii, jj] = ss
    a[jj, ii] = ss
    return a


def count_frustrated(g: SignedGraph, partition: Mapping[NodeId, int]) -> tuple[int, list[SignedEdge]]:
    """Count edges frustrated by a two-sided partition.

    ``partition`` maps every node to +1 or -1. A negative edge inside one
    side is frustrated, and so is a positive edge across sides. Returns the
    count together with the frustrated edges in graph edge order.

    Raises :class:`PartialPartitionError` if any node has no side and
    ``ValueError`` if a side value is not +1 or -1.
    """
    missing = [u for u in g.nodes if u not in partition]
    if missing:
        raise PartialPartitionError(f"partition is missing {len(missing)} node(s), e.g. {missing[0]!r}")
    for u in g.nodes:
        if partition[u] not in (1, -1):
            raise ValueError(f"partition side for node {u!r} must be +1 or -1, got {partition[u]!r}")
    frustrated = [e for e in g.edges if e.sign * partition[e.u] * partition[e.v] < 0]
    return len(frustrated), frustrated


def is_connected(g: SignedGraph) -> bool:
    """True when the graph has one node or every node is reachable from the first."""
    n = g.n_nodes
    if n == 0:
        raise EmptyGraphError("connectivity of an empty graph is undefined")
    if n == 1:
        return True
    indptr, neighbors, _ = g.csr_arrays()
    seen = np.zeros(n, dtype=bool)
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for k in range(indptr[u], indptr[u + 1]):
            w = neighbors[k]
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(int(w))
    return count == n


# serialization --------------------------------------------------------------

def graph_to_json_obj(g: SignedGraph) -> dict:
    """Plain-dict form of the graph JSON document."""
    return {
        "nodes": [{"id": u, "label": g.label(u), "group": g.group(u)} for u in g.nodes],
        "edges": [{"u": e.u, "v": e.v, "sign": e.sign, "weight": e.weight} for e in g.edges],
    }


def graph_from_json_obj(obj: Mapping) -> SignedGraph:
    try:
        nodes = [(n["id"], {"label": n.get("label", ""), "group": n.get("group", "")}) for n in obj["nodes"]]
        edges = [SignedEdge(e["u"], e["v"], int(e["sign"]), float(e.get("weight", 1.0))) for e in obj["edges"]]
    except (KeyError, TypeError) as exc:
        raise SchemaError(f"graph JSON is missing required fields: {exc}") from exc
    return build_graph(nodes, edges)


def write_graph_json(g: SignedGraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(graph_to_json_obj(g), fh, indent=2)
        fh.write("\n")


def read_graph_json(path) -> SignedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json_obj(json.load(fh))


def _coerce_id(text: str) -> NodeId:
    """CSV cells are strings; digit-only ids become ints so files round-trip."""
    text = text.strip()
    sign_stripped = text[1:] if text[:1] in "+-" else text
    if sign_stripped.isdigit():
        return int(text)
    return text


def read_edge_csv(stream) -> list[SignedEdge]:
    """Parse an edge CSV with header ``u,v,sign[,weight]``."""
    reader = csv.DictReader(stream)
    fields = reader.fieldnames or []
    if "u" not in fields or "v" not in fields or "sign" not in fields:
        raise SchemaError(f"edge CSV must have columns u,v,sign[,weight]; got {fields}")
    edges = []
    for row in reader:
        weight = row.get("weight")
        edges.append(
            SignedEdge(
                _coerce_id(row["u"]),
                _coerce_id(row["v"]),
                int(row["sign"]),
                float(weight) if weight not in (None, "") else 1.0,
            )
        )
    return edges


def read_node_csv(stream) -> list[tuple[NodeId, dict]]:
    """Parse a node CSV with header ``id[,label][,group]``."""
    reader = csv.DictReader(stream)
    fields = reader.fieldnames or []
    if "id" not in fields:
        raise SchemaError(f"node CSV must have an id column; got {fields}")
    return [
        (_coerce_id(row["id"]), {"label": row.get("label", "") or "", "group": row.get("group", "") or ""})
        for row in reader
    ]


def read_graph_csv(edge_path, node_path=None) -> SignedGraph:
    """Build a graph from an edge CSV and an optional node CSV.

    Without a node CSV the node set is the endpoints in first-appearance
    order with empty attributes.
    """
    with open(edge_path, "r", encoding="utf-8", newline="") as fh:
        edges = read_edge_csv(fh)
    if node_path is not None:
        with open(node_path, "r", encoding="utf-8", newline="") as fh:
            nodes = read_node_csv(fh)
    else:
        seen: dict[NodeId, None] = {}
        for e in edges:
            seen.setdefault(e.u)
            seen.setdefault(e.v)
        nodes = [(u, {}) for u in seen]
    return build_graph(nodes, edges)


def write_edge_csv(g: SignedGraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["u", "v", "sign", "weight"])
        for e in g.edges:
            writer.writerow([e.u, e.v, e.sign, e.weight])


def write_node_csv(g: SignedGraph, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["id", "label", "group"])
        for u in g.nodes:
            writer.writerow([u, g.label(u), g.group(u)])


def read_graph_auto(path) -> SignedGraph:
    """Load a graph from a .json document or an edge .csv (extension sniffed)."""
    text = str(path)
    if text.endswith(".json"):
        return read_graph_json(path)
    if text.endswith(".csv"):
        return read_graph_csv(path)
    with open(path, "r", encoding="utf-8") as fh:
        head = fh.read(4096)
    if head.lstrip().startswith("{"):
        return read_graph_json(path)
    return read_graph_csv(path)


def graph_from_csv_text(edge_text: str, node_text: str | None = None) -> SignedGraph:
    """Convenience wrapper used by tests: build straight from CSV strings."""
    edges = read_edge_csv(io.StringIO(edge_text))
    if node_text is None:
        seen: dict[NodeId, None] = {}
        for e in edges:
            seen.setdefault(e.u)
            seen.setdefault(e.v)
        nodes: list = [(u, {}) for u in seen]
    else:
        nodes = read_node_csv(io.StringIO(node_text))
    return build_graph(nodes, edges)
