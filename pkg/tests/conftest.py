"""Shared fixtures: the two worked-example graphs, random suites, oracles."""

from __future__ import annotations

from itertools import product

import numpy as np
import pytest

from signedbalance import GenConfig, SignedGraph, build_graph, d_bar_max, generate, is_connected

# Five nodes, two camps {1,2,3} and {4,5}: positive inside, negative across.
BALANCED_EDGES = [
    (1, 2, 1), (1, 3, 1), (2, 3, 1), (4, 5, 1),
    (1, 4, -1), (2, 5, -1), (3, 4, -1), (3, 5, -1),
]

# Same graph with the (2, 5) edge's sign flipped to +1: one stubborn
# cross-camp friendship, the minimum frustration witness.
UNBALANCED_EDGES = [
    (1, 2, 1), (1, 3, 1), (2, 3, 1), (4, 5, 1),
    (1, 4, -1), (2, 5, 1), (3, 4, -1), (3, 5, -1),
]


def make_balanced() -> SignedGraph:
    return build_graph([1, 2, 3, 4, 5], BALANCED_EDGES)


def make_unbalanced() -> SignedGraph:
    return build_graph([1, 2, 3, 4, 5], UNBALANCED_EDGES)


@pytest.fixture
def balanced_graph() -> SignedGraph:
    return make_balanced()


@pytest.fixture
def unbalanced_graph() -> SignedGraph:
    return make_unbalanced()


def brute_force_epsilon(g: SignedGraph) -> int:
    """Independent pure-Python frustration oracle (no numpy, no shortcuts)."""
    nodes = list(g.nodes)
    best = g.n_edges + 1
    for bits in product((-1, 1), repeat=len(nodes) - 1):
        part = {nodes[0]: -1}
        part.update(zip(nodes[1:], bits))
        count = sum(1 for e in g.edges if e.sign * part[e.u] * part[e.v] < 0)
        if count < best:
            best = count
    return best


def random_signed_graph(rng: np.random.Generator, n: int, p: float, f_neg: float) -> SignedGraph:
    """Plain ER graph with iid signs; may be disconnected."""
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                edges.append((i, j, -1 if rng.random() < f_neg else 1))
    return build_graph(list(range(n)), edges)


def small_graph_suite(count: int = 200) -> list[SignedGraph]:
    """Deterministic mixed suite of small graphs (|V| <= 16).

    Alternates planted-structure graphs (every tenth one balanced) with
    plain random-sign graphs; densities and fractions vary per instance.
    """
    graphs: list[SignedGraph] = []
    attempt = 0
    while len(graphs) < count:
        rng = np.random.default_rng(np.random.SeedSequence([20240601, attempt]))
        attempt += 1
        n = int(rng.integers(4, 17))
        if len(graphs) % 2 == 0:
            fraction = 0.0 if len(graphs) % 10 == 0 else float(rng.uniform(0.0, 0.9))
            p = float(rng.uniform(0.3, 0.9))
            try:
                g, _, _ = generate(
                    GenConfig(n // 2, n - n // 2, p, p, fraction, seed=int(rng.integers(2**31)))
                )
            except Exception:
                continue
        else:
            g = random_signed_graph(rng, n, float(rng.uniform(0.2, 0.8)), float(rng.uniform(0.1, 0.9)))
            if g.n_edges == 0 or d_bar_max(g) <= 1.0:
                # the normalized conflict score is undefined on these
                continue
            if not is_connected(g):
                # a balanced component zeroes lambda_min while another
                # component can still carry frustration, which breaks the
                # epsilon = 0 <=> lambda_min = 0 reading used below
                continue
        graphs.append(g)
    return graphs


@pytest.fixture(scope="session")
def graph_suite_200() -> list[SignedGraph]:
    return small_graph_suite(200)


def vote_fixture_text(congresses=(1,)) -> tuple[str, str]:
    """Two-party, 20-member, 10-roll-call fixture as CSV text.

    Every roll call is party line (Democrats yea, Republicans nay) except
    for two mavericks: in the first congress listed, Democrat 110 votes
    nay on rolls 1-3 and Republican 210 votes yea on rolls 4-6, making
    (110, 210) the single planted frustrated pair. Later congresses get
    one maverick roll each, enough sample variance for thresholds while
    staying perfectly balanced.
    """
    votes = ["congress,chamber,rollnumber,icpsr,cast_code"]
    members = ["congress,chamber,icpsr,bioname,party_code"]
    first = congresses[0]
    for congress in congresses:
        for i in range(1, 11):
            members.append(f"{congress},house,{100 + i},DEM {i},100")
            members.append(f"{congress},house,{200 + i},REP {i},200")
        d_rolls = (1, 2, 3) if congress == first else (1,)
        r_rolls = (4, 5, 6) if congress == first else (4,)
        for roll in range(1, 11):
            for i in range(1, 11):
                cast = 6 if (100 + i == 110 and roll in d_rolls) else 1
                votes.append(f"{congress},house,{roll},{100 + i},{cast}")
            for i in range(1, 11):
                cast = 1 if (200 + i == 210 and roll in r_rolls) else 6
                votes.append(f"{congress},house,{roll},{200 + i},{cast}")
    return "\n".join(votes) + "\n", "\n".join(members) + "\n"


def write_vote_fixture(tmp_path, congresses=(1,)) -> tuple[str, str]:
    votes_text, members_text = vote_fixture_text(congresses)
    votes_path = tmp_path / "votes.csv"
    members_path = tmp_path / "members.csv"
    votes_path.write_text(votes_text)
    members_path.write_text(members_text)
    return str(votes_path), str(members_path)
