from itertools import combinations, product

import networkx as nx
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from chromcore.claims import claim_ids, verify_claim
from chromcore.graph import Graph, make_graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_order=1, max_order=7):
    n = draw(st.integers(min_order, max_order))
    pairs = list(combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, k in zip(pairs, keep) if k])


def brute_chi(G: Graph) -> int:
    """Smallest k admitting a proper colouring, by trying every assignment."""
    if G.n == 0:
        return 0
    edges = G.edges()
    for k in range(1, G.n + 1):
        for colours in product(range(k), repeat=G.n):
            if all(colours[u] != colours[v] for u, v in edges):
                return k
    raise AssertionError


def brute_omega(G: Graph) -> int:
    best = 1 if G.n else 0
    for r in range(2, G.n + 1):
        if any(all(G.has_edge(u, v) for u, v in combinations(S, 2)) for S in combinations(range(G.n), r)):
            best = r
    return best


def to_nx(G: Graph) -> nx.Graph:
    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def from_nx(H: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(H.nodes()))}
    return make_graph(len(index), [(index[u], index[v]) for u, v in H.edges()])


@pytest.fixture
def brute():
    return brute_chi


@pytest.fixture(scope="session")
def all_reports():
    return {cid: verify_claim(cid, 0) for cid in claim_ids()}


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
