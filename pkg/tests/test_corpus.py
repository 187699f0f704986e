import networkx as nx
import pytest

from chromcore.corpus import (
    all_graphs,
    connected_graphs,
    graphs_up_to_iso,
    is_self_complementary,
    random_graph,
    self_complementary_graphs,
)
from chromcore.errors import InputError
from chromcore.families import complete, cycle, path
from chromcore.corefinder import find_core
from chromcore.graph import complement, find_isomorphism, induced_subgraph, null_graph, structor_index

from conftest import to_nx


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_graph_counts(n, count):
    assert len(graphs_up_to_iso(n)) == count


def test_connected_counts():
    assert [len(connected_graphs(n, n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]


def test_atlas_agreement_up_to_six():
    atlas = [g for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= 6]
    ours = all_graphs(6)
    assert len(atlas) == len(ours)
    for G in ours:
        assert sum(nx.is_isomorphic(to_nx(G), A) for A in atlas if A.number_of_nodes() == G.n and A.number_of_edges() == G.size) == 1


def test_random_graph_extremes_and_determinism():
    assert random_graph(5, 0, 3) == null_graph(5)
    assert random_graph(5, 1, 3) == complete(5)
    assert random_graph(8, "1/2", 7) == random_graph(8, "1/2", 7)
    with pytest.raises(InputError):
        random_graph(5, 1.5, 0)


@pytest.mark.parametrize("n,count", [(4, 1), (5, 2), (8, 10)])
def test_self_complementary_counts(n, count):
    found = self_complementary_graphs(n)
    assert len(found) == count
    assert all(is_self_complementary(G) for G in found)


def test_self_complementary_small():
    assert find_isomorphism(self_complementary_graphs(4)[0], path(4)) is not None
    assert any(find_isomorphism(G, cycle(5)) is not None for G in self_complementary_graphs(5))
    assert self_complementary_graphs(6) == []


def test_all_order_eight_self_complementary_cores_transport():
    for G in self_complementary_graphs(8):
        Gc = complement(G)
        phi = find_isomorphism(G, Gc, limit=None)
        core = find_core(G)
        image = induced_subgraph(Gc, [phi[v] for v in core.vertices])
        assert structor_index(image) == find_core(Gc).si
