from itertools import product as pairs

import networkx as nx
import pytest
from hypothesis import given

from chromcore.families import complete, cycle, path
from chromcore.graph import induced_subgraph, is_isomorphic
from chromcore.products import ProductKind, corona, decode, embed, join, product

from conftest import graphs, to_nx

NX = {
    ProductKind.CARTESIAN: nx.cartesian_product,
    ProductKind.TENSOR: nx.tensor_product,
    ProductKind.STRONG: nx.strong_product,
    ProductKind.LEXICOGRAPHIC: nx.lexicographic_product,
}


def _nx_flat(P, m):
    H = nx.Graph()
    H.add_nodes_from(i * m + j for i, j in P.nodes())
    H.add_edges_from(((a * m + b), (c * m + d)) for (a, b), (c, d) in P.edges())
    return H


@pytest.mark.parametrize("kind", list(NX))
@given(G=graphs(max_order=4), H=graphs(max_order=4))
def test_products_match_networkx_labelled(kind, G, H):
    ours = product(kind, G, H)
    ref = _nx_flat(NX[kind](to_nx(G), to_nx(H)), H.n)
    assert sorted(ours.edges()) == sorted(tuple(sorted(e)) for e in ref.edges())


@given(G=graphs(max_order=5), H=graphs(max_order=5))
def test_join_and_corona_sizes(G, H):
    J = join(G, H)
    assert J.n == G.n + H.n and J.size == G.size + H.size + G.n * H.n
    C = corona(G, H)
    assert C.n == G.n * (1 + H.n) and C.size == G.size + G.n * (H.size + H.n)


def test_decode():
    H = path(3)
    assert decode(7, H) == (2, 1)


def test_kind_tokens():
    for token in ["join", "corona", "cartesian", "tensor", "strong", "lex", "lexicographic"]:
        ProductKind.parse(token)
    with pytest.raises(Exception):
        ProductKind.parse("box")


def test_embed_gives_sub_products():
    G, H = cycle(5), path(3)
    for kind in NX:
        S = embed(kind, G, H, (0, 1), (1, 2))
        assert is_isomorphic(induced_subgraph(product(kind, G, H), S), product(kind, path(2), path(2)))
    S = embed(ProductKind.JOIN, G, H, (0, 1), (0,))
    assert induced_subgraph(join(G, H), S).is_complete()


def test_strong_of_two_edges_is_k4():
    assert product(ProductKind.STRONG, complete(2), complete(2)).is_complete()


def test_strong_not_denser_than_lex():
    for G, H in pairs([path(3), cycle(4), cycle(5)], repeat=2):
        assert product(ProductKind.STRONG, G, H).size <= product(ProductKind.LEXICOGRAPHIC, G, H).size
