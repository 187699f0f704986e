"""Binary graph operations: join, corona and the four standard products.

Product vertex ``(i, j)`` with ``i`` in G and ``j`` in H is stored at flat
index ``i * H.n + j``; :func:`decode` inverts that.
"""

from __future__ import annotations

from enum import Enum

from .errors import InputError
from .graph import Graph, bits, make_graph


class ProductKind(str, Enum):
    JOIN = "join"
    CORONA = "corona"
    CARTESIAN = "cartesian"
    TENSOR = "tensor"
    STRONG = "strong"
    LEXICOGRAPHIC = "lex"

    @classmethod
    def parse(cls, token: str) -> "ProductKind":
        aliases = {"lexicographic": cls.LEXICOGRAPHIC}
        if token in aliases:
            return aliases[token]
        try:
            return cls(token)
        except ValueError:
            raise InputError(f"unknown product kind {token!r}") from None


def join(G: Graph, H: Graph) -> Graph:
    """Disjoint union plus every G-H edge; G's vertices come first."""
    off = G.n
    edges = G.edges() + [(off + u, off + v) for u, v in H.edges()]
    edges += [(u, off + v) for u in range(G.n) for v in range(H.n)]
    return make_graph(G.n + H.n, edges)


def corona(G: Graph, H: Graph) -> Graph:
    """G followed by one copy of H per vertex of G; copy ``i`` is joined to vertex ``i``.

    Copy ``i`` occupies indices ``G.n + i*H.n .. G.n + (i+1)*H.n - 1``. An
    empty H gives back G.
    """
    edges = G.edges()
    for i in range(G.n):
        base = G.n + i * H.n
        edges += [(base + u, base + v) for u, v in H.edges()]
        edges += [(i, base + u) for u in range(H.n)]
    return make_graph(G.n * (1 + H.n), edges)


def decode(index: int, H: Graph) -> tuple[int, int]:
    return divmod(index, H.n)


def product(kind: ProductKind | str, G: Graph, H: Graph) -> Graph:
    kind = ProductKind.parse(kind) if isinstance(kind, str) else kind
    if kind is ProductKind.JOIN:
        return join(G, H)
    if kind is ProductKind.CORONA:
        return corona(G, H)
    m = H.n
    full_h = H.full_mask
    adj = []
    for i in range(G.n):
        gi = G.adj[i]
        for j in range(m):
            hj = H.adj[j]
            a = 0
            # row blocks of G-neighbours and own block, as masks over H-indices
            if kind is ProductKind.CARTESIAN:
                a |= hj << (i * m)
                for k in bits(gi):
                    a |= 1 << (k * m + j)
            elif kind is ProductKind.TENSOR:
                for k in bits(gi):
                    a |= hj << (k * m)
            elif kind is ProductKind.STRONG:
                a |= hj << (i * m)
                for k in bits(gi):
                    a |= (hj | 1 << j) << (k * m)
            else:
                a |= hj << (i * m)
                for k in bits(gi):
                    a |= full_h << (k * m)
            adj.append(a)
    return Graph(G.n * m, tuple(adj))


def cartesian(G: Graph, H: Graph) -> Graph:
    return product(ProductKind.CARTESIAN, G, H)


def tensor(G: Graph, H: Graph) -> Graph:
    return product(ProductKind.TENSOR, G, H)


def strong(G: Graph, H: Graph) -> Graph:
    return product(ProductKind.STRONG, G, H)


def lexicographic(G: Graph, H: Graph) -> Graph:
    return product(ProductKind.LEXICOGRAPHIC, G, H)


def embed(kind: ProductKind | str, G: Graph, H: Graph, g_set, h_set) -> tuple[int, ...]:
    """Vertices of the product occupied by the sub-product of ``g_set`` and ``h_set``.

    For join and corona ``g_set``/``h_set`` name vertices of the factors; for
    corona the image is ``g_set`` plus each listed vertex's copy of ``h_set``.
    """
    kind = ProductKind.parse(kind) if isinstance(kind, str) else kind
    if kind is ProductKind.JOIN:
        return tuple(sorted(list(g_set) + [G.n + v for v in h_set]))
    if kind is ProductKind.CORONA:
        out = list(g_set)
        for i in g_set:
            out += [G.n + i * H.n + v for v in h_set]
        return tuple(sorted(out))
    return tuple(sorted(i * H.n + j for i in g_set for j in h_set))
