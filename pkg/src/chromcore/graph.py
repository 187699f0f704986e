"""Immutable finite simple graphs on vertices 0..n-1.

Adjacency is stored as one integer bitmask per vertex, so induced subgraphs,
complements and neighbourhood queries are cheap bit operations. Every
operation that returns vertex collections returns them in ascending order.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import CapabilityError, InputError

ISOMORPHISM_LIMIT = 12

popcount = int.bit_count


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise InputError("adjacency length does not match vertex count")

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(range(self.n))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def max_degree(self) -> int:
        return max(self.degrees()) if self.n else 0

    def is_complete(self) -> bool:
        full = self.full_mask
        return all(a | (1 << v) == full for v, a in enumerate(self.adj))

    def is_connected(self) -> bool:
        return self.n == 0 or reach(self.adj, 1, self.full_mask) == self.full_mask

    def key(self) -> str:
        """Stable text key: order then sorted edge list."""
        return f"{self.n}:" + ",".join(f"{u}-{v}" for u, v in self.edges())

    def digest(self) -> str:
        return hashlib.sha256(self.key().encode()).hexdigest()[:16]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def reach(adj: Sequence[int], start: int, within: int) -> int:
    """Mask of vertices reachable from the ``start`` mask inside ``within``."""
    seen = start & within
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected_mask(adj: Sequence[int], mask: int) -> bool:
    if not mask:
        return True
    return reach(adj, mask & -mask, mask) == mask


def make_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    """Build a graph on ``n`` vertices; duplicate and reversed edges merge."""
    if n < 0:
        raise InputError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    for edge in edges:
        u, v = edge
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise InputError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def null_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def structor_index(G: Graph) -> int:
    """Vertex count plus edge count."""
    return G.n + G.size


def mask_si(adj: Sequence[int], mask: int) -> int:
    """Structor index of the subgraph induced by ``mask``."""
    deg = 0
    for v in bits(mask):
        deg += popcount(adj[v] & mask)
    return popcount(mask) + deg // 2


def _check_subset(G: Graph, S: Iterable[int]) -> list[int]:
    members = sorted(set(S))
    for v in members:
        if not 0 <= v < G.n:
            raise InputError(f"vertex {v} is not in 0..{G.n - 1}")
    return members


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """Subgraph induced by ``S``; new vertex ``i`` is the i-th smallest member of ``S``."""
    members = _check_subset(G, S)
    return induced_by_list(G.adj, members)


def induced_by_list(adj: Sequence[int], members: Sequence[int]) -> Graph:
    pos = {v: i for i, v in enumerate(members)}
    new = []
    for v in members:
        a = 0
        for u in bits(adj[v]):
            i = pos.get(u)
            if i is not None:
                a |= 1 << i
        new.append(a)
    return Graph(len(members), tuple(new))


def induced_by_mask(G: Graph, mask: int) -> Graph:
    return induced_by_list(G.adj, bits(mask))


def complement(G: Graph) -> Graph:
    full = G.full_mask
    return Graph(G.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(G.adj)))


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for H in graphs:
        adj.extend(a << offset for a in H.adj)
        offset += H.n
    return Graph(offset, tuple(adj))


def line_graph(G: Graph) -> Graph:
    """One vertex per edge, in lexicographic edge order; adjacent iff edges share an endpoint."""
    edge_list = G.edges()
    incident: dict[int, list[int]] = {v: [] for v in range(G.n)}
    for i, (u, v) in enumerate(edge_list):
        incident[u].append(i)
        incident[v].append(i)
    pairs = set()
    for inc in incident.values():
        pairs.update(combinations(inc, 2))
    return make_graph(len(edge_list), sorted(pairs))


def mycielski(G: Graph) -> Graph:
    """Mycielskian: originals 0..n-1, shadows n..2n-1, apex 2n."""
    n = G.n
    edges = list(G.edges())
    for v in range(n):
        for u in G.neighbors(v):
            edges.append((n + v, u))
        edges.append((n + v, 2 * n))
    return make_graph(2 * n + 1, edges)


def connected_components(G: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each ascending, ordered by smallest member."""
    remaining = G.full_mask
    out = []
    while remaining:
        comp = reach(G.adj, remaining & -remaining, remaining)
        out.append(tuple(bits(comp)))
        remaining &= ~comp
    return out


def components_of_mask(adj: Sequence[int], mask: int) -> list[int]:
    out = []
    while mask:
        comp = reach(adj, mask & -mask, mask)
        out.append(comp)
        mask &= ~comp
    return out


def diameter(G: Graph) -> float:
    """Largest eccentricity; ``inf`` for disconnected graphs."""
    if not G.is_connected():
        return float("inf")
    best = 0
    for s in range(G.n):
        seen = frontier = 1 << s
        dist = 0
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= G.adj[v]
            nxt &= ~seen
            if nxt:
                dist += 1
            seen |= nxt
            frontier = nxt
        best = max(best, dist)
    return best


# --- isomorphism -----------------------------------------------------------


def _signature(G: Graph) -> list:
    """Per-vertex invariant: degree, triangle count, sorted neighbour degrees."""
    deg = G.degrees()
    sig = []
    for v in range(G.n):
        nb = G.adj[v]
        tri = sum(popcount(G.adj[u] & nb) for u in bits(nb)) // 2
        sig.append((deg[v], tri, tuple(sorted(deg[u] for u in bits(nb)))))
    return sig


def find_isomorphism(G: Graph, H: Graph, limit: int | None = ISOMORPHISM_LIMIT) -> dict[int, int] | None:
    """Return a map ``phi`` with ``u~v in G`` iff ``phi[u]~phi[v] in H``, or None."""
    if limit is not None and max(G.n, H.n) > limit:
        raise CapabilityError(f"isomorphism test limited to order {limit}, got {max(G.n, H.n)}")
    if G.n != H.n or G.size != H.size:
        return None
    sg, sh = _signature(G), _signature(H)
    if sorted(sg) != sorted(sh):
        return None
    n = G.n
    # candidate images per vertex share the same invariant
    cand = [to_mask(w for w in range(n) if sh[w] == sg[v]) for v in range(n)]
    # visit constrained vertices first, then follow adjacency so checks bite early
    order: list[int] = []
    placed = 0
    while len(order) < n:
        pool = [v for v in range(n) if not placed >> v & 1]
        linked = [v for v in pool if G.adj[v] & placed]
        v = min(linked or pool, key=lambda x: (popcount(cand[x]), -G.degree(x), x))
        order.append(v)
        placed |= 1 << v
    phi = [-1] * n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        v = order[depth]
        need = 0
        forbid = 0
        for u in order[:depth]:
            if G.adj[v] >> u & 1:
                need |= 1 << phi[u]
            else:
                forbid |= 1 << phi[u]
        for w in bits(cand[v] & ~used):
            hw = H.adj[w]
            if hw & need != need or hw & forbid:
                continue
            phi[v] = w
            used |= 1 << w
            if extend(depth + 1):
                return True
            used &= ~(1 << w)
        phi[v] = -1
        return False

    if extend(0):
        return dict(enumerate(phi))
    return None


def is_isomorphic(G: Graph, H: Graph, limit: int | None = ISOMORPHISM_LIMIT) -> bool:
    return find_isomorphism(G, H, limit) is not None


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return make_graph(G.n, [(perm[u], perm[v]) for u, v in G.edges()])


def invariant_key(G: Graph) -> tuple:
    """Isomorphism invariant used to bucket graphs before exact tests."""
    return (G.n, G.size, tuple(sorted(_signature(G))))
