"""Graph corpora for the claim harness.

Small graphs up to isomorphism are built by vertex augmentation: every class
on ``n`` vertices arises from a class on ``n - 1`` vertices plus one vertex
with some neighbourhood. Duplicates are removed by bucketing on an invariant
and testing isomorphism inside each bucket.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import InputError
from .graph import Graph, complement, find_isomorphism, invariant_key, make_graph, null_graph


@lru_cache(maxsize=None)
def graphs_up_to_iso(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class on ``n`` vertices, in a stable order."""
    if n < 0:
        raise InputError("order must be non-negative")
    if n == 0:
        return (null_graph(0),)
    buckets: dict[tuple, list[Graph]] = {}
    for base in graphs_up_to_iso(n - 1):
        for nbrs in range(1 << (n - 1)):
            adj = [a | ((nbrs >> v & 1) << (n - 1)) for v, a in enumerate(base.adj)]
            adj.append(nbrs)
            G = Graph(n, tuple(adj))
            bucket = buckets.setdefault(invariant_key(G), [])
            if not any(find_isomorphism(G, H, limit=None) is not None for H in bucket):
                bucket.append(G)
    reps = [G for bucket in buckets.values() for G in bucket]
    reps.sort(key=lambda G: (G.size, G.key()))
    return tuple(reps)


def connected_graphs(max_order: int, min_order: int = 1) -> list[Graph]:
    out = []
    for n in range(min_order, max_order + 1):
        out.extend(G for G in graphs_up_to_iso(n) if G.is_connected())
    return out


def all_graphs(max_order: int, min_order: int = 1) -> list[Graph]:
    out = []
    for n in range(min_order, max_order + 1):
        out.extend(graphs_up_to_iso(n))
    return out


def random_graph(n: int, p, seed: int) -> Graph:
    """G(n, p): each pair ``i < j`` in lexicographic order is kept when ``Random(seed).random() < p``."""
    if n < 0:
        raise InputError("order must be non-negative")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise InputError(f"edge probability must lie in [0, 1], got {p}")
    rng = random.Random(seed)
    threshold = float(p)
    edges = [(i, j) for i, j in combinations(range(n), 2) if rng.random() < threshold]
    return make_graph(n, edges)


def is_self_complementary(G: Graph) -> bool:
    return find_isomorphism(G, complement(G), limit=None) is not None


def _parts_of_four(total: int, largest: int) -> list[list[int]]:
    if total == 0:
        return [[]]
    out = []
    for part in range(min(total, largest), 3, -4):
        if part % 4 == 0:
            out.extend([part] + rest for rest in _parts_of_four(total - part, part))
    return out


def _antimorphism_graphs(n: int, cycles: list[int]) -> list[Graph]:
    perm = list(range(n))
    start = 0
    for length in cycles:
        for i in range(length):
            perm[start + i] = start + (i + 1) % length
        start += length
    orbits = []
    seen = set()
    for pair in combinations(range(n), 2):
        orbit = []
        cur = pair
        while cur not in seen:
            seen.add(cur)
            orbit.append(cur)
            a, b = perm[cur[0]], perm[cur[1]]
            cur = (min(a, b), max(a, b))
        if orbit:
            orbits.append(orbit)
    graphs = []
    for choice in range(1 << len(orbits)):
        edges = []
        for k, orbit in enumerate(orbits):
            edges.extend(orbit[i] for i in range(choice >> k & 1, len(orbit), 2))
        graphs.append(make_graph(n, edges))
    return graphs


def self_complementary_graphs(n: int) -> list[Graph]:
    """All self-complementary graphs on ``n`` vertices up to isomorphism.

    A self-complementary graph has an antimorphism (an isomorphism onto its
    complement) whose cycles all have length divisible by four, apart from at
    most one fixed vertex. For each such cycle type the pair orbits alternate
    edge / non-edge, which enumerates every graph admitting it.
    """
    if n % 4 not in (0, 1):
        return []
    found: list[Graph] = []
    for cycles in _parts_of_four(n - n % 4, n - n % 4):
        for G in _antimorphism_graphs(n, cycles):
            if not any(find_isomorphism(G, H, limit=None) is not None for H in found):
                found.append(G)
    found.sort(key=lambda G: G.key())
    return found
