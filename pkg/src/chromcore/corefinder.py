"""Chromatic cores: minimum structor-index induced subgraphs with the host's chromatic number.

Search outline for a connected host with chromatic number ``k``:

* ``k == 1``: a single vertex.
* clique number equals ``k``: any ``k``-clique. Nothing smaller can be
  ``k``-chromatic, since a ``k``-chromatic graph has structor index at least
  that of ``K_k``, with equality only for ``K_k`` itself.
* otherwise a bounded subset search. A minimum core ``S`` is connected and
  vertex-critical: were ``S - v`` still ``k``-chromatic it would be a smaller
  core. Vertex-critical graphs have minimum degree at least ``k - 1``, so
  only connected subsets with that minimum degree are generated, and only
  up to the structor index of a vertex-critical subgraph obtained by greedy
  vertex deletion.

Disconnected hosts reduce to their components of maximum chromatic number.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .coloring import chi_mask, chi_table, colorable_mask, cliques_of_size, first_clique
from .errors import CapabilityError, InputError
from .graph import (
    Graph,
    bits,
    components_of_mask,
    find_isomorphism,
    induced_by_list,
    induced_subgraph,
    is_connected_mask,
    mask_si,
    popcount,
    to_mask,
)

DEFAULT_SEARCH_LIMIT = 16
ORACLE_LIMIT = 10
LIMIT_ENV = "CHROMCORE_SEARCH_LIMIT"


class Minimality(str, Enum):
    ORACLE_VERIFIED = "oracle_verified"
    PRUNED_SEARCH = "pruned_search"
    BOUND_MATCHED = "bound_matched"


@dataclass(frozen=True)
class CoreCertificate:
    host: Graph = field(repr=False)
    vertices: tuple[int, ...]
    chi: int
    si: int
    minimality: Minimality
    argmin: tuple[tuple[int, ...], ...] = field(default=(), repr=False)

    def subgraph(self) -> Graph:
        return induced_subgraph(self.host, self.vertices)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "chi": self.chi,
            "si": self.si,
            "minimality": self.minimality.value,
            "host_hash": self.host.digest(),
        }


def search_limit() -> int:
    value = os.environ.get(LIMIT_ENV)
    if value is None:
        return DEFAULT_SEARCH_LIMIT
    try:
        return int(value)
    except ValueError:
        raise InputError(f"{LIMIT_ENV} must be an integer, got {value!r}") from None


def core_si_lower_bound(k: int) -> int:
    """Structor index of K_k, the least possible for a k-chromatic graph."""
    if k < 1:
        raise InputError(f"chromatic number must be >= 1, got {k}")
    return k + k * (k - 1) // 2


def is_k_chromatic_or_more(adj: Sequence[int], mask: int, k: int) -> bool:
    return colorable_mask(adj, mask, k - 1) is None


def critical_descent(adj: Sequence[int], mask: int, k: int) -> int:
    """Delete vertices in ascending order while the chromatic number stays ``k``.

    One pass suffices: a vertex that could not be removed earlier cannot be
    removed from any smaller set either, so the result is vertex-critical.
    """
    for v in bits(mask):
        rest = mask & ~(1 << v)
        if rest and is_k_chromatic_or_more(adj, rest, k):
            mask = rest
    return mask


def _candidate_sets(adj: Sequence[int], region: int, k: int, bound: int) -> dict[int, list[int]]:
    """Connected subsets of ``region`` with minimum degree >= k-1 and si <= bound, bucketed by si."""
    order = bits(region)
    need = k - 1
    buckets: dict[int, list[int]] = {}

    def feasible(inc: int, pool: int, touched: int) -> bool:
        avail = inc | pool
        for u in bits(touched & inc):
            if popcount(adj[u] & avail) < need:
                return False
        return True

    def rec(i: int, inc: int, si: int) -> None:
        if i == len(order):
            if inc and is_connected_mask(adj, inc):
                buckets.setdefault(si, []).append(inc)
            return
        v = order[i]
        bit = 1 << v
        pool = to_mask(order[i + 1:])
        # include v
        gain = 1 + popcount(adj[v] & inc)
        if si + gain <= bound and feasible(inc | bit, pool, adj[v] & inc | bit):
            rec(i + 1, inc | bit, si + gain)
        # exclude v
        if feasible(inc, pool, adj[v]):
            if inc:
                comp = _reach_from(adj, inc & -inc, inc | pool)
                if comp & inc != inc:
                    return
            rec(i + 1, inc, si)

    rec(0, 0, 0)
    return buckets


def _reach_from(adj: Sequence[int], start: int, within: int) -> int:
    seen = frontier = start
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


@dataclass
class _Solved:
    sets: list[tuple[int, ...]]
    si: int
    minimality: Minimality


def _solve_component(adj: Sequence[int], comp: int, k: int, want_all: bool, limit: int) -> _Solved:
    if k == 1:
        singles = [(v,) for v in bits(comp)]
        return _Solved(singles if want_all else singles[:1], 1, Minimality.BOUND_MATCHED)
    lower = core_si_lower_bound(k)
    if want_all:
        cliques = list(cliques_of_size(adj, comp, k))
    else:
        first = first_clique(adj, comp, k)
        cliques = [first] if first is not None else []
    if cliques:
        return _Solved(cliques, lower, Minimality.BOUND_MATCHED)
    if popcount(comp) > limit:
        witness = critical_descent(adj, comp, k)
        raise CapabilityError(
            f"core search limited to order {limit} for hosts whose clique number is below "
            f"their chromatic number; component has order {popcount(comp)}",
            best_si=mask_si(adj, witness),
            best_vertices=bits(witness),
            lower_bound=lower + 1,
        )
    witness = critical_descent(adj, comp, k)
    bound = mask_si(adj, witness)
    buckets = _candidate_sets(adj, comp, k, bound)
    for si in sorted(buckets):
        hits = sorted(tuple(bits(m)) for m in buckets[si])
        found = []
        for s in hits:
            if is_k_chromatic_or_more(adj, to_mask(s), k):
                found.append(s)
                if not want_all:
                    break
        if found:
            return _Solved(found, si, Minimality.PRUNED_SEARCH)
    raise AssertionError("descent witness must appear among the candidates")


def _solve(G: Graph, want_all: bool, limit: int | None) -> tuple[int, _Solved]:
    if G.n == 0:
        raise InputError("cores are defined for graphs with at least one vertex")
    limit = search_limit() if limit is None else limit
    comps = components_of_mask(G.adj, G.full_mask)
    chis = [chi_mask(G.adj, c)[0] for c in comps]
    k = max(chis)
    results = [_solve_component(G.adj, c, k, want_all, limit) for c, x in zip(comps, chis) if x == k]
    best = min(r.si for r in results)
    winners = [r for r in results if r.si == best]
    sets = sorted(s for r in winners for s in r.sets)
    if not want_all:
        sets = sets[:1]
    minimality = (
        Minimality.PRUNED_SEARCH
        if any(r.minimality is Minimality.PRUNED_SEARCH for r in winners)
        else Minimality.BOUND_MATCHED
    )
    return k, _Solved(sets, best, minimality)


def find_core(G: Graph, limit: int | None = None) -> CoreCertificate:
    """The lexicographically smallest minimum-si vertex set with chromatic number chi(G)."""
    k, solved = _solve(G, False, limit)
    return CoreCertificate(G, solved.sets[0], k, solved.si, solved.minimality)


def enumerate_cores(G: Graph, limit: int | None = None, collapse_isomorphic: bool = False) -> list[CoreCertificate]:
    """Every minimum-si vertex set, ascending-lexicographic.

    With ``collapse_isomorphic`` only the first set of each isomorphism class
    of induced subgraphs is kept.
    """
    k, solved = _solve(G, True, limit)
    sets = solved.sets
    if collapse_isomorphic:
        kept: list[tuple[tuple[int, ...], Graph]] = []
        for s in sets:
            H = induced_by_list(G.adj, s)
            if not any(find_isomorphism(H, other, limit=None) is not None for _, other in kept):
                kept.append((s, H))
        sets = [s for s, _ in kept]
    return [CoreCertificate(G, s, k, solved.si, solved.minimality) for s in sets]


def is_vertex_critical(G: Graph) -> bool:
    if G.n == 0:
        raise InputError("vertex criticality needs at least one vertex")
    k = chi_mask(G.adj, G.full_mask)[0]
    full = G.full_mask
    return all(colorable_mask(G.adj, full & ~(1 << v), k - 1) is not None for v in range(G.n))


def oracle_core(G: Graph, limit: int = ORACLE_LIMIT) -> CoreCertificate:
    """Exhaustive reference: chromatic number and si of every nonempty subset.

    Uses the subset dynamic programme for chromatic numbers, not the
    backtracking solver or any pruning. ``argmin`` holds every minimum set.
    """
    if G.n == 0:
        raise InputError("cores are defined for graphs with at least one vertex")
    if G.n > limit:
        raise CapabilityError(f"oracle limited to order {limit}, got {G.n}")
    table = chi_table(G.adj, G.n)
    full = G.full_mask
    k = table[full]
    best = None
    argmin: list[tuple[int, ...]] = []
    for mask in range(1, full + 1):
        if table[mask] != k:
            continue
        si = mask_si(G.adj, mask)
        if best is None or si < best:
            best, argmin = si, [tuple(bits(mask))]
        elif si == best:
            argmin.append(tuple(bits(mask)))
    argmin.sort()
    return CoreCertificate(G, argmin[0], k, best, Minimality.ORACLE_VERIFIED, tuple(argmin))

