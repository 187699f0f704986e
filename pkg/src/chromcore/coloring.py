"""Exact colouring, clique and independence computations.

Everything here works on adjacency bitmasks. The public functions take a
:class:`Graph`; the ``*_mask`` helpers take ``(adj, mask)`` and act on the
subgraph induced by ``mask`` without materialising it, which is what the
core search and the claim harness lean on.

Ties are always broken towards the smallest vertex index so every witness
is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CapabilityError, InputError
from .graph import Graph, bits, complement, components_of_mask, popcount, to_mask

PERFECT_LIMIT = 14
CHI_MINUS_LIMIT = 16
MIS_LIMIT = 20


@dataclass(frozen=True)
class Coloring:
    """Colour of each vertex in vertex order; colours are 0..k-1, all used."""

    assignment: tuple[int, ...]
    k: int

    def classes(self) -> list[tuple[int, ...]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            out[c].append(v)
        return [tuple(c) for c in out]

    def class_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes())

    def is_proper(self, G: Graph) -> bool:
        if len(self.assignment) != G.n:
            return False
        if set(self.assignment) != set(range(self.k)):
            return False
        return all(self.assignment[u] != self.assignment[v] for u, v in G.edges())

    def to_json(self) -> list[int]:
        return list(self.assignment)


@dataclass(frozen=True)
class ChiResult:
    chi: int
    witness: Coloring
    clique: tuple[int, ...]


def coloring_from_classes(n: int, classes: Sequence[int]) -> Coloring:
    """Build a normalised colouring: colours numbered by first appearance."""
    raw = [-1] * n
    for c, cm in enumerate(classes):
        for v in bits(cm):
            raw[v] = c
    relabel: dict[int, int] = {}
    out = []
    for c in raw:
        if c not in relabel:
            relabel[c] = len(relabel)
        out.append(relabel[c])
    return Coloring(tuple(out), len(relabel))


# --- k-colourability ------------------------------------------------------


def _dsatur_search(adj: Sequence[int], mask: int, k: int) -> list[int] | None:
    """Backtracking DSATUR on one vertex set; returns colour-class masks.

    A vertex may open at most one fresh colour, which removes the colour
    permutation symmetry.
    """
    classes: list[int] = []

    def rec(unc: int) -> bool:
        if not unc:
            return True
        best = -1
        best_sat = best_deg = -1
        best_avail: list[int] = []
        full = len(classes) >= k
        for v in bits(unc):
            av = adj[v]
            avail = [c for c, cm in enumerate(classes) if not cm & av]
            if not avail and full:
                return False
            sat = len(classes) - len(avail)
            if sat > best_sat or (sat == best_sat and popcount(av & unc) > best_deg):
                best, best_sat, best_deg, best_avail = v, sat, popcount(av & unc), avail
        bit = 1 << best
        rest = unc ^ bit
        for c in best_avail:
            classes[c] |= bit
            if rec(rest):
                return True
            classes[c] ^= bit
        if not full:
            classes.append(bit)
            if rec(rest):
                return True
            classes.pop()
        return False

    return list(classes) if rec(mask) else None


def colorable_mask(adj: Sequence[int], mask: int, k: int) -> list[int] | None:
    """Colour classes of a proper colouring of ``mask`` with at most ``k`` colours, or None."""
    if not mask:
        return []
    if k <= 0:
        return None
    merged: list[int] = []
    for comp in components_of_mask(adj, mask):
        if popcount(comp) <= k:
            classes = [1 << v for v in bits(comp)]
        else:
            found = _dsatur_search(adj, comp, k)
            if found is None:
                return None
            classes = found
        for c, cm in enumerate(classes):
            if c < len(merged):
                merged[c] |= cm
            else:
                merged.append(cm)
    return merged


def is_k_colorable(G: Graph, k: int) -> Coloring | None:
    """A proper colouring with at most ``k`` colours, or None if none exists."""
    if k < 0:
        raise InputError(f"k must be non-negative, got {k}")
    classes = colorable_mask(G.adj, G.full_mask, k)
    if classes is None:
        return None
    return coloring_from_classes(G.n, classes)


def greedy_classes(adj: Sequence[int], mask: int) -> list[int]:
    """DSATUR without backtracking: an upper-bound colouring."""
    classes: list[int] = []
    unc = mask
    while unc:
        best = -1
        best_sat = best_deg = -1
        for v in bits(unc):
            sat = sum(1 for cm in classes if cm & adj[v])
            deg = popcount(adj[v] & unc)
            if sat > best_sat or (sat == best_sat and deg > best_deg):
                best, best_sat, best_deg = v, sat, deg
        for c, cm in enumerate(classes):
            if not cm & adj[best]:
                classes[c] |= 1 << best
                break
        else:
            classes.append(1 << best)
        unc ^= 1 << best
    return classes


def greedy_clique(adj: Sequence[int], mask: int) -> list[int]:
    """Grow a clique from the highest-degree vertex, always taking the best-connected candidate."""
    clique: list[int] = []
    cand = mask
    while cand:
        v = max(bits(cand), key=lambda u: (popcount(adj[u] & cand), -u))
        clique.append(v)
        cand &= adj[v]
    return sorted(clique)


def chi_mask(adj: Sequence[int], mask: int) -> tuple[int, list[int], list[int]]:
    """Exact chromatic number of the subgraph induced by ``mask``.

    Climbs from a clique lower bound; each probe either returns a colouring
    (the answer) or proves the probe value infeasible.
    """
    if not mask:
        return 0, [], []
    clique = greedy_clique(adj, mask)
    upper = greedy_classes(adj, mask)
    for k in range(len(clique), len(upper)):
        found = colorable_mask(adj, mask, k)
        if found is not None:
            return len(found), found, clique
    return len(upper), upper, clique


def chromatic_number(G: Graph) -> ChiResult:
    if G.n == 0:
        raise InputError("chromatic number of the empty graph is not defined here")
    chi, classes, clique = chi_mask(G.adj, G.full_mask)
    witness = coloring_from_classes(G.n, classes)
    return ChiResult(chi, witness, tuple(clique))


def chi(G: Graph) -> int:
    return chromatic_number(G).chi


# --- cliques ----------------------------------------------------------------


def _colour_order(adj: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    order: list[int] = []
    bound: list[int] = []
    uncol = cand
    colour = 0
    while uncol:
        colour += 1
        q = uncol
        while q:
            low = q & -q
            v = low.bit_length() - 1
            order.append(v)
            bound.append(colour)
            uncol ^= low
            q &= ~adj[v] & ~low
    return order, bound


def max_clique_mask(adj: Sequence[int], mask: int) -> list[int]:
    """Maximum clique by branch and bound with greedy-colouring bounds."""
    best: list[int] = greedy_clique(adj, mask) if mask else []

    def expand(current: list[int], cand: int) -> None:
        nonlocal best
        order, bound = _colour_order(adj, cand)
        for idx in range(len(order) - 1, -1, -1):
            if len(current) + bound[idx] <= len(best):
                return
            v = order[idx]
            nxt = cand & adj[v]
            current.append(v)
            if nxt:
                expand(current, nxt)
            elif len(current) > len(best):
                best = sorted(current)
            current.pop()
            cand &= ~(1 << v)

    if mask:
        expand([], mask)
    return best


def clique_number(G: Graph) -> tuple[int, tuple[int, ...]]:
    if G.n == 0:
        raise InputError("clique number of the empty graph is not defined here")
    witness = max_clique_mask(G.adj, G.full_mask)
    return len(witness), tuple(witness)


def cliques_of_size(adj: Sequence[int], mask: int, size: int) -> Iterator[tuple[int, ...]]:
    """All cliques of exactly ``size`` vertices inside ``mask``, ascending-lexicographic."""
    if size == 0:
        yield ()
        return
    stack: list[int] = []

    def rec(cand: int, need: int) -> Iterator[tuple[int, ...]]:
        if need == 0:
            yield tuple(stack)
            return
        while cand and popcount(cand) >= need:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            stack.append(v)
            yield from rec(cand & adj[v], need - 1)
            stack.pop()

    yield from rec(mask, size)


def first_clique(adj: Sequence[int], mask: int, size: int) -> tuple[int, ...] | None:
    return next(cliques_of_size(adj, mask, size), None)


def is_weakly_perfect(G: Graph) -> bool:
    return clique_number(G)[0] == chromatic_number(G).chi


# --- perfectness ------------------------------------------------------------


def _independent_table(adj: Sequence[int], n: int) -> bytearray:
    table = bytearray(1 << n)
    table[0] = 1
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        table[mask] = table[rest] and not adj[v] & rest
    return table


def omega_table(adj: Sequence[int], n: int) -> bytearray:
    table = bytearray(1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        with_v = 1 + table[rest & adj[v]]
        table[mask] = max(table[rest], with_v)
    return table


def is_perfect(G: Graph, limit: int = PERFECT_LIMIT) -> bool:
    """Every induced subgraph has clique number equal to chromatic number.

    Sweeps subsets in increasing mask order. Once all proper subsets of a
    mask are known to satisfy the identity, their chromatic numbers equal
    their clique numbers, so the mask itself passes iff removing some
    independent set through its lowest vertex drops the clique number by
    exactly one.
    """
    if G.n > limit:
        raise CapabilityError(f"perfectness sweep limited to order {limit}, got {G.n}")
    n = G.n
    adj = G.adj
    indep = _independent_table(adj, n)
    omega = omega_table(adj, n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        target = omega[mask] - 1
        free = mask & ~adj[v] & ~low
        sub = free
        while True:
            chosen = sub | low
            if indep[chosen] and omega[mask ^ chosen] == target:
                break
            if sub == 0:
                return False
            sub = (sub - 1) & free
    return True


def chi_table(adj: Sequence[int], n: int) -> list[int]:
    """Chromatic number of every induced subgraph, indexed by vertex mask.

    Plain dynamic programming over subsets: peel off an independent set
    containing the lowest vertex. Independent of the backtracking solver, so
    it doubles as a reference for it.
    """
    indep = _independent_table(adj, n)
    table = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        free = mask & ~adj[v] & ~low
        best = n + 1
        sub = free
        while True:
            chosen = sub | low
            if indep[chosen]:
                c = table[mask ^ chosen]
                if c < best:
                    best = c
            if sub == 0:
                break
            sub = (sub - 1) & free
        table[mask] = best + 1
    return table


# --- independent sets and chi-minus colourings -----------------------------


def maximum_independent_sets(G: Graph, limit: int = MIS_LIMIT) -> list[tuple[int, ...]]:
    """All independent sets of maximum size, ascending-lexicographic."""
    if G.n > limit:
        raise CapabilityError(f"independent-set enumeration limited to order {limit}, got {G.n}")
    if G.n == 0:
        return [()]
    comp = complement(G).adj
    alpha = len(max_clique_mask(comp, G.full_mask))
    return list(cliques_of_size(comp, G.full_mask, alpha))


def chi_minus_coloring(G: Graph, limit: int = CHI_MINUS_LIMIT) -> Coloring:
    """Proper chromatic colouring whose class sizes are lexicographically largest.

    Class 1 is as large as possible subject to the rest still being colourable
    with the remaining colours, then class 2, and so on; among equal size
    vectors the lexicographically first classes win.
    """
    if G.n > limit:
        raise CapabilityError(f"chi-minus colouring limited to order {limit}, got {G.n}")
    if G.n == 0:
        return Coloring((), 0)
    adj = G.adj
    comp = complement(G).adj
    k = chromatic_number(G).chi
    memo: dict[tuple[int, int], tuple[tuple[int, ...], tuple[int, ...]] | None] = {}

    def best(rest: int, left: int):
        if left == 0:
            return ((), ()) if rest == 0 else None
        key = (rest, left)
        if key in memo:
            return memo[key]
        result = None
        alpha = len(max_clique_mask(comp, rest))
        for size in range(alpha, 0, -1):
            for ind in cliques_of_size(comp, rest, size):
                remaining = rest & ~to_mask(ind)
                if colorable_mask(adj, remaining, left - 1) is None:
                    continue
                tail = best(remaining, left - 1)
                if tail is None:
                    continue
                cand = ((size,) + tail[0], (to_mask(ind),) + tail[1])
                if result is None or cand[0] > result[0]:
                    result = cand
            if result is not None:
                break
        memo[key] = result
        return result

    found = best(G.full_mask, k)
    assert found is not None
    assignment = [0] * G.n
    for c, cm in enumerate(found[1]):
        for v in bits(cm):
            assignment[v] = c
    return Coloring(tuple(assignment), k)
