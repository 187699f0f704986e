"""Claim registry and verifier.

Each claim pairs a closed corpus with a checker. A checker returns an
:class:`Outcome`; when it fails it attaches certificates, small facts about
a vertex subset of a concrete graph (chromatic number, structor index and
optionally clique number or criticality) that :func:`reverify_certificate`
recomputes from the graph primitives alone.

Claims of kind ``conjecture`` are hypotheses under test. A failure of a
``theorem`` claim means either an implementation bug or an incorrect
published statement; the certificates decide which.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product as cartesian_pairs
from typing import Any, Callable

from . import families as fam
from .coloring import (
    chi_minus_coloring,
    chi_table,
    chromatic_number,
    clique_number,
    is_perfect,
    is_weakly_perfect,
    maximum_independent_sets,
    omega_table,
)
from .corefinder import (
    CapabilityError,
    core_si_lower_bound,
    enumerate_cores,
    find_core,
    oracle_core,
    search_limit,
)
from .corpus import all_graphs, connected_graphs, is_self_complementary
from .errors import InputError
from .graph import (
    Graph,
    complement,
    diameter,
    find_isomorphism,
    induced_subgraph,
    line_graph,
    make_graph,
    mycielski,
    null_graph,
    structor_index,
)
from .io import GRAPH6_MAX_ORDER, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .products import ProductKind, embed, product

THEOREM = "theorem"
CONJECTURE = "conjecture"

DEFAULT_LIMITS = {
    "order": 6,  # largest order in "all connected graphs" corpora
    "search": None,  # core search limit for single graphs; None -> environment/default
    "product_search": 25,  # core search limit for product hosts
    "oracle": 10,  # largest product order sent to the brute-force oracle
    "mycielski_order": 6,  # largest base order for the Mycielski transport claim
}


class Skip(Exception):
    """Corpus item cannot be decided under the current limits."""


@dataclass
class Outcome:
    ok: bool
    detail: str = ""
    certificates: list[dict] = field(default_factory=list)


@dataclass
class Claim:
    id: str
    kind: str
    description: str
    corpus: Callable[[int, dict], list[tuple[str, Any]]]
    check: Callable[[Any, dict], Outcome]


@dataclass
class ClaimReport:
    claim_id: str
    kind: str
    description: str
    seed: int
    limits: dict
    corpus_size: int
    passes: int
    counterexamples: list[dict]
    skipped: list[dict]
    runtime_ms: float | None

    def to_json(self, timing: bool = True) -> dict:
        return {
            "claim_id": self.claim_id,
            "kind": self.kind,
            "description": self.description,
            "seed": self.seed,
            "limits": self.limits,
            "corpus_size": self.corpus_size,
            "passes": self.passes,
            "counterexamples": self.counterexamples,
            "skipped": self.skipped,
            "runtime_ms": self.runtime_ms if timing else None,
        }


# --- certificates -----------------------------------------------------------


def _encode(G: Graph) -> dict:
    if G.n <= GRAPH6_MAX_ORDER:
        return {"graph6": emit_graph6(G)}
    return {"edge_list": emit_edge_list(G)}


def _decode(cert: dict) -> Graph:
    if "graph6" in cert:
        return parse_graph6(cert["graph6"])
    return parse_edge_list(cert["edge_list"])


def _vertex_critical(H: Graph) -> bool:
    k = chromatic_number(H).chi
    return all(H.n == 1 or chromatic_number(induced_subgraph(H, [u for u in range(H.n) if u != v])).chi < k for v in range(H.n))


def _edge_critical(H: Graph) -> bool:
    k = chromatic_number(H).chi
    edges = H.edges()
    return all(chromatic_number(make_graph(H.n, [e for e in edges if e != drop])).chi < k for drop in edges)


def certificate(G: Graph, vertices, note: str, *, omega: bool = False, critical: bool = False,
                edge_critical: bool = False) -> dict:
    vertices = sorted(vertices)
    H = induced_subgraph(G, vertices)
    cert = {"note": note, **_encode(G), "vertices": vertices, "chi": chromatic_number(H).chi, "si": structor_index(H)}
    if omega:
        cert["omega"] = clique_number(H)[0]
    if critical:
        cert["vertex_critical"] = _vertex_critical(H)
    if edge_critical:
        cert["edge_critical"] = _edge_critical(H)
    return cert


def reverify_certificate(cert: dict) -> bool:
    """Recompute every fact a certificate states from its graph."""
    G = _decode(cert)
    if any(not 0 <= v < G.n for v in cert["vertices"]):
        return False
    H = induced_subgraph(G, cert["vertices"])
    if H.n == 0:
        return False
    if chromatic_number(H).chi != cert["chi"] or structor_index(H) != cert["si"]:
        return False
    if "omega" in cert and clique_number(H)[0] != cert["omega"]:
        return False
    if "vertex_critical" in cert and _vertex_critical(H) != cert["vertex_critical"]:
        return False
    if "edge_critical" in cert and _edge_critical(H) != cert["edge_critical"]:
        return False
    return True


# --- shared helpers -----------------------------------------------------------


def _core(G: Graph, ctx: dict, key: str = "search"):
    limit = ctx.get(key)
    try:
        return find_core(G, limit=limit)
    except CapabilityError as exc:
        raise Skip(f"{exc} (best si {exc.partial.get('best_si')})") from None


def _cores(G: Graph, ctx: dict, key: str = "search"):
    try:
        return enumerate_cores(G, limit=ctx.get(key))
    except CapabilityError as exc:
        raise Skip(str(exc)) from None


def _si_of(G: Graph, vertices) -> int:
    return structor_index(induced_subgraph(G, vertices))


def _chi_of(G: Graph, vertices) -> int:
    return chromatic_number(induced_subgraph(G, vertices)).chi


def _is_odd_cycle(G: Graph) -> bool:
    return G.n >= 3 and G.n % 2 == 1 and G.is_connected() and all(d == 2 for d in G.degrees())


def _unique_whole(G: Graph, ctx: dict, note: str) -> Outcome:
    cores = _cores(G, ctx)
    whole = tuple(range(G.n))
    if [c.vertices for c in cores] == [whole]:
        return Outcome(True)
    other = next(c for c in cores if c.vertices != whole)
    return Outcome(False, f"{note}: a core other than the whole graph exists",
                   [certificate(G, other.vertices, "smaller or alternative core"),
                    certificate(G, whole, "whole graph")])


def _label(G: Graph) -> str:
    return f"g6:{emit_graph6(G)}"


def _connected(ctx: dict, min_order: int = 1):
    return [(_label(G), G) for G in connected_graphs(ctx["order"], min_order)]


def _predicted_cores(host: Graph, predicted: list, ctx: dict, key: str, use_oracle: bool = False) -> Outcome:
    """Every predicted vertex set must be a core of ``host``."""
    if use_oracle:
        if host.n > ctx["oracle"]:
            raise Skip(f"product order {host.n} above oracle limit {ctx['oracle']}")
        actual = oracle_core(host, limit=ctx["oracle"])
    else:
        actual = _core(host, ctx, key)
    for pred in predicted:
        si = _si_of(host, pred)
        chi = _chi_of(host, pred)
        if chi != actual.chi or si != actual.si:
            return Outcome(False, f"predicted subgraph has chi {chi}, si {si}; core has chi {actual.chi}, si {actual.si}",
                           [certificate(host, actual.vertices, "core of host"),
                            certificate(host, pred, "predicted subgraph")])
    return Outcome(True)


def _named(pairs):
    return [(f"{a}|{b}", (G, H)) for (a, G), (b, H) in pairs]


BASE_FACTORS = [
    ("K1", fam.complete(1)),
    ("K2", fam.complete(2)),
    ("P3", fam.path(3)),
    ("C4", fam.cycle(4)),
    ("C5", fam.cycle(5)),
    ("K3", fam.complete(3)),
    ("K4", fam.complete(4)),
]

LEX_FACTORS = [
    ("P2", fam.path(2)),
    ("P3", fam.path(3)),
    ("C4", fam.cycle(4)),
    ("C5", fam.cycle(5)),
    ("K3", fam.complete(3)),
]

MAX_CORE_COMBOS = 64


def _core_sets(G: Graph, ctx: dict) -> list[tuple[int, ...]]:
    return [c.vertices for c in _cores(G, ctx)]


def _combos(a: list, b: list) -> list:
    return list(cartesian_pairs(a, b))[:MAX_CORE_COMBOS]


# --- single-graph claims -------------------------------------------------------


def _check_lemma_21(G: Graph, ctx: dict) -> Outcome:
    predicted = not (G.is_complete() or _is_odd_cycle(G))
    core = _core(G, ctx)
    actual = core.si < structor_index(G)
    if predicted == actual:
        return Outcome(True)
    if actual:
        return Outcome(False, "complete graph or odd cycle with a proper core",
                       [certificate(G, core.vertices, "proper core")])
    return Outcome(False, "neither complete nor an odd cycle, yet every proper subgraph has smaller chromatic number",
                   [certificate(G, range(G.n), "whole graph is critical", critical=True, edge_critical=True)])


def _check_core_edge(G: Graph, ctx: dict) -> Outcome:
    core = _core(G, ctx)
    if core.si == 3 and len(core.vertices) == 2:
        return Outcome(True)
    return Outcome(False, f"core has si {core.si}", [certificate(G, core.vertices, "core")])


def _check_core_triangle(G: Graph, ctx: dict) -> Outcome:
    core = _core(G, ctx)
    if core.si == 6 and core.subgraph().is_complete() and core.subgraph().n == 3:
        return Outcome(True)
    return Outcome(False, f"core has si {core.si}", [certificate(G, core.vertices, "core")])


def _check_unique_whole(G: Graph, ctx: dict) -> Outcome:
    return _unique_whole(G, ctx, "expected the whole graph as unique core")


def _check_odd_helm(item, ctx: dict) -> Outcome:
    n, G = item
    cores = _cores(G, ctx)
    W = fam.wheel(n)
    if len(cores) == 1 and find_isomorphism(cores[0].subgraph(), W) is not None:
        return Outcome(True)
    return Outcome(False, f"{len(cores)} cores, first with si {cores[0].si}",
                   [certificate(G, c.vertices, "core") for c in cores[:4]])


def _check_mycielski(G: Graph, ctx: dict) -> Outcome:
    MG = mycielski(G)
    actual = _core(MG, ctx)
    n = G.n
    for core in _cores(G, ctx):
        S = core.vertices
        image = list(S) + [n + v for v in S] + [2 * n]
        si = _si_of(MG, image)
        if si != actual.si or _chi_of(MG, image) != actual.chi:
            return Outcome(False, f"Mycielskian of core {list(S)} has si {si}; core of the Mycielskian has si {actual.si}",
                           [certificate(MG, actual.vertices, "core of the Mycielskian"),
                            certificate(MG, image, "Mycielskian of a core of the base graph"),
                            certificate(G, S, "core of the base graph")])
    return Outcome(True)


def _check_min_si(G: Graph, ctx: dict) -> Outcome:
    k = chromatic_number(G).chi
    lower = core_si_lower_bound(k)
    si = structor_index(G)
    if si > lower or (si == lower and G.is_complete() and G.n == k):
        return Outcome(True)
    return Outcome(False, f"chi {k} with si {si} against bound {lower}", [certificate(G, range(G.n), "graph")])


def _check_clique_core(G: Graph, ctx: dict) -> Outcome:
    omega, clique = clique_number(G)
    core = _core(G, ctx)
    if core.si == core_si_lower_bound(omega) and core.chi == omega:
        return Outcome(True)
    return Outcome(False, f"largest clique has si {core_si_lower_bound(omega)}, core has si {core.si}",
                   [certificate(G, core.vertices, "core"), certificate(G, clique, "largest clique", omega=True)])


def _corpus_weakly_perfect(seed: int, ctx: dict):
    return [(label, G) for label, G in _connected(ctx) if is_weakly_perfect(G)]


def _corpus_not_weakly_perfect(seed: int, ctx: dict):
    return [(label, G) for label, G in _connected(ctx) if not is_weakly_perfect(G)]


JACO_FUNCTIONS = [(1, 0), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0), (0, 1), (0, 2), (0, 3)]


def _corpus_jaco(seed: int, ctx: dict):
    return [(spec.token(), fam.jaco_graph(spec))
            for m, c in JACO_FUNCTIONS for n in range(1, 13)
            for spec in [fam.JacoSpec(n, m, c)]]


def _check_perfect(G: Graph, ctx: dict) -> Outcome:
    if is_perfect(G):
        return Outcome(True)
    chis = chi_table(G.adj, G.n)
    omegas = omega_table(G.adj, G.n)
    bad = next(m for m in range(1, 1 << G.n) if chis[m] != omegas[m])
    return Outcome(False, "induced subgraph with chromatic number above clique number",
                   [certificate(G, [v for v in range(G.n) if bad >> v & 1], "imperfect induced subgraph", omega=True)])


# --- products -------------------------------------------------------------------


def _check_join(item, ctx: dict) -> Outcome:
    G, H = item
    host = product(ProductKind.JOIN, G, H)
    preds = [embed(ProductKind.JOIN, G, H, a, b) for a, b in _combos(_core_sets(G, ctx), _core_sets(H, ctx))]
    return _predicted_cores(host, preds, ctx, "product_search")


def _check_corona(item, ctx: dict) -> Outcome:
    G, H = item
    chi_g, chi_h = chromatic_number(G).chi, chromatic_number(H).chi
    if chi_g > chi_h + 1:
        raise Skip(f"outside hypothesis chi(G) <= chi(H) + 1 (chi(G)={chi_g}, chi(H)={chi_h})")
    host = product(ProductKind.CORONA, G, H)
    preds = [embed(ProductKind.CORONA, G, H, (0,), b) for b in _core_sets(H, ctx)]
    return _predicted_cores(host, preds, ctx, "product_search")


def _factor_core_sets(G: Graph, H: Graph, ctx: dict, pick) -> list:
    chi_g, chi_h = chromatic_number(G).chi, chromatic_number(H).chi
    target = pick(chi_g, chi_h)
    options = []
    if chi_g == target:
        options += [("G", s, _si_of(G, s)) for s in _core_sets(G, ctx)]
    if chi_h == target:
        options += [("H", s, _si_of(H, s)) for s in _core_sets(H, ctx)]
    best = min(si for _, _, si in options)
    return [(side, s) for side, s, si in options if si == best]


def _check_cartesian(item, ctx: dict) -> Outcome:
    G, H = item
    host = product(ProductKind.CARTESIAN, G, H)
    preds = [embed(ProductKind.CARTESIAN, G, H, s, (0,)) if side == "G" else embed(ProductKind.CARTESIAN, G, H, (0,), s)
             for side, s in _factor_core_sets(G, H, ctx, max)]
    return _predicted_cores(host, preds, ctx, "product_search")


def _check_tensor(item, ctx: dict) -> Outcome:
    G, H = item
    host = product(ProductKind.TENSOR, G, H)
    actual = _core(host, ctx, "product_search")
    chi_g, chi_h = chromatic_number(G).chi, chromatic_number(H).chi
    options = _factor_core_sets(G, H, ctx, min)
    side, s = options[0]
    factor = G if side == "G" else H
    predicted = induced_subgraph(factor, s)
    if actual.chi == min(chi_g, chi_h) and actual.si == structor_index(predicted):
        return Outcome(True)
    return Outcome(False, f"tensor product has chi {actual.chi} and core si {actual.si}; "
                          f"predicted chi {min(chi_g, chi_h)} and si {structor_index(predicted)}",
                   [certificate(host, actual.vertices, "core of tensor product"),
                    certificate(factor, s, f"core of factor {side}")])


def _check_factor_product(kind: ProductKind, use_oracle: bool):
    def check(item, ctx: dict) -> Outcome:
        G, H = item
        if use_oracle and G.n * H.n > ctx["oracle"]:
            raise Skip(f"product order {G.n * H.n} above oracle limit {ctx['oracle']}")
        host = product(kind, G, H)
        preds = [embed(kind, G, H, a, b) for a, b in _combos(_core_sets(G, ctx), _core_sets(H, ctx))]
        return _predicted_cores(host, preds, ctx, "product_search", use_oracle=use_oracle)

    return check


def _check_edge_counts(item, ctx: dict) -> Outcome:
    G, H = item
    strong = product(ProductKind.STRONG, G, H)
    lex = product(ProductKind.LEXICOGRAPHIC, G, H)
    if strong.size <= lex.size:
        return Outcome(True)
    return Outcome(False, f"strong product has {strong.size} edges, lexicographic {lex.size}",
                   [certificate(strong, range(strong.n), "strong product"), certificate(lex, range(lex.n), "lexicographic product")])


def _base_pairs(seed: int, ctx: dict):
    return _named(cartesian_pairs(BASE_FACTORS, BASE_FACTORS))


def _small_connected_pairs(seed: int, ctx: dict):
    graphs = [(_label(G), G) for G in connected_graphs(4)]
    return _named(cartesian_pairs(graphs, graphs))


def _lex_pairs(seed: int, ctx: dict):
    return _named(cartesian_pairs(LEX_FACTORS, LEX_FACTORS))


# --- complements ------------------------------------------------------------------


def _check_complement_existence(G: Graph, ctx: dict) -> Outcome:
    Gc = complement(G)
    predicted = not (G.is_complete() or (G.n == 5 and _is_odd_cycle(G)))
    core = _core(Gc, ctx)
    actual = core.si < structor_index(Gc)
    if predicted == actual:
        return Outcome(True)
    if actual:
        return Outcome(False, "complement has a proper core although the graph is complete or a 5-cycle",
                       [certificate(Gc, core.vertices, "proper core of the complement")])
    return Outcome(False, "complement has no proper core",
                   [certificate(Gc, range(Gc.n), "complement is vertex-critical", critical=True)])


def _shared_core_class(G: Graph, Gc: Graph, ctx: dict):
    mine = _cores(G, ctx)
    theirs = _cores(Gc, ctx)
    for a in mine:
        for b in theirs:
            if a.si == b.si and find_isomorphism(a.subgraph(), b.subgraph(), limit=None) is not None:
                return a, b
    return None


def _check_complement_theorem(G: Graph, ctx: dict) -> Outcome:
    Gc = complement(G)
    predicted = find_isomorphism(G, fam.path(3), limit=None) is not None or is_self_complementary(G)
    shared = _shared_core_class(G, Gc, ctx)
    if predicted == (shared is not None):
        return Outcome(True)
    a, b = find_core(G, ctx.get("search")), find_core(Gc, ctx.get("search"))
    if shared is not None:
        a, b = shared
        detail = "graph is neither P3 nor self-complementary, yet it and its complement have isomorphic cores"
    else:
        detail = "no core of the complement is isomorphic to a core of the graph"
    return Outcome(False, detail, [certificate(G, a.vertices, "core of the graph"),
                                   certificate(Gc, b.vertices, "core of the complement")])


def _check_complement_clique(G: Graph, ctx: dict) -> Outcome:
    return _check_clique_core(complement(G), ctx)


def _check_complement_unique(G: Graph, ctx: dict) -> Outcome:
    return _unique_whole(complement(G), ctx, "complement expected as its own unique core")


def _check_chi_minus(G: Graph, ctx: dict) -> Outcome:
    colouring = chi_minus_coloring(G)
    first = colouring.classes()[0]
    Gc = complement(G)
    core = _core(Gc, ctx)
    in_mis = first in maximum_independent_sets(G)
    si = _si_of(Gc, first)
    chi = _chi_of(Gc, first)
    if in_mis and si == core.si and chi == core.chi:
        return Outcome(True)
    return Outcome(False, f"first colour class maximum independent: {in_mis}; its clique in the complement has "
                          f"chi {chi}, si {si}; complement core has chi {core.chi}, si {core.si}",
                   [certificate(Gc, first, "first colour class in the complement"),
                    certificate(Gc, core.vertices, "core of the complement")])


# --- line graphs of trees -----------------------------------------------------------


def _corpus_trees(seed: int, ctx: dict):
    rng = random.Random(seed)
    items = []
    for _ in range(100):
        n = rng.randint(2, 10)
        tree_seed = rng.randrange(2**32)
        items.append((f"random_tree:{n},{tree_seed}", fam.random_tree(n, tree_seed)))
    items += [(f"null:{n}", null_graph(n)) for n in range(1, 5)]
    return items


def _check_line_tree(T: Graph, ctx: dict) -> Outcome:
    if T.size == 0:
        # edgeless host: its line graph is taken to be edgeless of the same order
        core = find_core(T)
        return Outcome(core.si == 1, "" if core.si == 1 else "edgeless graph core is not K1",
                       [] if core.si == 1 else [certificate(T, core.vertices, "core")])
    L = line_graph(T)
    core = _core(L, ctx)
    sub = core.subgraph()
    omega = clique_number(L)[0]
    expected = T.max_degree()
    if sub.is_complete() and sub.n == omega == expected:
        return Outcome(True)
    return Outcome(False, f"core of the line graph has order {sub.n}; maximum degree of the tree is {expected}",
                   [certificate(L, core.vertices, "core of the line graph", omega=True)])


# --- strong product facts ------------------------------------------------------------


def _corpus_k4_facts(seed: int, ctx: dict):
    items = [(f"P{n}*P{m}", (fam.path(n), fam.path(m))) for n in (2, 3, 4) for m in (2, 3, 4)]
    items += [(f"C{c}*P{p}", (fam.cycle(c), fam.path(p))) for c in (4, 6) for p in (2, 4)]
    return items


def _corpus_k5_facts(seed: int, ctx: dict):
    return [("C5*C5", (fam.cycle(5), fam.cycle(5))), ("C5*C7", (fam.cycle(5), fam.cycle(7)))]


def _check_strong_fact(k: int):
    def check(item, ctx: dict) -> Outcome:
        G, H = item
        host = product(ProductKind.STRONG, G, H)
        core = _core(host, ctx, "product_search")
        sub = core.subgraph()
        if core.chi == k and sub.is_complete() and sub.n == k:
            return Outcome(True)
        return Outcome(False, f"strong product has chi {core.chi}, core of order {sub.n} and si {core.si}",
                       [certificate(host, range(host.n), "whole product", omega=True),
                        certificate(host, core.vertices, "core", omega=True, critical=True)])

    return check


# --- registry -----------------------------------------------------------------------


def _families(items):
    return lambda seed, ctx: [(tok, fam.from_token(tok)) for tok in items]


def _corpus_trees_small(seed: int, ctx: dict):
    small = [(_label(G), G) for G in connected_graphs(ctx["order"], 2) if G.size == G.n - 1]
    return small + [item for item in _corpus_trees(seed, ctx) if item[1].n >= 2 and item[1].is_connected()]


def _corpus_diam_one(seed: int, ctx: dict):
    return [(label, G) for label, G in _connected(ctx, 2) if diameter(G) == 1]


def _corpus_brooks(seed: int, ctx: dict):
    return [(label, G) for label, G in _connected(ctx) if chromatic_number(G).chi == G.max_degree() + 1]


def _corpus_mycielski(seed: int, ctx: dict):
    return [(_label(G), G) for G in connected_graphs(ctx["mycielski_order"])]


def _corpus_all_small(seed: int, ctx: dict):
    return [(_label(G), G) for G in all_graphs(min(ctx["order"], 6))]


def _corpus_odd_helms(seed: int, ctx: dict):
    return [(f"helm:{n}", (n, fam.helm(n))) for n in (3, 5, 7)]


REGISTRY: dict[str, Claim] = {}


def _register(*claims: Claim) -> None:
    for c in claims:
        if c.id in REGISTRY:
            raise ValueError(f"duplicate claim id {c.id}")
        REGISTRY[c.id] = c


_register(
    Claim("lemma-2.1", THEOREM,
          "A connected graph has a proper induced subgraph of equal chromatic number iff it is neither complete nor an odd cycle.",
          lambda seed, ctx: _connected(ctx), _check_lemma_21),
    Claim("prop-2.2-i", THEOREM, "Every tree on at least two vertices has an edge as a core.",
          _corpus_trees_small, _check_core_edge),
    Claim("prop-2.2-ii", THEOREM, "Even cycles have an edge as a core.",
          _families([f"cycle:{n}" for n in range(4, 13, 2)]), _check_core_edge),
    Claim("prop-2.2-iii", THEOREM, "An odd cycle is its own unique core.",
          _families([f"cycle:{n}" for n in (3, 5, 7, 9)]), _check_unique_whole),
    Claim("prop-2.2-iv", THEOREM, "A complete graph is its own unique core.",
          _families([f"complete:{n}" for n in range(1, 7)]), _check_unique_whole),
    Claim("prop-2.2-v", THEOREM, "Wheels with an even rim have a triangle as a core.",
          _families([f"wheel:{n}" for n in (4, 6, 8, 10)]), _check_core_triangle),
    Claim("prop-2.2-vi", THEOREM, "Wheels with an odd rim are their own unique core.",
          _families([f"wheel:{n}" for n in (3, 5, 7, 9)]), _check_unique_whole),
    Claim("prop-2.2-vii", THEOREM, "Helms with an even rim have a triangle as a core.",
          _families([f"helm:{n}" for n in (4, 6, 8)]), _check_core_triangle),
    Claim("prop-2.2-viii", THEOREM, "Helms with an odd rim have their wheel as unique core.",
          _corpus_odd_helms, _check_odd_helm),
    Claim("prop-2.2-ix", THEOREM, "A graph of diameter one is its own unique core.",
          _corpus_diam_one, _check_unique_whole),
    Claim("prop-2.2-x", THEOREM, "A graph with chromatic number one above its maximum degree is its own unique core.",
          _corpus_brooks, _check_unique_whole),
    Claim("prop-2.2-xi", THEOREM, "The Mycielskian of any core of G is a core of the Mycielskian of G.",
          _corpus_mycielski, _check_mycielski),
    Claim("thm-2.3", THEOREM, "K_k is the unique k-chromatic graph of least structor index.",
          _corpus_all_small, _check_min_si),
    Claim("cor-2.3-i", THEOREM, "In a weakly perfect graph a largest clique is a core.",
          _corpus_weakly_perfect, _check_clique_core),
    Claim("cor-2.3-ii", THEOREM, "A graph that is not weakly perfect is its own unique core.",
          _corpus_not_weakly_perfect, _check_unique_whole),
    Claim("thm-jaco-perfect", THEOREM, "Finite linear Jaco graphs are perfect.",
          _corpus_jaco, _check_perfect),
    Claim("cor-jaco-clique", THEOREM, "A largest clique is a core of every finite linear Jaco graph.",
          _corpus_jaco, _check_clique_core),
    Claim("thm-3.1", THEOREM, "The join of cores of G and H is a core of the join G + H.",
          _base_pairs, _check_join),
    Claim("thm-3.2", THEOREM,
          "A vertex of G joined to its copy of a core of H is a core of the corona of G and H "
          "(tested where chi(G) <= chi(H) + 1, the range in which chi of the corona is chi(H) + 1).",
          _base_pairs, _check_corona),
    Claim("thm-3.3", THEOREM, "A core of the factor of larger chromatic number is a core of the Cartesian product.",
          _small_connected_pairs, _check_cartesian),
    Claim("conj-3.4", CONJECTURE,
          "The tensor product has chromatic number min(chi(G), chi(H)) and a core of the matching factor as core.",
          _base_pairs, _check_tensor),
    Claim("conj-3.5", CONJECTURE, "The strong product of cores of G and H is a core of the strong product.",
          _base_pairs, _check_factor_product(ProductKind.STRONG, False)),
    Claim("lemma-3.4", THEOREM, "The strong product never has more edges than the lexicographic product.",
          _small_connected_pairs, _check_edge_counts),
    Claim("conj-3.6", CONJECTURE, "The lexicographic product of cores of G and H is a core of the lexicographic product.",
          _lex_pairs, _check_factor_product(ProductKind.LEXICOGRAPHIC, True)),
    Claim("prop-complement-existence", THEOREM,
          "The complement of a connected graph has a proper induced subgraph of equal chromatic number iff the graph is "
          "neither complete nor a 5-cycle.",
          lambda seed, ctx: _connected(ctx), _check_complement_existence),
    Claim("thm-complement", THEOREM,
          "A connected graph and its complement have isomorphic cores iff the graph is P3 or self-complementary.",
          lambda seed, ctx: _connected(ctx), _check_complement_theorem),
    Claim("cor-complement-i", THEOREM, "For a weakly perfect graph a largest clique of the complement is a core of the complement.",
          _corpus_weakly_perfect, _check_complement_clique),
    Claim("cor-complement-ii", THEOREM, "For a graph that is not weakly perfect the complement is its own unique core.",
          _corpus_not_weakly_perfect, _check_complement_unique),
    Claim("prop-chi-minus", THEOREM,
          "In a weakly perfect graph the first class of a chi-minus colouring is a maximum independent set whose clique "
          "in the complement is a core of the complement.",
          _corpus_weakly_perfect, _check_chi_minus),
    Claim("thm-line-tree", THEOREM, "The line graph of a tree has a maximum clique as a core.",
          _corpus_trees, _check_line_tree),
    Claim("fact-strong-k4", THEOREM, "Strong products of paths, and of even cycles with even paths, are 4-chromatic with K4 as core.",
          _corpus_k4_facts, _check_strong_fact(4)),
    Claim("fact-strong-k5", THEOREM, "Strong products of two odd cycles of length at least five are 5-chromatic with K5 as core.",
          _corpus_k5_facts, _check_strong_fact(5)),
)


def claim_ids() -> list[str]:
    return list(REGISTRY)


def verify_claim(claim_id: str, corpus_seed: int = 0, size_limits: dict | None = None) -> ClaimReport:
    if claim_id not in REGISTRY:
        raise InputError(f"unknown claim {claim_id!r}")
    claim = REGISTRY[claim_id]
    ctx = dict(DEFAULT_LIMITS)
    ctx.update(size_limits or {})
    if ctx["search"] is None:
        ctx["search"] = search_limit()
    start = time.perf_counter()
    items = claim.corpus(corpus_seed, ctx)
    passes = 0
    counterexamples = []
    skipped = []
    for label, payload in items:
        try:
            outcome = claim.check(payload, ctx)
        except Skip as exc:
            skipped.append({"instance": label, "reason": str(exc)})
            continue
        if outcome.ok:
            passes += 1
        else:
            counterexamples.append({"instance": label, "detail": outcome.detail, "certificates": outcome.certificates})
    for cx in counterexamples:
        for cert in cx["certificates"]:
            if not reverify_certificate(cert):
                raise AssertionError(f"certificate for {claim_id} / {cx['instance']} does not re-verify")
    elapsed = (time.perf_counter() - start) * 1000
    limits = {k: ctx[k] for k in sorted(ctx)}
    return ClaimReport(claim.id, claim.kind, claim.description, corpus_seed, limits, len(items), passes,
                       counterexamples, skipped, round(elapsed, 1))
