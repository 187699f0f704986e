import pytest
from hypothesis import given

from chromcore.corefinder import (
    CapabilityError,
    Minimality,
    core_si_lower_bound,
    critical_descent,
    enumerate_cores,
    find_core,
    is_vertex_critical,
    oracle_core,
)
from chromcore.corpus import connected_graphs, random_graph
from chromcore.errors import InputError
from chromcore.families import complete, cycle, helm, path, petersen, wheel
from chromcore.graph import (
    disjoint_union,
    find_isomorphism,
    induced_by_mask,
    induced_subgraph,
    mycielski,
    null_graph,
    structor_index,
)
from chromcore.products import ProductKind, product

from conftest import brute_chi, graphs


def _brute_core_si(G):
    k = brute_chi(G)
    best = None
    for mask in range(1, 1 << G.n):
        S = [v for v in range(G.n) if mask >> v & 1]
        H = induced_subgraph(G, S)
        if brute_chi(H) == k:
            si = structor_index(H)
            best = si if best is None else min(best, si)
    return best


@given(graphs(max_order=6))
def test_core_si_matches_brute_force(G):
    core = find_core(G)
    assert core.si == _brute_core_si(G)
    assert core.chi == brute_chi(G)


@given(graphs(max_order=8))
def test_find_core_matches_oracle(G):
    ours = find_core(G)
    ref = oracle_core(G)
    assert (ours.chi, ours.si) == (ref.chi, ref.si)
    assert ours.vertices == ref.vertices
    assert [c.vertices for c in enumerate_cores(G)] == list(ref.argmin)


@given(graphs(max_order=8))
def test_core_is_vertex_critical_and_connected(G):
    core = find_core(G)
    H = core.subgraph()
    assert H.is_connected()
    assert is_vertex_critical(H)
    assert core.si >= core_si_lower_bound(core.chi)


@pytest.mark.parametrize("G,si", [
    (cycle(6), 3), (cycle(7), 14), (wheel(4), 6), (wheel(5), 16), (petersen(), 10),
    (helm(4), 6), (helm(5), 16), (path(4), 3), (complete(1), 1), (null_graph(3), 1),
])
def test_known_cores(G, si):
    assert find_core(G).si == si


def test_c6_core_is_an_edge():
    core = find_core(cycle(6))
    assert core.vertices == (0, 1)
    assert len(enumerate_cores(cycle(6))) == 6


def test_odd_wheel_unique_core():
    cores = enumerate_cores(wheel(5))
    assert [c.vertices for c in cores] == [tuple(range(6))]


def test_petersen_cores_are_five_cycles():
    cores = enumerate_cores(petersen(), collapse_isomorphic=True)
    assert len(cores) == 1 and find_isomorphism(cores[0].subgraph(), cycle(5)) is not None
    assert len(enumerate_cores(petersen())) == 12


def test_component_reduction():
    G = disjoint_union(cycle(4), cycle(5), complete(3))
    core = find_core(G)
    assert core.si == 6 and core.vertices == (9, 10, 11)


def test_minimality_labels():
    assert find_core(complete(4)).minimality is Minimality.BOUND_MATCHED
    assert find_core(cycle(5)).minimality is Minimality.PRUNED_SEARCH
    assert oracle_core(cycle(5)).minimality is Minimality.ORACLE_VERIFIED


def test_capability_error_carries_partial_result():
    G = product(ProductKind.STRONG, cycle(5), cycle(5))
    with pytest.raises(CapabilityError) as info:
        find_core(G, limit=16)
    partial = info.value.partial
    assert partial["lower_bound"] == 16 and partial["best_si"] >= 16
    assert len(partial["best_vertices"]) <= 25


def test_search_limit_environment(monkeypatch):
    monkeypatch.setenv("CHROMCORE_SEARCH_LIMIT", "5")
    with pytest.raises(CapabilityError):
        find_core(cycle(7))
    monkeypatch.setenv("CHROMCORE_SEARCH_LIMIT", "x")
    with pytest.raises(InputError):
        find_core(cycle(7))


def test_clique_shortcut_ignores_limit():
    assert find_core(complete(30), limit=4).si == core_si_lower_bound(30)


def test_critical_descent_gives_critical_subgraph():
    G = mycielski(cycle(5))
    mask = critical_descent(G.adj, G.full_mask, 4)
    assert is_vertex_critical(induced_by_mask(G, mask))


def test_empty_graph_rejected():
    with pytest.raises(InputError):
        find_core(null_graph(0))


def test_oracle_equivalence_sweep():
    for G in connected_graphs(6):
        assert find_core(G).si == oracle_core(G).si
    for seed in range(40):
        G = random_graph(9, 0.5, seed)
        assert find_core(G).si == oracle_core(G).si
