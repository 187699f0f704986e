"""Generators for the named graph families, linear Jaco graphs and random trees.

Conventions: ``path(n)`` has n vertices; ``wheel(n)`` is a hub (vertex 0)
joined to a rim cycle on vertices 1..n; ``helm(n)`` adds a pendant ``n + i``
to rim vertex ``i``; ``star(n)`` is K_{1,n} with the hub at 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, make_graph, null_graph

FAMILY_NAMES = (
    "null",
    "path",
    "cycle",
    "complete",
    "complete_bipartite",
    "wheel",
    "helm",
    "star",
    "random_tree",
    "petersen",
)

# (minimum value per parameter, number of parameters)
_PARAM_RULES = {
    "null": ((0,), 1),
    "path": ((1,), 1),
    "cycle": ((3,), 1),
    "complete": ((1,), 1),
    "complete_bipartite": ((1, 1), 2),
    "wheel": ((3,), 1),
    "helm": ((3,), 1),
    "star": ((1,), 1),
    "random_tree": ((1,), 1),
    "petersen": ((), 0),
}


@dataclass(frozen=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]
    seed: int | None = None

    def __post_init__(self):
        if self.name not in _PARAM_RULES:
            raise InputError(f"unknown family {self.name!r}")
        mins, count = _PARAM_RULES[self.name]
        if len(self.params) != count:
            raise InputError(f"{self.name} takes {count} parameter(s), got {len(self.params)}")
        for value, low in zip(self.params, mins):
            if value < low:
                raise InputError(f"{self.name} parameter {value} below minimum {low}")
        if self.name == "random_tree" and self.seed is None:
            raise InputError("random_tree needs a seed")

    def token(self) -> str:
        values = list(self.params)
        if self.seed is not None:
            values.append(self.seed)
        return f"{self.name}:" + ",".join(map(str, values))


@dataclass(frozen=True)
class JacoSpec:
    """Finite linear Jaco graph of order ``n`` for ``f(x) = m*x + c``."""

    n: int
    m: int = 1
    c: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise InputError(f"Jaco order must be >= 1, got {self.n}")
        if self.m < 0 or self.c < 0:
            raise InputError("Jaco slope and intercept must be non-negative")

    def f(self, x: int) -> int:
        return self.m * x + self.c

    def token(self) -> str:
        return f"jaco:{self.n},{self.m},{self.c}"


def parse_family(token: str) -> FamilySpec | JacoSpec:
    """Parse ``name:p1,p2,...``; for ``random_tree`` the last value is the seed."""
    name, sep, rest = token.partition(":")
    if not sep:
        raise InputError(f"family token {token!r} needs the form name:params")
    try:
        values = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise InputError(f"non-integer parameter in {token!r}") from None
    if name == "jaco":
        if len(values) != 3:
            raise InputError("jaco takes n,m,c")
        return JacoSpec(*values)
    if name == "random_tree":
        if len(values) != 2:
            raise InputError("random_tree takes n,seed")
        return FamilySpec(name, (values[0],), seed=values[1])
    return FamilySpec(name, tuple(values))


def generate(spec: FamilySpec | JacoSpec) -> Graph:
    if isinstance(spec, JacoSpec):
        return jaco_graph(spec)
    p = spec.params
    if spec.name == "null":
        return null_graph(p[0])
    if spec.name == "path":
        return path(p[0])
    if spec.name == "cycle":
        return cycle(p[0])
    if spec.name == "complete":
        return complete(p[0])
    if spec.name == "complete_bipartite":
        return complete_bipartite(p[0], p[1])
    if spec.name == "wheel":
        return wheel(p[0])
    if spec.name == "helm":
        return helm(p[0])
    if spec.name == "star":
        return complete_bipartite(1, p[0])
    if spec.name == "petersen":
        return petersen()
    return random_tree(p[0], spec.seed)


def from_token(token: str) -> Graph:
    return generate(parse_family(token))


def path(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InputError(f"cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(n: int) -> Graph:
    return complete_bipartite(1, n)


def wheel(n: int) -> Graph:
    if n < 3:
        raise InputError(f"wheel rim needs at least 3 vertices, got {n}")
    rim = [(1 + i, 1 + (i + 1) % n) for i in range(n)]
    return make_graph(n + 1, rim + [(0, i) for i in range(1, n + 1)])


def helm(n: int) -> Graph:
    W = wheel(n)
    return make_graph(2 * n + 1, W.edges() + [(i, n + i) for i in range(1, n + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return make_graph(10, outer + inner + spokes)


def jaco_digraph(spec: JacoSpec) -> list[tuple[int, int]]:
    """Arcs ``(i, j)`` with 1-based vertex labels, built target by target.

    When target ``j`` is processed every earlier vertex already has its final
    in-degree, so the arc rule ``f(i) + i - indeg(i) >= j`` is well defined.
    """
    indeg = [0] * (spec.n + 1)
    arcs = []
    for j in range(2, spec.n + 1):
        for i in range(1, j):
            if spec.f(i) + i - indeg[i] >= j:
                arcs.append((i, j))
                indeg[j] += 1
    return arcs


def jaco_graph(spec: JacoSpec) -> Graph:
    """Underlying undirected graph; vertex ``v_i`` becomes index ``i - 1``."""
    return make_graph(spec.n, [(i - 1, j - 1) for i, j in jaco_digraph(spec)])


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = degree.index(1)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree from a Pruefer sequence drawn with ``random.Random(seed)``."""
    if n < 1:
        raise InputError(f"tree needs at least one vertex, got {n}")
    if n == 1:
        return null_graph(1)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return make_graph(n, prufer_decode(seq, n))
