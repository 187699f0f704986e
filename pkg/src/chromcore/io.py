"""graph6 (short form) and plain edge-list serialization."""

from __future__ import annotations

from .errors import InputError
from .graph import Graph, make_graph

GRAPH6_MAX_ORDER = 62


class Graph6Error(InputError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


def emit_graph6(G: Graph) -> str:
    if G.n > GRAPH6_MAX_ORDER:
        raise InputError(f"short graph6 form holds at most {GRAPH6_MAX_ORDER} vertices, got {G.n}")
    bitlist = [int(G.has_edge(i, j)) for j in range(1, G.n) for i in range(j)]
    bitlist += [0] * (-len(bitlist) % 6)
    chars = [chr(G.n + 63)]
    for k in range(0, len(bitlist), 6):
        value = 0
        for b in bitlist[k:k + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 string", 0)
    for offset, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside the graph6 range", offset)
    n = ord(text[0]) - 63
    if n > GRAPH6_MAX_ORDER:
        raise Graph6Error("long-form graph6 orders are not supported", 0)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(text) < expected:
        raise Graph6Error(f"truncated bit field: need {expected} bytes, got {len(text)}", len(text))
    if len(text) > expected:
        raise Graph6Error("trailing bytes after bit field", expected)
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(text[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    rem = nbits % 6
    if rem and (ord(text[-1]) - 63) & ((1 << (6 - rem)) - 1):
        raise Graph6Error("nonzero padding bits", expected - 1)
    return make_graph(n, edges)


def emit_edge_list(G: Graph) -> str:
    edges = G.edges()
    lines = [f"{G.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """First line ``n m``, then ``m`` lines ``u v`` with 0-based endpoints."""
    rows = [line.split() for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
    if not rows:
        raise InputError("edge list is empty")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in row) for row in rows[1:]]
    except ValueError:
        raise InputError("edge list entries must be integers") from None
    if len(header) != 2:
        raise InputError("edge list header must be 'n m'")
    n, m = header
    if len(body) != m:
        raise InputError(f"edge list header announces {m} edges, found {len(body)}")
    for row in body:
        if len(row) != 2:
            raise InputError(f"edge line {row} must hold two vertices")
    return make_graph(n, body)
