"""graph6 codec for graphs on at most 62 vertices."""

from __future__ import annotations

from .graphs import Graph, GraphError

MAX_ORDER = 62


class Graph6Error(GraphError):
    pass


def _pair_bits(n: int):
    # upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_g6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside graph6 range 63..126")
    n = ord(s[0]) - 63
    if n > MAX_ORDER:
        raise Graph6Error("graphs with more than 62 vertices are not supported")
    if n < 1:
        raise Graph6Error("graph6 string encodes an empty graph")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated: expected {nbytes} data bytes, got {len(body)}")
    if len(body) > nbytes:
        raise Graph6Error(f"trailing garbage after {nbytes} data bytes")
    bits = 0
    for ch in body:
        bits = bits << 6 | (ord(ch) - 63)
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bits >>= pad
    adj = [0] * n
    for k, (i, j) in enumerate(_pair_bits(n)):
        if bits >> (nbits - 1 - k) & 1:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def emit_g6(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise Graph6Error("graphs with more than 62 vertices are not supported")
    out = [chr(g.n + 63)]
    chunk = 0
    filled = 0
    for i, j in _pair_bits(g.n):
        chunk = chunk << 1 | (g.adj[i] >> j & 1)
        filled += 1
        if filled == 6:
            out.append(chr(chunk + 63))
            chunk = filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)
