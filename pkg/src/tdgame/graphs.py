"""Small simple graphs stored as neighbor bitmasks.

Vertex sets are plain Python ints used as bitsets: bit ``v`` is set iff
vertex ``v`` is a member.  That gives O(1) hashing for the game solver and
cheap union/difference/popcount everywhere else.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from itertools import combinations

ENUMERATION_CAP = 7


class GraphError(ValueError):
    """Raised for invalid graph construction parameters."""


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of the open neighborhood N(v).
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise GraphError(f"neighbor of {v} out of range")
            if nb >> v & 1:
                raise GraphError(f"self-loop at {v}")
            for u in members(nb):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # skips the O(n^2) validation; only for adjacency built symmetric by construction
        g = cls.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(members(self.adj[v]))

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self.neighbors(v) | {v}

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u]) if u < v]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def isolated_vertices(self) -> list[int]:
        return [v for v, a in enumerate(self.adj) if a == 0]

    def min_degree(self) -> int:
        return min(self.degrees())

    def is_complete(self) -> bool:
        return all(a == self.full ^ (1 << v) for v, a in enumerate(self.adj))

    def complement(self) -> Graph:
        full = self.full
        return Graph(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def induced(self, vertices: Iterable[int]) -> Graph:
        """Subgraph induced on ``vertices``, relabeled in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return make_graph(len(keep), edges)

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return make_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for start in range(self.n):
            if seen >> start & 1:
                continue
            comp = frontier = 1 << start
            while frontier:
                nxt = 0
                for v in members(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise GraphError(f"graph needs at least one vertex, got n={n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"self-loop at {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


FAMILY_MINIMUM = {"path": 1, "cycle": 3, "complete": 1, "one_plus_clique": 2}


def generate(family: str, n: int) -> Graph:
    """Build a named family member.

    Conventional names map to indices as: cycle ``v_i -> i-1``; path position
    ``j -> j-1`` (so ``x_j -> 2(j-1)`` and ``y_j -> 2j-1``); ``one_plus_clique``
    is K_1 ∪ K_k with the isolated vertex at 0 and the clique on ``1..k``.
    """
    if family not in FAMILY_MINIMUM:
        raise GraphError(f"unknown family {family!r}")
    if n < FAMILY_MINIMUM[family]:
        raise GraphError(f"{family} needs parameter >= {FAMILY_MINIMUM[family]}, got {n}")
    if family == "path":
        return make_graph(n, [(i, i + 1) for i in range(n - 1)])
    if family == "cycle":
        return make_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if family == "complete":
        return make_graph(n, combinations(range(n), 2))
    return make_graph(n + 1, combinations(range(1, n + 1), 2))


def union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; ``g2`` is shifted past the vertices of ``g1``."""
    off = g1.n
    return make_graph(g1.n + g2.n, g1.edges() + [(u + off, v + off) for u, v in g2.edges()])


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every cross edge."""
    off = g1.n
    cross = [(u, off + v) for u in range(g1.n) for v in range(g2.n)]
    return make_graph(g1.n + g2.n, union(g1, g2).edges() + cross)


def join_factors(g: Graph) -> tuple[Graph, Graph] | None:
    """Split ``g`` as G[V1] + G[V2] when its complement is disconnected.

    V1 is the complement component containing vertex 0, V2 the rest.
    """
    comps = g.complement().components()
    if len(comps) < 2:
        return None
    first = comps[0]
    return g.induced(members(first)), g.induced(members(g.full & ~first))


def open_twins(g: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u, v in combinations(range(g.n), 2) if g.adj[u] == g.adj[v]]


def dominating_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in range(g.n) if g.degree(v) == g.n - 1)


def is_one_plus_clique(g: Graph) -> bool:
    """True iff ``g`` is K_1 ∪ K_k for some k >= 2, checked structurally."""
    isolated = g.isolated_vertices()
    if len(isolated) != 1 or g.n < 3:
        return False
    rest = g.full & ~(1 << isolated[0])
    return all(g.adj[v] == rest & ~(1 << v) for v in members(rest))


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def graph_from_index(n: int, index: int) -> Graph:
    """Labeled graph whose edge set is bit-encoded by ``index`` over sorted pairs."""
    adj = [0] * n
    for bit, (u, v) in enumerate(_pairs(n)):
        if index >> bit & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def enumerate_labeled_graphs(
    n: int,
    min_degree: int = 0,
    connected_only: bool = False,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[Graph]:
    """Yield every labeled simple graph on ``n`` vertices passing the filters.

    ``start``/``stop`` restrict to a slice of the edge-mask index space so
    callers can split the sweep across workers.
    """
    if not 1 <= n <= ENUMERATION_CAP:
        raise GraphError(f"enumeration supports 1 <= n <= {ENUMERATION_CAP}, got {n}")
    pairs = _pairs(n)
    total = labeled_graph_count(n)
    stop = total if stop is None else min(stop, total)
    for index in range(start, stop):
        adj = [0] * n
        bit = 0
        rest = index
        while rest:
            if rest & 1:
                u, v = pairs[bit]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            rest >>= 1
            bit += 1
        if min_degree and min(popcount(a) for a in adj) < min_degree:
            continue
        g = Graph._trusted(n, tuple(adj))
        if connected_only and not g.is_connected():
            continue
        yield g


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line ``n``, then one ``u v`` per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge list")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            parts = ln.split()
            if len(parts) != 2:
                raise GraphError(f"bad edge line {ln!r}")
            edges.append((int(parts[0]), int(parts[1])))
    except ValueError as exc:
        if isinstance(exc, GraphError):
            raise
        raise GraphError(f"bad edge list: {exc}") from exc
    return make_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    return "\n".join([str(g.n)] + [f"{u} {v}" for u, v in g.edges()]) + "\n"
