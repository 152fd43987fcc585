"""Independent reference implementations used to freeze expected values.

Nothing here imports the package's solver: the game tree is walked over
explicit played-vertex histories with Python sets and no memoization.
"""

from __future__ import annotations

from itertools import combinations


def neighbor_sets(n, edges):
    nbrs = {v: set() for v in range(n)}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    return nbrs


def naive_value(n, edges, given=(), dominator_first=True):
    nbrs = neighbor_sets(n, edges)
    everything = set(range(n))

    def play(history, dominator):
        covered = set(given)
        for p in history:
            covered |= nbrs[p]
        if covered == everything:
            return 0
        options = [v for v in range(n) if v not in history and nbrs[v] - covered]
        values = [1 + play(history + (v,), not dominator) for v in options]
        return min(values) if dominator else max(values)

    return play((), dominator_first)


def brute_labeled_graphs(n):
    pairs = list(combinations(range(n), 2))
    for r in range(len(pairs) + 1):
        for chosen in combinations(pairs, r):
            yield list(chosen)


def min_degree(n, edges):
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return min(deg)
