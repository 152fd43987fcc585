from __future__ import annotations

import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gen import graphs
from oracles import brute_labeled_graphs, min_degree
from tdgame.graphs import (
    GraphError,
    dominating_vertices,
    enumerate_labeled_graphs,
    format_edge_list,
    generate,
    is_one_plus_clique,
    join,
    join_factors,
    make_graph,
    open_twins,
    parse_edge_list,
    union,
)


def test_make_graph_basic():
    p3 = make_graph(3, [(0, 1), (1, 2)])
    assert p3.neighbors(1) == {0, 2}
    assert p3.degrees() == [1, 2, 1]
    k1 = make_graph(1, [])
    assert k1.n == 1 and k1.edges() == []
    assert make_graph(4, [(0, 1), (1, 2), (2, 3)]).edges() == [(0, 1), (1, 2), (2, 3)]


def test_make_graph_collapses_duplicates():
    g = make_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.edges() == [(0, 1)]


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_make_graph_rejects(edges):
    with pytest.raises(GraphError):
        make_graph(3, edges)


def test_generate_families():
    assert generate("cycle", 3).edges() == [(0, 1), (0, 2), (1, 2)]
    assert generate("path", 4).edges() == [(0, 1), (1, 2), (2, 3)]
    g = generate("one_plus_clique", 2)
    assert g.n == 3 and g.isolated_vertices() == [0] and g.edges() == [(1, 2)]
    assert generate("complete", 1).n == 1


@pytest.mark.parametrize("family,n", [("path", 0), ("cycle", 2), ("complete", 0), ("one_plus_clique", 1), ("star", 3)])
def test_generate_below_minimum(family, n):
    with pytest.raises(GraphError):
        generate(family, n)


def test_join_examples():
    k1 = generate("complete", 1)
    assert join(k1, k1) == generate("complete", 2)
    h = generate("one_plus_clique", 2)
    j = join(h, h)
    assert j.n == 6
    assert all(j.has_edge(u, v) for u in range(3) for v in range(3, 6))
    assert j.degrees() == [3, 4, 4, 3, 4, 4]
    assert join(generate("path", 3), generate("cycle", 4)).num_edges() == 18


def test_union_is_disjoint():
    g = union(generate("path", 2), generate("complete", 3))
    assert g.n == 5 and g.num_edges() == 4 and not g.has_edge(1, 2)


def test_join_factors_examples():
    factors = join_factors(generate("complete", 4))
    assert factors is not None
    assert join_factors(generate("path", 4)) is None
    h = generate("one_plus_clique", 2)
    f1, f2 = join_factors(join(h, h))
    assert {f1.n, f2.n} == {3}
    assert is_one_plus_clique(f1) and is_one_plus_clique(f2)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=4), graphs(max_n=4))
def test_join_always_factors(g1, g2):
    f = join_factors(join(g1, g2))
    assert f is not None
    assert join(*f).n == g1.n + g2.n


def test_open_twins_examples():
    assert open_twins(generate("cycle", 4)) == [(0, 2), (1, 3)]
    assert open_twins(generate("path", 4)) == []
    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert open_twins(star) == [(1, 2), (1, 3), (2, 3)]


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7), st.randoms(use_true_random=False))
def test_open_twins_permutation_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    mapped = {frozenset((perm[u], perm[v])) for u, v in open_twins(g)}
    assert mapped == {frozenset(p) for p in open_twins(h)}


def test_dominating_vertices_examples():
    assert dominating_vertices(generate("complete", 5)) == set(range(5))
    assert dominating_vertices(generate("cycle", 5)) == set()
    assert dominating_vertices(make_graph(4, [(0, 1), (0, 2), (0, 3)])) == {0}


def test_one_plus_clique_recognition():
    assert is_one_plus_clique(generate("one_plus_clique", 4))
    assert is_one_plus_clique(make_graph(4, [(0, 1), (0, 3), (1, 3)]))
    assert not is_one_plus_clique(make_graph(4, [(0, 1), (1, 3)]))
    assert not is_one_plus_clique(make_graph(2, []))
    assert not is_one_plus_clique(generate("complete", 3))


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_labeled_graphs(3)) == 8
    assert sum(1 for _ in enumerate_labeled_graphs(5)) == 1024
    # frozen from the brute-force oracle over explicit edge subsets
    assert sum(1 for _ in enumerate_labeled_graphs(4, min_degree=1)) == 41


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_enumeration_matches_brute_force(n):
    ours = Counter(tuple(g.edges()) for g in enumerate_labeled_graphs(n, min_degree=1))
    brute = Counter(tuple(sorted(e)) for e in brute_labeled_graphs(n) if n > 1 and min_degree(n, e) >= 1)
    assert ours == brute
    assert max(ours.values(), default=1) == 1


def test_enumeration_connected_filter():
    # labeled connected graphs on 4 vertices
    assert sum(1 for _ in enumerate_labeled_graphs(4, connected_only=True)) == 38


def test_enumeration_slices_partition_index_space():
    whole = [g.adj for g in enumerate_labeled_graphs(5, min_degree=1)]
    parts = []
    for start in range(0, 1024, 100):
        parts += [g.adj for g in enumerate_labeled_graphs(5, min_degree=1, start=start, stop=start + 100)]
    assert parts == whole


def test_enumeration_cap():
    with pytest.raises(GraphError):
        next(enumerate_labeled_graphs(8))


def test_edge_list_round_trip():
    g = generate("cycle", 5)
    assert parse_edge_list(format_edge_list(g)) == g
    assert parse_edge_list("3\n0 1\n# comment\n1 2\n") == generate("path", 3)
    with pytest.raises(GraphError):
        parse_edge_list("3\n0 1 2\n")
    with pytest.raises(GraphError):
        parse_edge_list("x\n")


def test_graph_invariants_on_random_graphs():
    rnd = random.Random(7)
    for _ in range(50):
        n = rnd.randint(1, 9)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < 0.4]
        g = make_graph(n, edges)
        for v in range(n):
            assert v not in g.neighbors(v)
            assert all(v in g.neighbors(u) for u in g.neighbors(v))
