from __future__ import annotations

import pytest

from tdgame.criticality import (
    VerificationReport,
    char_2critical,
    char_3critical,
    char_join_3critical,
    closed_form_cycle,
    closed_form_path,
    profile,
    verify_characterization,
    verify_family,
)
from tdgame.game import GameState, IsolatedVertex, Unwinnable, gamma_tg, optimal_moves
from tdgame.graphs import enumerate_labeled_graphs, generate, join, make_graph, open_twins, union


def test_profile_examples():
    k3 = profile(generate("complete", 3))
    assert (k3.base_value, k3.spectrum, k3.is_critical, k3.class_k) == (2, (1, 1, 1), True, 2)
    c5 = profile(generate("cycle", 5))
    assert c5.base_value == 3 and not c5.is_critical and c5.class_k is None
    p4 = profile(generate("path", 4))
    assert (p4.base_value, p4.spectrum, p4.class_k) == (3, (2, 2, 2, 2), 3)


def test_profile_rejects_isolated_vertices():
    with pytest.raises(Unwinnable):
        profile(union(generate("complete", 1), generate("complete", 2)))


@pytest.mark.parametrize("n,expected", [(3, (2, True)), (4, (2, False)), (9, (6, True)), (10, (6, False)), (16, (10, False))])
def test_closed_form_cycle(n, expected):
    assert closed_form_cycle(n) == expected


@pytest.mark.parametrize("n,expected", [(2, (2, True)), (3, (2, False)), (5, (3, False)), (8, (6, True)), (11, (7, False))])
def test_closed_form_path(n, expected):
    assert closed_form_path(n) == expected


def test_closed_form_domains():
    with pytest.raises(ValueError):
        closed_form_cycle(2)
    with pytest.raises(ValueError):
        closed_form_path(1)


def test_char_2critical():
    assert char_2critical(generate("complete", 5))
    assert not char_2critical(generate("path", 4))
    assert not char_2critical(generate("complete", 1))


def test_char_3critical():
    assert char_3critical(generate("path", 4))
    assert not char_3critical(generate("cycle", 4))
    assert not char_3critical(generate("complete", 4))
    with pytest.raises(IsolatedVertex):
        char_3critical(generate("one_plus_clique", 3))


def test_char_join_3critical():
    h2 = generate("one_plus_clique", 2)
    assert char_join_3critical(h2, h2)
    assert char_join_3critical(generate("path", 4), generate("one_plus_clique", 3))
    assert not char_join_3critical(generate("complete", 3), generate("complete", 3))
    assert not char_join_3critical(generate("complete", 1), h2)


def test_join_examples_against_profile():
    h2 = generate("one_plus_clique", 2)
    assert profile(join(h2, h2)).is_k_critical(3)
    assert profile(join(generate("path", 4), generate("one_plus_clique", 3))).is_k_critical(3)
    assert not profile(join(generate("complete", 3), generate("complete", 3))).is_k_critical(3)


def test_verify_family_examples():
    reports = verify_family("cycle_values", range(3, 13))
    assert len(reports) == 10 and all(r.agree for r in reports)
    reports = verify_family("path_criticality", range(2, 13))
    assert len(reports) == 11 and all(r.agree for r in reports)
    (c4,) = verify_family("cycle_criticality", [4])
    assert (c4.predicted, c4.computed, c4.agree) == ("false", "false", True)


def test_report_tsv():
    r = VerificationReport("cycle:4", "2", "3")
    assert not r.agree
    assert r.tsv() == "cycle:4\t2\t3\tfalse"


def test_verify_characterization_small():
    s2 = verify_characterization("two_critical", 5)
    assert s2.ok and s2.scanned == 1 + 4 + 41 + 768
    s3 = verify_characterization("three_critical", 5)
    assert s3.ok and s3.profile_true[4] == 12  # the 12 labelings of P_4


def test_verify_characterization_parallel_matches_serial():
    serial = verify_characterization("three_critical", 5, jobs=1)
    parallel = verify_characterization("three_critical", 5, jobs=2)
    assert serial.reports() == parallel.reports()


def test_verify_characterization_unknown_kind():
    with pytest.raises(ValueError):
        verify_characterization("four_critical", 4)


def test_critical_graphs_are_twin_free_and_avoid_neighbors():
    for n in range(2, 6):
        for g in enumerate_labeled_graphs(n, min_degree=1):
            prof = profile(g)
            if not prof.is_critical:
                continue
            assert open_twins(g) == []
            for v in range(n):
                assert not optimal_moves(GameState.start(g, [v])) & g.neighbors(v)
            if prof.class_k == 3:
                assert all(gamma_tg(g, [w]) == 2 for w in range(n))


def test_char_3critical_forces_degree_n_minus_2():
    for n in range(3, 7):
        for g in enumerate_labeled_graphs(n, min_degree=1):
            if char_3critical(g):
                assert max(g.degrees()) == n - 2


def test_p4_unique_3critical_up_to_order_4():
    found = []
    for n in range(1, 5):
        for g in enumerate_labeled_graphs(n, min_degree=1):
            if profile(g).is_k_critical(3):
                found.append(g)
    assert len(found) == 12
    assert all(sorted(g.degrees()) == [1, 1, 2, 2] and g.is_connected() for g in found)
    assert not any(profile(generate("cycle", n)).is_k_critical(3) for n in range(3, 13))


def test_star_is_not_critical():
    star = make_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert not profile(star).is_critical
