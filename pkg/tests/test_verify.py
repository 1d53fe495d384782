import json
import random

import pytest

from squarestable.generate import (
    complete_graph,
    corona_with_k1,
    cycle_graph,
    named_fixture,
    path_graph,
    sample_corpus,
    star_graph,
)
from squarestable.graphs import Graph, square, to_graph6
from squarestable.classify import is_koenig_egervary
from squarestable.verify import (
    STATEMENT_NAMES,
    SUITE_NAMES,
    girth6_applicable,
    implication_clauses,
    run_suite,
    verify_equivalences,
    verify_girth6,
    verify_inequality_chain,
    verify_tree_theorem,
)


# ---------------------------------------------------------------------------
# the thirteen-statement engine
# ---------------------------------------------------------------------------


def test_equivalences_all_true_on_square_stable_graphs():
    for g in (path_graph(4), complete_graph(5), complete_graph(1),
              corona_with_k1(cycle_graph(5)), named_fixture("fig_ss_not_vwc"),
              named_fixture("fig_upm_not_pendant")):
        report = verify_equivalences(g)
        assert report.statements == (True,) * 13
        assert report.agree and report.failing_pair is None


def test_equivalences_all_false_on_non_square_stable_graphs():
    for g in (cycle_graph(5), cycle_graph(6), star_graph(3),
              named_fixture("k3_plus_e"), named_fixture("fig_bip_vwc_not_ss")):
        report = verify_equivalences(g)
        assert report.statements == (False,) * 13
        assert report.agree


def test_equivalences_reduce_per_component():
    # a square-stable component next to a non-square-stable one
    p4_plus_c5 = Graph.from_edges(9, path_graph(4).edges() + [
        (u + 4, v + 4) for u, v in cycle_graph(5).edges()
    ])
    report = verify_equivalences(p4_plus_c5)
    assert report.statements == (False,) * 13
    two_p4 = Graph.from_edges(8, path_graph(4).edges() + [
        (u + 4, v + 4) for u, v in path_graph(4).edges()
    ])
    assert verify_equivalences(two_p4).statements == (True,) * 13


def test_equivalence_report_shape():
    report = verify_equivalences(cycle_graph(5), graph_id="cycle5")
    d = report.as_dict()
    assert d["graph_id"] == "cycle5"
    assert set(d["statements"]) == set(STATEMENT_NAMES)
    assert d["agree"] is True


def test_equivalences_mark_unevaluated_on_cap():
    report = verify_equivalences(path_graph(6), cap_omega=5)
    assert any(v is None for v in report.statements)
    # evaluable statements still agree among themselves
    assert report.agree


# ---------------------------------------------------------------------------
# chain
# ---------------------------------------------------------------------------


def test_chain_values():
    assert verify_inequality_chain(cycle_graph(12)).chain() == (4, 4, 4, 4, 6, 6)
    assert verify_inequality_chain(cycle_graph(6)).chain() == (2, 2, 2, 2, 3, 3)
    assert verify_inequality_chain(complete_graph(4)).chain() == (1,) * 6


# ---------------------------------------------------------------------------
# implications
# ---------------------------------------------------------------------------


def test_implications_hold_on_named_graphs():
    for g in (path_graph(4), cycle_graph(5), cycle_graph(6), complete_graph(1),
              named_fixture("diamond"), named_fixture("fig_bip_vwc_not_ss"),
              corona_with_k1(cycle_graph(5))):
        for name, value, _ in implication_clauses(g):
            assert value is not False, name


def test_implication_clause_details():
    clauses = dict(
        (name, value) for name, value, _ in implication_clauses(corona_with_k1(cycle_graph(5)))
    )
    assert clauses["pendant_matching_forces_square_omega"] is True
    assert clauses["ke_pendant_characterisation"] is True
    # diamond is not square-stable: the square-stable implications hold vacuously
    clauses = dict((n, v) for n, v, _ in implication_clauses(named_fixture("diamond")))
    assert clauses["square_stable_not_alpha_minus"] is True


def test_fig6_square_loses_koenig_egervary():
    g = named_fixture("fig_bip_vwc_not_ss")
    assert is_koenig_egervary(g)
    assert not is_koenig_egervary(square(g))


# ---------------------------------------------------------------------------
# trees
# ---------------------------------------------------------------------------


def test_tree_theorem_p4():
    report = verify_tree_theorem(path_graph(4))
    assert report.statements == (True, True, True, True)
    assert report.agree
    assert report.recursion_edge == (1, 2)


def test_tree_theorem_negative_cases():
    assert verify_tree_theorem(path_graph(6)).statements == (False,) * 4
    assert verify_tree_theorem(star_graph(3)).statements == (False,) * 4
    assert verify_tree_theorem(complete_graph(2)).agree


def test_tree_theorem_rejects_bad_input():
    with pytest.raises(ValueError):
        verify_tree_theorem(cycle_graph(4))
    with pytest.raises(ValueError):
        verify_tree_theorem(complete_graph(1))


def test_tree_recursion_edge_on_larger_tree():
    # two stars joined at their centres: a well-covered "double broom"
    t = Graph.from_edges(6, [(0, 1), (0, 2), (1, 3), (2, 4), (4, 5)])
    if verify_tree_theorem(t).statements[0]:
        assert verify_tree_theorem(t).recursion_ok


# ---------------------------------------------------------------------------
# girth >= 6
# ---------------------------------------------------------------------------


def test_girth6_skips():
    assert verify_girth6(cycle_graph(7)) is None  # the excluded 7-cycle
    assert verify_girth6(complete_graph(1)) is None
    assert verify_girth6(cycle_graph(5)) is None  # girth too small
    assert not girth6_applicable(Graph.from_edges(2, []))  # disconnected


def test_girth6_statements():
    report = verify_girth6(cycle_graph(6))
    assert report is not None
    assert report.statements == (False,) * 5 and report.agree

    report = verify_girth6(corona_with_k1(path_graph(3)))
    assert report.statements == (True,) * 5 and report.agree

    report = verify_girth6(path_graph(3))
    assert report.statements == (False,) * 5 and report.agree

    report = verify_girth6(complete_graph(2))
    assert report.statements == (True,) * 5 and report.agree


def test_girth6_on_seeded_trees_and_sparse_graphs():
    rng = random.Random(31337)
    from squarestable.generate import random_tree

    for i in range(40):
        t = random_tree(rng.randint(2, 11), seed=rng.randrange(10**6))
        report = verify_girth6(t)
        assert report is not None and report.agree


# ---------------------------------------------------------------------------
# suite runner
# ---------------------------------------------------------------------------


def test_run_suite_on_fixtures():
    items = [(name, named_fixture(name)) for name in
             ("k3_plus_e", "diamond", "fig_ss_not_vwc",
              "fig_upm_not_pendant", "fig_bip_vwc_not_ss")]
    report = run_suite(items, SUITE_NAMES, keep_details=True)
    assert report.graphs_total == 5
    assert report.violations_total == 0
    equiv = next(s for s in report.suites if s.suite_name == "equivalences")
    assert equiv.graphs_checked == 5
    assert len(equiv.details) == 5


def test_run_suite_empty_corpus():
    report = run_suite([], ("chain",))
    assert report.graphs_total == 0 and report.violations_total == 0


def test_run_suite_rejects_unknown_suite():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suite([], ("nonesuch",))


def test_run_suite_deterministic():
    items = [(to_graph6(g), g) for g in sample_corpus(15, 8, seed=5)]
    a = run_suite(items, SUITE_NAMES).as_dict(include_details=True)
    b = run_suite(items, SUITE_NAMES).as_dict(include_details=True)
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_run_suite_strict_cap():
    from squarestable.errors import CapExceededError

    items = [("p6", path_graph(6))]
    report = run_suite(items, ("equivalences",), cap_omega=5)
    assert report.violations_total == 0  # unevaluated, not violated
    with pytest.raises(CapExceededError):
        run_suite(items, ("matroid",), cap_omega=5, strict=True)


def test_run_suite_random_connected_sample_is_clean():
    items = [(to_graph6(g), g) for g in sample_corpus(40, 10, seed=97)]
    report = run_suite(items, SUITE_NAMES)
    assert report.violations_total == 0
