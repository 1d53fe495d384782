import pytest
from hypothesis import given, settings

from squarestable.classify import (
    AlphaPlusClass,
    alpha_minus_stable,
    alpha_plus_class,
    classify,
    is_koenig_egervary,
    is_simplicial_graph,
    is_square_stable,
    is_very_well_covered,
    is_well_covered,
    omega_is_matroid,
    p1_unique_matchability,
    p2_exchangeability,
    pendants_contain_maximum_stable_set,
    property_p1,
    property_p2,
    simplex_partition_check,
    simplexes,
    simplicial_vertices,
    square_stable_witness,
    well_covered_counterexample,
)
from squarestable.generate import (
    complete_graph,
    corona_with_k1,
    cycle_graph,
    named_fixture,
    path_graph,
    star_graph,
)
from squarestable.graphs import Graph, distance_matrix
from strategies import graphs

DIAMOND = named_fixture("diamond")


# ---------------------------------------------------------------------------
# square-stability
# ---------------------------------------------------------------------------


def test_square_stable_examples():
    assert is_square_stable(path_graph(4))
    assert not is_square_stable(cycle_graph(5))
    for leaves in (2, 3, 6):
        assert not is_square_stable(star_graph(leaves))
    for n in (1, 2, 5):
        assert is_square_stable(complete_graph(n))
    assert not is_square_stable(cycle_graph(6))
    assert is_square_stable(corona_with_k1(cycle_graph(5)))


def test_square_stable_witness_has_pairwise_distance_3():
    g = corona_with_k1(cycle_graph(5))
    w = square_stable_witness(g)
    d = distance_matrix(g)
    assert w is not None and len(w) == 5
    assert all(d[a][b] >= 3 for a in w for b in w if a != b)
    assert square_stable_witness(cycle_graph(5)) is None


# ---------------------------------------------------------------------------
# covered classes
# ---------------------------------------------------------------------------


def test_well_covered_examples():
    assert is_well_covered(cycle_graph(5))
    assert is_well_covered(cycle_graph(4))
    assert not is_well_covered(path_graph(3))
    kind, evidence = well_covered_counterexample(path_graph(3))
    assert kind == "non_maximum_maximal" and evidence == {1}


def test_well_covered_isolated_vertex_reported_distinctly():
    g = Graph.from_edges(3, [(0, 1)])
    assert not is_well_covered(g)
    assert well_covered_counterexample(g) == ("isolated_vertex", 2)
    assert not is_well_covered(complete_graph(1))


def test_very_well_covered_examples():
    assert is_very_well_covered(cycle_graph(4))
    assert not is_very_well_covered(named_fixture("fig_ss_not_vwc"))
    assert not is_very_well_covered(cycle_graph(5))
    assert is_very_well_covered(path_graph(4))


def test_koenig_egervary_examples():
    assert not is_koenig_egervary(cycle_graph(7))
    assert is_koenig_egervary(named_fixture("k3_plus_e"))
    assert is_koenig_egervary(cycle_graph(6))
    assert not is_koenig_egervary(cycle_graph(5))


def test_pendants_contain_maximum_stable_set():
    assert pendants_contain_maximum_stable_set(complete_graph(2))
    assert pendants_contain_maximum_stable_set(path_graph(3))
    assert pendants_contain_maximum_stable_set(corona_with_k1(cycle_graph(4)))
    assert not pendants_contain_maximum_stable_set(cycle_graph(4))
    assert not pendants_contain_maximum_stable_set(path_graph(6))


# ---------------------------------------------------------------------------
# simplicial structure
# ---------------------------------------------------------------------------


def test_simplicial_vertices_examples():
    assert simplicial_vertices(path_graph(4)) == {0, 3}
    assert simplicial_vertices(cycle_graph(4)) == frozenset()
    assert simplicial_vertices(complete_graph(4)) == frozenset(range(4))
    assert simplicial_vertices(Graph.from_edges(1, [])) == {0}


def test_simplexes_examples():
    p4 = simplexes(path_graph(4))
    assert [(sorted(s.clique), sorted(s.simplicial_members)) for s in p4] == [
        ([0, 1], [0]), ([2, 3], [3]),
    ]
    kn = simplexes(complete_graph(5))
    assert len(kn) == 1 and kn[0].clique == frozenset(range(5))
    assert simplexes(cycle_graph(5)) == []


def test_simplex_partition_examples():
    assert simplex_partition_check(path_graph(4))
    assert not simplex_partition_check(cycle_graph(4))
    assert not simplex_partition_check(path_graph(3))  # simplexes overlap at centre
    assert simplex_partition_check(complete_graph(3))


def test_is_simplicial_graph_examples():
    assert is_simplicial_graph(path_graph(4))
    assert not is_simplicial_graph(cycle_graph(5))
    assert is_simplicial_graph(complete_graph(4))


# ---------------------------------------------------------------------------
# stability of alpha under edits
# ---------------------------------------------------------------------------


def test_alpha_minus_examples():
    assert alpha_minus_stable(DIAMOND)
    assert alpha_minus_stable(cycle_graph(6))
    assert not alpha_minus_stable(path_graph(4))
    assert not alpha_minus_stable(named_fixture("k3_plus_e"))


def test_alpha_plus_examples():
    assert alpha_plus_class(named_fixture("k3_plus_e")) is AlphaPlusClass.PLUS_1
    assert alpha_plus_class(star_graph(3)) is AlphaPlusClass.NOT_PLUS
    for n in (2, 4):
        assert alpha_plus_class(complete_graph(n)) is AlphaPlusClass.PLUS_0
    assert alpha_plus_class(complete_graph(1)) is AlphaPlusClass.PLUS_1
    assert alpha_plus_class(cycle_graph(6)) is AlphaPlusClass.PLUS_0


# ---------------------------------------------------------------------------
# the unique-matching and exchange properties
# ---------------------------------------------------------------------------


def test_property_p1_examples():
    assert property_p1(path_graph(4), {0, 3})
    assert not property_p1(path_graph(4), {0, 2})
    assert not property_p1(cycle_graph(4), {0, 2})
    assert property_p1(complete_graph(4), {2})


def test_property_p1_precondition():
    with pytest.raises(ValueError, match="maximum"):
        property_p1(path_graph(4), {1})
    with pytest.raises(ValueError, match="stable"):
        property_p1(path_graph(4), {0, 1})


def test_property_p2_examples():
    assert property_p2(path_graph(4), {0, 3})
    # {0,2} is maximum but the middle vertex has both its neighbours in it
    assert not property_p2(path_graph(4), {0, 2})
    assert not property_p2(cycle_graph(4), {0, 2})
    assert property_p2(complete_graph(3), {1})


def test_raw_p_properties_allow_non_maximum_sets():
    # singletons of the 5-cycle are maximum in its square but not in it
    assert not p1_unique_matchability(cycle_graph(5), {0})
    assert not p2_exchangeability(cycle_graph(5), {0})
    assert p1_unique_matchability(complete_graph(1), {0})


# ---------------------------------------------------------------------------
# matroid structure
# ---------------------------------------------------------------------------


def test_omega_matroid_examples():
    assert omega_is_matroid(complete_graph(5))
    assert omega_is_matroid(Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)]))
    assert not omega_is_matroid(path_graph(4))
    assert not omega_is_matroid(named_fixture("k3_plus_e"))
    assert omega_is_matroid(Graph.from_edges(3, []))


@given(graphs(max_n=7))
@settings(max_examples=80)
def test_omega_matroid_routes_never_disagree(g):
    omega_is_matroid(g)  # raises InternalCheckError on route disagreement


# ---------------------------------------------------------------------------
# aggregate report
# ---------------------------------------------------------------------------


def test_classify_p4():
    r = classify(path_graph(4))
    assert r.square_stable and r.well_covered and r.very_well_covered
    assert r.koenig_egervary and r.simplicial_graph and r.chordal
    assert r.simplex_partition and not r.alpha_minus
    assert r.alpha_plus_class is AlphaPlusClass.PLUS_0
    assert not r.omega_matroid
    assert r.witnesses["square_stable_distance3_set"] == [0, 3]


def test_classify_c5():
    r = classify(cycle_graph(5))
    assert not r.square_stable and r.well_covered
    assert not r.koenig_egervary and not r.very_well_covered


def test_classify_diamond():
    r = classify(DIAMOND)
    assert r.alpha_minus and not r.square_stable
    assert r.chordal and not r.well_covered


def test_classify_report_serialises():
    d = classify(named_fixture("fig_bip_vwc_not_ss")).as_dict()
    assert d["very_well_covered"] and not d["square_stable"]
    assert d["alpha_plus_class"] in ("NOT_PLUS", "PLUS_0", "PLUS_1")
    assert "witnesses" in d


@given(graphs(max_n=6))
@settings(max_examples=60)
def test_classify_never_breaks_consistency(g):
    classify(g)  # internal consistency assertions must hold on any input
