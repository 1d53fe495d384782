import random

import pytest
from hypothesis import given, settings

from squarestable.errors import CapExceededError
from squarestable.generate import complete_graph, cycle_graph, path_graph, star_graph
from squarestable.graphs import Graph, is_stable_set, square
from squarestable.solvers import (
    clique_cover,
    clique_cover_number,
    domination_number,
    enumerate_maximal_stable_sets,
    enumerate_maximum_stable_sets,
    independent_domination_number,
    invariant_chain,
    maximum_stable_set,
    stability_number,
)
from oracles import (
    oracle_alpha,
    oracle_gamma,
    oracle_idom,
    oracle_maximal_stable_sets,
    oracle_omega,
    oracle_theta,
    random_graph,
)
from strategies import graphs


# ---------------------------------------------------------------------------
# stability number and witnesses
# ---------------------------------------------------------------------------


def test_stability_number_examples():
    assert stability_number(cycle_graph(12)) == 6
    assert stability_number(square(cycle_graph(12))) == 4
    for n in (1, 2, 6):
        assert stability_number(complete_graph(n)) == 1
    assert stability_number(star_graph(5)) == 5


def test_maximum_stable_set_is_lex_smallest():
    assert maximum_stable_set(path_graph(4)) == {0, 2}
    assert maximum_stable_set(cycle_graph(4)) == {0, 2}
    assert maximum_stable_set(complete_graph(3)) == {0}


@given(graphs())
def test_stability_number_matches_oracle(g):
    assert stability_number(g) == oracle_alpha(g)


@given(graphs(max_n=7))
def test_witness_is_stable_maximum_and_lex_minimal(g):
    w = maximum_stable_set(g)
    assert is_stable_set(g, w)
    assert len(w) == stability_number(g)
    assert sorted(w) == min((sorted(s) for s in oracle_omega(g)), default=[])


# ---------------------------------------------------------------------------
# stable-set families
# ---------------------------------------------------------------------------


def test_omega_examples():
    kn = enumerate_maximum_stable_sets(complete_graph(4))
    assert kn.sets == tuple(frozenset({v}) for v in range(4))
    assert kn.core == frozenset()

    c4 = enumerate_maximum_stable_sets(cycle_graph(4))
    assert c4.sets == (frozenset({0, 2}), frozenset({1, 3}))

    p4 = enumerate_maximum_stable_sets(path_graph(4))
    assert [sorted(s) for s in p4.sets] == [[0, 2], [0, 3], [1, 3]]
    assert p4.core == frozenset()


def test_omega_core_of_star():
    fam = enumerate_maximum_stable_sets(star_graph(4))
    assert fam.sets == (frozenset({1, 2, 3, 4}),)
    assert fam.core == frozenset({1, 2, 3, 4})


@given(graphs(max_n=7))
def test_omega_matches_oracle_and_is_sorted(g):
    fam = enumerate_maximum_stable_sets(g)
    assert list(fam.sets) == oracle_omega(g)
    assert [sorted(s) for s in fam.sets] == sorted([sorted(s) for s in fam.sets])


def test_maximal_stable_sets_examples():
    assert enumerate_maximal_stable_sets(path_graph(3)) == [
        frozenset({0, 2}), frozenset({1}),
    ]
    assert enumerate_maximal_stable_sets(complete_graph(3)) == [
        frozenset({0}), frozenset({1}), frozenset({2}),
    ]
    c5 = enumerate_maximal_stable_sets(cycle_graph(5))
    assert len(c5) == 5 and all(len(s) == 2 for s in c5)


@given(graphs(max_n=7))
def test_maximal_stable_sets_match_oracle(g):
    assert enumerate_maximal_stable_sets(g) == oracle_maximal_stable_sets(g)


@given(graphs(max_n=7))
def test_square_omega_members_are_stable_in_base(g):
    for s in enumerate_maximum_stable_sets(square(g)).sets:
        assert is_stable_set(g, s)


# ---------------------------------------------------------------------------
# domination and clique cover
# ---------------------------------------------------------------------------


def test_domination_examples():
    assert domination_number(complete_graph(5)) == 1
    assert domination_number(cycle_graph(12)) == 4
    assert domination_number(Graph.from_edges(5, [])) == 5


def test_independent_domination_examples():
    assert independent_domination_number(cycle_graph(12)) == 4
    assert independent_domination_number(complete_graph(7)) == 1
    assert independent_domination_number(path_graph(4)) == 2


def test_clique_cover_examples():
    assert clique_cover_number(complete_graph(6)) == 1
    assert clique_cover_number(cycle_graph(5)) == 3
    assert clique_cover_number(path_graph(4)) == 2


@given(graphs(max_n=7))
@settings(max_examples=60)
def test_clique_cover_witness_partitions_into_cliques(g):
    from squarestable.graphs import is_clique

    cover = clique_cover(g)
    seen = set()
    for cl in cover:
        assert is_clique(g, cl)
        assert not (cl & seen)
        seen |= cl
    assert seen == set(range(g.n))


@given(graphs(max_n=7))
@settings(max_examples=60)
def test_solvers_match_oracles(g):
    assert domination_number(g) == oracle_gamma(g)
    assert independent_domination_number(g) == oracle_idom(g)
    assert clique_cover_number(g) == oracle_theta(g)


def test_solvers_match_oracles_seeded_sample():
    rng = random.Random(424242)
    for _ in range(60):
        g = random_graph(rng, rng.randint(0, 9), rng.random())
        assert stability_number(g) == oracle_alpha(g)
        assert domination_number(g) == oracle_gamma(g)
        assert clique_cover_number(g) == oracle_theta(g)


# ---------------------------------------------------------------------------
# the chain
# ---------------------------------------------------------------------------


def test_invariant_chain_c12():
    record = invariant_chain(cycle_graph(12))
    assert record.chain() == (4, 4, 4, 4, 6, 6)
    assert record.mu == 6 and record.n == 12


def test_invariant_chain_complete_and_p4():
    for n in (1, 3, 5):
        assert invariant_chain(complete_graph(n)).chain() == (1,) * 6
    assert invariant_chain(path_graph(4)).chain() == (2,) * 6


@given(graphs(max_n=7))
@settings(max_examples=60)
def test_invariant_chain_is_ordered(g):
    chain = invariant_chain(g).chain()
    assert all(a <= b for a, b in zip(chain, chain[1:]))


def test_stability_number_agrees_with_maximal_enumeration():
    rng = random.Random(7)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        assert stability_number(g) == max(
            len(s) for s in enumerate_maximal_stable_sets(g)
        )


# ---------------------------------------------------------------------------
# caps
# ---------------------------------------------------------------------------


def test_solver_cap_refusal():
    g = path_graph(6)
    with pytest.raises(CapExceededError, match="exact solver cap"):
        stability_number(g, cap=5)
    with pytest.raises(CapExceededError, match="enumeration cap"):
        enumerate_maximum_stable_sets(g, cap=5)
    # refusal is an exception, not an empty family
    assert enumerate_maximum_stable_sets(g, cap=6).sets
