"""The theorem engine.

Thirteen characterisations of square-stability are each evaluated by an
independent route and must all agree on every graph; further suites check
the invariant-inequality chain, a battery of implications between the graph
classes, the tree characterisation with its recursive edge structure, the
girth-at-least-six characterisation, and the matroid dual-route agreement.
Violations carry minimal witnesses so a failure is debuggable, and all
results are deterministic for a given corpus and configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .classify import (
    AlphaPlusClass,
    alpha_minus_stable,
    alpha_plus_class,
    is_koenig_egervary,
    is_simplicial_graph,
    is_square_stable,
    is_very_well_covered,
    is_well_covered,
    omega_is_matroid,
    p1_unique_matchability,
    p2_exchangeability,
    pendants_contain_maximum_stable_set,
    simplex_partition_check,
)
from .errors import CapExceededError, InternalCheckError
from .graphs import (
    Graph,
    components,
    distance_matrix,
    girth,
    induced_subgraph,
    is_chordal,
    is_complete,
    is_connected,
    is_tree,
    isolated_vertices,
    square,
    symmetric_difference_subgraph,
)
from .matchings import (
    count_perfect_matchings,
    has_induced_perfect_matching,
    matching_number,
    pendant_perfect_matching,
)
from .solvers import (
    clique_cover_number,
    domination_number,
    enumerate_maximum_stable_sets,
    independent_domination_number,
    invariant_chain,
    stability_number,
)

STATEMENT_NAMES = (
    "simplex_partition",
    "alpha_preserved_by_square",
    "theta_preserved_by_square",
    "six_invariants_equal",
    "square_omega_contained",
    "distance3_maximum_stable_set",
    "some_set_uniquely_matchable",
    "all_square_sets_uniquely_matchable",
    "symmetric_differences_unique_pm",
    "symmetric_differences_have_pm",
    "symmetric_differences_induced_pm",
    "some_set_exchangeable",
    "all_square_sets_exchangeable",
)


@dataclass
class EquivalenceReport:
    graph_id: str
    statements: tuple  # one bool (or None when unevaluated) per statement
    agree: bool
    failing_pair: Optional[dict] = None

    def as_dict(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "statements": {
                name: value for name, value in zip(STATEMENT_NAMES, self.statements)
            },
            "agree": self.agree,
            "failing_pair": self.failing_pair,
        }


def _evaluate_statements(g: Graph, cap, cap_omega) -> list:
    """The thirteen statements for a connected graph, each by its own route."""
    sq = square(g)
    cache: dict = {}

    def omega(which: str):
        if which not in cache:
            h = g if which == "g" else sq
            cache[which] = enumerate_maximum_stable_sets(h, cap_omega).sets
        return cache[which]

    def dist():
        if "dist" not in cache:
            cache["dist"] = distance_matrix(g)
        return cache["dist"]

    def s01() -> bool:
        return simplex_partition_check(g)

    def s02() -> bool:
        return stability_number(g, cap) == stability_number(sq, cap)

    def s03() -> bool:
        return clique_cover_number(g, cap) == clique_cover_number(sq, cap)

    def s04() -> bool:
        values = {
            stability_number(sq, cap),
            clique_cover_number(sq, cap),
            domination_number(g, cap),
            independent_domination_number(g, cap_omega),
            stability_number(g, cap),
            clique_cover_number(g, cap),
        }
        return len(values) == 1

    def s05() -> bool:
        return set(omega("sq")) <= set(omega("g"))

    def s06() -> bool:
        d = dist()
        return any(
            all(d[a][b] >= 3 for a in s for b in s if a < b) for s in omega("g")
        )

    def s07() -> bool:
        return any(p1_unique_matchability(g, s) for s in omega("g"))

    def s08() -> bool:
        return all(p1_unique_matchability(g, s) for s in omega("sq"))

    def s09() -> bool:
        return all(
            count_perfect_matchings(symmetric_difference_subgraph(g, s1, s2), 2) == 1
            for s1 in omega("g")
            for s2 in omega("sq")
        )

    def s10() -> bool:
        for s1 in omega("g"):
            for s2 in omega("sq"):
                h = symmetric_difference_subgraph(g, s1, s2)
                if 2 * matching_number(h) != h.n:
                    return False
        return True

    def s11() -> bool:
        return all(
            has_induced_perfect_matching(symmetric_difference_subgraph(g, s1, s2))
            for s1 in omega("g")
            for s2 in omega("sq")
        )

    def s12() -> bool:
        return any(p2_exchangeability(g, s, cap) for s in omega("g"))

    def s13() -> bool:
        return all(p2_exchangeability(g, s, cap) for s in omega("sq"))

    values = []
    for fn in (s01, s02, s03, s04, s05, s06, s07, s08, s09, s10, s11, s12, s13):
        try:
            values.append(fn())
        except CapExceededError:
            values.append(None)
    return values


def verify_equivalences(g: Graph, cap=None, cap_omega=None, graph_id: str = "") -> EquivalenceReport:
    """Evaluate all thirteen characterisations and report their agreement.

    Disconnected graphs are reduced per component: a statement holds for the
    whole graph exactly when it holds for every component, and unevaluated
    component results propagate as unevaluated.
    """
    if is_connected(g):
        values = _evaluate_statements(g, cap, cap_omega)
    else:
        values = [True] * len(STATEMENT_NAMES)
        for comp in components(g):
            sub, _ = induced_subgraph(g, comp)
            for i, v in enumerate(_evaluate_statements(sub, cap, cap_omega)):
                if v is None:
                    values[i] = None
                elif values[i] is not None:
                    values[i] = values[i] and v
    evaluated = [(i, v) for i, v in enumerate(values) if v is not None]
    agree = len({v for _, v in evaluated}) <= 1
    failing = None
    if not agree:
        first_i, first_v = evaluated[0]
        for j, v in evaluated[1:]:
            if v != first_v:
                failing = {
                    "statements": [STATEMENT_NAMES[first_i], STATEMENT_NAMES[j]],
                    "values": [first_v, v],
                }
                break
    return EquivalenceReport(graph_id, tuple(values), agree, failing)


# ---------------------------------------------------------------------------
# Chain and implication suites
# ---------------------------------------------------------------------------


def verify_inequality_chain(g: Graph, cap=None, cap_omega=None):
    """The chained invariants in their proven order; ``invariant_chain``
    raises internally if the ordering fails, which the suite records."""
    return invariant_chain(g, cap, cap_omega)


def implication_clauses(g: Graph, cap=None, cap_omega=None) -> list[tuple]:
    """Each conditional between the graph classes: (name, holds, witness).

    ``holds`` is ``None`` when the clause's hypotheses exclude the graph
    (disconnection where a statement is proven for connected graphs only,
    isolated vertices where well-coveredness is undefined by fiat).
    """
    clauses: list[tuple] = []
    sq = square(g)
    conn = is_connected(g)
    iso = bool(isolated_vertices(g)) or g.n == 0
    d = distance_matrix(g)

    def add(name: str, fn) -> None:
        try:
            value = fn()
        except CapExceededError:
            value = None
        clauses.append((name, value, ""))

    def omega_sets(h):
        return enumerate_maximum_stable_sets(h, cap_omega).sets

    def ss():
        return is_square_stable(g, cap)

    add("square_stable_iff_square_omega_contained",
        lambda: ss() == (set(omega_sets(sq)) <= set(omega_sets(g))))

    add("square_omega_pairwise_distance3",
        lambda: all(d[a][b] >= 3 for s in omega_sets(sq) for a in s for b in s if a < b))

    def distance3_attained():
        if not (ss() and conn and not is_complete(g)):
            return None
        return all(
            any(d[a][b] == 3 for b in s if b != a)
            for s in omega_sets(sq)
            for a in s
        )
    add("square_omega_distance3_attained", distance3_attained)

    add("omega_equality_iff_complete",
        lambda: ((set(omega_sets(sq)) == set(omega_sets(g))) == is_complete(g))
        if conn else None)

    add("square_stable_not_alpha_minus",
        lambda: None if iso else (not ss()) or not alpha_minus_stable(g, cap, cap_omega))

    add("square_stable_alpha_plus_zero",
        lambda: None if iso
        else (not ss()) or alpha_plus_class(g, cap, cap_omega) is AlphaPlusClass.PLUS_0)

    add("square_stable_well_covered",
        lambda: None if iso else (not ss()) or is_well_covered(g, cap_omega))

    add("square_stable_iff_simplicial_well_covered",
        lambda: None if iso
        else ss() == (is_simplicial_graph(g) and is_well_covered(g, cap_omega)))

    add("chordal_square_stable_iff_well_covered",
        lambda: None if (iso or not is_chordal(g))
        else ss() == is_well_covered(g, cap_omega))

    def pendant_forces_square_omega():
        ppm = pendant_perfect_matching(g)
        if ppm is None:
            return True
        if not ss():
            return False
        pend = frozenset(v for v in range(g.n) if g.adj[v].bit_count() == 1)
        pend_stable = all(
            not g.has_edge(a, b) for a in pend for b in pend if a < b
        )
        if not pend_stable:
            # a matching edge with two pendant endpoints (a K2 component)
            # leaves a per-edge choice, so the family cannot be a singleton
            return True
        return set(omega_sets(sq)) == {pend}
    add("pendant_matching_forces_square_omega", pendant_forces_square_omega)

    def ke_pendant_characterisation():
        if not (conn and g.n >= 2 and is_koenig_egervary(g, cap)):
            return None
        a = ss()
        b = pendant_perfect_matching(g) is not None
        c = (is_very_well_covered(g, cap_omega)
             and pendants_contain_maximum_stable_set(g, cap))
        return a == b == c
    add("ke_pendant_characterisation", ke_pendant_characterisation)

    add("ke_well_covered_iff_very_well_covered",
        lambda: (is_well_covered(g, cap_omega) == is_very_well_covered(g, cap_omega))
        if is_koenig_egervary(g, cap) else None)

    add("square_stable_ke_square",
        lambda: (not (ss() and is_koenig_egervary(g, cap)))
        or is_koenig_egervary(sq, cap))

    def component_reduction():
        parts = []
        for comp in components(g):
            sub, _ = induced_subgraph(g, comp)
            parts.append(is_square_stable(sub, cap))
        return ss() == all(parts)
    add("component_reduction", component_reduction)

    return clauses


# ---------------------------------------------------------------------------
# Tree and girth suites
# ---------------------------------------------------------------------------


@dataclass
class TreeReport:
    statements: tuple  # (well_covered, very_well_covered, pendant_pm, square_stable)
    agree: bool
    recursion_edge: Optional[tuple[int, int]]
    recursion_ok: bool


def verify_tree_theorem(t: Graph, cap=None, cap_omega=None) -> TreeReport:
    """The four equivalent statements for trees, plus the recursive edge:
    a well-covered tree other than a single edge contains an edge between two
    non-pendant vertices whose removal splits off one edge and leaves a
    well-covered tree."""
    if not is_tree(t):
        raise ValueError("input must be a tree")
    if t.n < 2:
        raise ValueError("tree must have order at least 2")
    wc = is_well_covered(t, cap_omega)
    statements = (
        wc,
        is_very_well_covered(t, cap_omega),
        pendant_perfect_matching(t) is not None,
        is_square_stable(t, cap),
    )
    agree = len(set(statements)) == 1
    recursion_edge = None
    recursion_ok = True
    if wc and t.n > 2:
        recursion_ok = False
        for u, v in t.edges():
            if t.degree(u) < 2 or t.degree(v) < 2:
                continue
            pruned = t.remove_edge(u, v)
            first, second = components(pruned)
            small, rest = (first, second) if len(first) <= len(second) else (second, first)
            if len(small) != 2:
                continue
            sub, _ = induced_subgraph(pruned, rest)
            if is_well_covered(sub, cap_omega):
                recursion_edge = (u, v)
                recursion_ok = True
                break
    return TreeReport(statements, agree, recursion_edge, recursion_ok)


@dataclass
class GirthReport:
    statements: tuple
    agree: bool


def _is_c7(g: Graph) -> bool:
    return g.n == 7 and is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


def girth6_applicable(g: Graph) -> bool:
    """Connected, girth at least six (acyclic qualifies), and neither the
    7-cycle nor the single vertex."""
    return is_connected(g) and g.n != 1 and not _is_c7(g) and girth(g) >= 6


def verify_girth6(g: Graph, cap=None, cap_omega=None) -> Optional[GirthReport]:
    """Five equivalent statements for qualifying graphs; ``None`` when the
    hypotheses exclude the graph (that is a skip, not a failure)."""
    if not girth6_applicable(g):
        return None
    ke = is_koenig_egervary(g, cap)
    statements = (
        is_well_covered(g, cap_omega),
        pendant_perfect_matching(g) is not None,
        is_very_well_covered(g, cap_omega),
        ke and g.n == 2 * stability_number(g, cap)
        and pendants_contain_maximum_stable_set(g, cap),
        ke and is_square_stable(g, cap),
    )
    return GirthReport(statements, len(set(statements)) == 1)


# ---------------------------------------------------------------------------
# Suite runner
# ---------------------------------------------------------------------------

SUITE_NAMES = ("equivalences", "chain", "implications", "tree", "girth6", "matroid")


@dataclass
class SuiteResult:
    suite_name: str
    graphs_checked: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    details: list = field(default_factory=list)

    def as_dict(self, include_details: bool) -> dict:
        d = {
            "suite_name": self.suite_name,
            "graphs_checked": self.graphs_checked,
            "skipped": self.skipped,
            "violations": self.violations,
        }
        if include_details:
            d["details"] = self.details
        return d


@dataclass
class RunReport:
    suites: list[SuiteResult]
    graphs_total: int

    @property
    def violations_total(self) -> int:
        return sum(len(s.violations) for s in self.suites)

    def as_dict(self, include_details: bool = False) -> dict:
        return {
            "graphs_total": self.graphs_total,
            "violations_total": self.violations_total,
            "suites": [s.as_dict(include_details) for s in self.suites],
        }


def run_suite(
    items: Iterable[tuple[str, Graph]],
    suites: Iterable[str] = SUITE_NAMES,
    cap=None,
    cap_omega=None,
    strict: bool = False,
    keep_details: bool = False,
) -> RunReport:
    """Run the selected suites over a corpus of (graph_id, graph) pairs.

    Results are deterministic: the corpus is materialised and sorted by
    (order, graph_id) before checking.  In strict mode a solver-cap refusal
    propagates; otherwise the graph counts as skipped for that suite.
    """
    chosen = list(suites)
    for name in chosen:
        if name not in SUITE_NAMES:
            raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}")
    corpus = sorted(items, key=lambda item: (item[1].n, item[0]))
    results = {name: SuiteResult(name) for name in chosen}

    def guard(result: SuiteResult, gid: str, fn) -> None:
        try:
            fn()
        except CapExceededError:
            if strict:
                raise
            result.skipped += 1

    for gid, g in corpus:
        if "equivalences" in results:
            res = results["equivalences"]

            def run_equiv(res=res, gid=gid, g=g):
                report = verify_equivalences(g, cap, cap_omega, gid)
                res.graphs_checked += 1
                if keep_details:
                    res.details.append(report.as_dict())
                if not report.agree:
                    res.violations.append({
                        "graph_id": gid,
                        "clause": "equivalence_agreement",
                        "witness": report.failing_pair,
                    })
            guard(res, gid, run_equiv)
        if "chain" in results:
            res = results["chain"]

            def run_chain(res=res, gid=gid, g=g):
                try:
                    record = verify_inequality_chain(g, cap, cap_omega)
                    res.graphs_checked += 1
                    if keep_details:
                        res.details.append({"graph_id": gid, "invariants": record.as_dict()})
                except InternalCheckError as exc:
                    res.graphs_checked += 1
                    res.violations.append({
                        "graph_id": gid, "clause": "inequality_chain", "witness": str(exc),
                    })
            guard(res, gid, run_chain)
        if "implications" in results:
            res = results["implications"]

            def run_impl(res=res, gid=gid, g=g):
                clauses = implication_clauses(g, cap, cap_omega)
                res.graphs_checked += 1
                if keep_details:
                    res.details.append({
                        "graph_id": gid,
                        "clauses": {name: value for name, value, _ in clauses},
                    })
                for name, value, witness in clauses:
                    if value is False:
                        res.violations.append({
                            "graph_id": gid, "clause": name, "witness": witness,
                        })
            guard(res, gid, run_impl)
        if "tree" in results:
            res = results["tree"]
            if not is_tree(g) or g.n < 2:
                res.skipped += 1
            else:
                def run_tree(res=res, gid=gid, g=g):
                    report = verify_tree_theorem(g, cap, cap_omega)
                    res.graphs_checked += 1
                    if keep_details:
                        res.details.append({
                            "graph_id": gid,
                            "statements": list(report.statements),
                            "recursion_edge": report.recursion_edge,
                        })
                    if not report.agree:
                        res.violations.append({
                            "graph_id": gid,
                            "clause": "tree_equivalence",
                            "witness": list(report.statements),
                        })
                    if not report.recursion_ok:
                        res.violations.append({
                            "graph_id": gid,
                            "clause": "tree_recursion_edge",
                            "witness": "no qualifying edge",
                        })
                guard(res, gid, run_tree)
        if "girth6" in results:
            res = results["girth6"]

            def run_girth(res=res, gid=gid, g=g):
                report = verify_girth6(g, cap, cap_omega)
                if report is None:
                    res.skipped += 1
                    return
                res.graphs_checked += 1
                if keep_details:
                    res.details.append({
                        "graph_id": gid, "statements": list(report.statements),
                    })
                if not report.agree:
                    res.violations.append({
                        "graph_id": gid,
                        "clause": "girth6_equivalence",
                        "witness": list(report.statements),
                    })
            guard(res, gid, run_girth)
        if "matroid" in results:
            res = results["matroid"]

            def run_matroid(res=res, gid=gid, g=g):
                try:
                    omega_is_matroid(g, cap_omega)
                    res.graphs_checked += 1
                except InternalCheckError as exc:
                    res.graphs_checked += 1
                    res.violations.append({
                        "graph_id": gid, "clause": "matroid_routes", "witness": str(exc),
                    })
            guard(res, gid, run_matroid)

    return RunReport([results[name] for name in chosen], len(corpus))
