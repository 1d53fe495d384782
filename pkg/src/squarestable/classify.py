"""Graph-class predicates with witnesses and built-in cross-checks.

Square-stability (alpha of the graph equals alpha of its square) sits at the
centre; around it: well-coveredness, the Koenig-Egervary property, simplex
structure, stability of alpha under edge edits, the unique-matching and
exchange properties of maximum stable sets, and the matroid test on the
family of maximum stable sets.

Wherever a predicate has both a definition and an independent
characterisation, both are computed and compared; a mismatch raises
:class:`InternalCheckError` instead of silently trusting either route.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field

from .errors import CapExceededError, InternalCheckError
from .graphs import (
    Graph,
    bit_indices,
    components,
    induced_subgraph,
    is_chordal,
    is_clique,
    is_stable_set,
    isolated_vertices,
    mask_of,
    pendant_vertices,
    square,
    stable_subsets,
)
from .matchings import _count_matchings_into, matching_number, pendant_perfect_matching
from .solvers import (
    enumerate_maximal_cliques,
    enumerate_maximal_stable_sets,
    enumerate_maximum_stable_sets,
    maximum_stable_set,
    stability_number,
)


class AlphaPlusClass(enum.Enum):
    """How alpha reacts to adding any missing edge, refined by the size of
    the intersection of all maximum stable sets (0 or 1 when stable)."""

    NOT_PLUS = "NOT_PLUS"
    PLUS_0 = "PLUS_0"
    PLUS_1 = "PLUS_1"


@dataclass(frozen=True)
class Simplex:
    """A maximal clique containing at least one simplicial vertex."""

    clique: frozenset[int]
    simplicial_members: frozenset[int]


@dataclass
class ClassificationReport:
    square_stable: bool
    well_covered: bool
    very_well_covered: bool
    koenig_egervary: bool
    simplicial_graph: bool
    chordal: bool
    simplex_partition: bool
    alpha_minus: bool
    alpha_plus_class: AlphaPlusClass
    omega_matroid: bool
    witnesses: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        d = {
            "square_stable": self.square_stable,
            "well_covered": self.well_covered,
            "very_well_covered": self.very_well_covered,
            "koenig_egervary": self.koenig_egervary,
            "simplicial_graph": self.simplicial_graph,
            "chordal": self.chordal,
            "simplex_partition": self.simplex_partition,
            "alpha_minus": self.alpha_minus,
            "alpha_plus_class": self.alpha_plus_class.value,
            "omega_matroid": self.omega_matroid,
            "witnesses": self.witnesses,
        }
        return d


# ---------------------------------------------------------------------------
# Square-stability and coveredness
# ---------------------------------------------------------------------------


def is_square_stable(g: Graph, cap=None) -> bool:
    """True iff the stability number survives squaring the graph."""
    return stability_number(g, cap) == stability_number(square(g), cap)


def square_stable_witness(g: Graph, cap=None):
    """A maximum stable set of the square whose vertices are pairwise at
    distance at least 3, or ``None`` when the graph is not square-stable."""
    if not is_square_stable(g, cap):
        return None
    return maximum_stable_set(square(g), cap)


def is_well_covered(g: Graph, cap=None) -> bool:
    """True iff there are no isolated vertices and every maximal stable set
    is maximum."""
    if isolated_vertices(g):
        return False
    sizes = {len(s) for s in enumerate_maximal_stable_sets(g, cap)}
    return len(sizes) <= 1


def well_covered_counterexample(g: Graph, cap=None):
    """Why a graph fails to be well-covered.

    Returns ``("isolated_vertex", v)`` for the smallest isolated vertex, or
    ``("non_maximum_maximal", s)`` for the lexicographically smallest
    non-maximum maximal stable set, or ``None`` when well-covered.
    """
    iso = isolated_vertices(g)
    if iso:
        return ("isolated_vertex", min(iso))
    sets = enumerate_maximal_stable_sets(g, cap)
    alpha = max(len(s) for s in sets)
    for s in sets:
        if len(s) < alpha:
            return ("non_maximum_maximal", s)
    return None


def is_very_well_covered(g: Graph, cap=None) -> bool:
    """Well-covered with exactly twice the stability number many vertices."""
    return is_well_covered(g, cap) and g.n == 2 * stability_number(g)


def is_koenig_egervary(g: Graph, cap=None) -> bool:
    """True iff the stability number plus the matching number equals the order."""
    return stability_number(g, cap) + matching_number(g) == g.n


def pendants_contain_maximum_stable_set(g: Graph, cap=None) -> bool:
    """True iff some maximum stable set consists of pendant vertices only.

    Equivalent to ``alpha(G[P]) == alpha(G)`` for the pendant set P.  For
    every connected graph except K2 this is just "exactly alpha pendant
    vertices", but in K2 the two pendants are adjacent and only one can be
    picked.
    """
    pend = pendant_vertices(g)
    sub, _ = induced_subgraph(g, pend)
    return stability_number(sub, cap) == stability_number(g, cap)


# ---------------------------------------------------------------------------
# Simplicial structure
# ---------------------------------------------------------------------------


def simplicial_vertices(g: Graph) -> frozenset[int]:
    """All vertices whose open neighbourhood induces a clique (isolated
    vertices qualify vacuously)."""
    out = []
    for v in range(g.n):
        m = g.adj[v]
        ok = True
        for u in bit_indices(m):
            if m & ~(1 << u) & ~g.adj[u]:
                ok = False
                break
        if ok:
            out.append(v)
    return frozenset(out)


def simplexes(g: Graph) -> list[Simplex]:
    """Every maximal clique that contains at least one simplicial vertex."""
    simp = simplicial_vertices(g)
    out = []
    for clique in enumerate_maximal_cliques(g):
        members = clique & simp
        if members:
            out.append(Simplex(clique, members))
    return out


def simplex_partition_check(g: Graph) -> bool:
    """True iff every vertex lies in exactly one simplex."""
    counts = [0] * g.n
    for s in simplexes(g):
        for v in s.clique:
            counts[v] += 1
    return all(c == 1 for c in counts)


def is_simplicial_graph(g: Graph) -> bool:
    """True iff every vertex is simplicial or adjacent to a simplicial vertex."""
    simp = mask_of(simplicial_vertices(g))
    for v in range(g.n):
        if not (simp >> v & 1 or g.adj[v] & simp):
            return False
    return True


# ---------------------------------------------------------------------------
# Stability of alpha under edge edits
# ---------------------------------------------------------------------------


def alpha_minus_stable(g: Graph, cap=None, cap_omega=None) -> bool:
    """True iff deleting any single edge leaves the stability number unchanged.

    Computed from the definition, and cross-checked (when the family of
    maximum stable sets is enumerable) against the criterion that every
    outside vertex has at least two neighbours in every maximum stable set.
    """
    alpha = stability_number(g, cap)
    by_definition = all(
        stability_number(g.remove_edge(u, v), cap) == alpha for u, v in g.edges()
    )
    try:
        family = enumerate_maximum_stable_sets(g, cap_omega)
    except CapExceededError:
        return by_definition
    by_criterion = True
    for s in family.sets:
        smask = mask_of(s)
        for v in bit_indices(g.full_mask() & ~smask):
            if (g.adj[v] & smask).bit_count() < 2:
                by_criterion = False
                break
        if not by_criterion:
            break
    if by_definition != by_criterion:
        raise InternalCheckError(
            f"edge-deletion route ({by_definition}) disagrees with "
            f"neighbourhood route ({by_criterion}) for alpha_minus"
        )
    return by_definition


def alpha_plus_class(g: Graph, cap=None, cap_omega=None) -> AlphaPlusClass:
    """Classify by the intersection of all maximum stable sets: empty,
    a single vertex, or larger (alpha then drops under some edge addition).

    Cross-checked against the edge-addition definition of the property.
    """
    family = enumerate_maximum_stable_sets(g, cap_omega)
    core = len(family.core)
    cls = (
        AlphaPlusClass.PLUS_0 if core == 0
        else AlphaPlusClass.PLUS_1 if core == 1
        else AlphaPlusClass.NOT_PLUS
    )
    alpha = stability_number(g, cap)
    full = g.full_mask()
    by_definition = True
    for v in range(g.n):
        for u in bit_indices(full & ~g.adj[v] & ~((1 << (v + 1)) - 1)):
            if stability_number(g.add_edge(v, u), cap) != alpha:
                by_definition = False
                break
        if not by_definition:
            break
    if by_definition != (cls is not AlphaPlusClass.NOT_PLUS):
        raise InternalCheckError(
            f"core-size route ({cls}) disagrees with edge-addition route "
            f"({by_definition}) for alpha_plus"
        )
    return cls


# ---------------------------------------------------------------------------
# The unique-matching (P1) and exchange (P2) properties
# ---------------------------------------------------------------------------


def p1_unique_matchability(g: Graph, s) -> bool:
    """True iff every stable set disjoint from ``s`` has exactly one matching
    into ``s``.

    ``s`` need not be a maximum stable set.  Evaluated both exhaustively over
    stable sets and by the direct criterion (every outside vertex has exactly
    one neighbour in ``s``, and no two non-adjacent outside vertices share
    that neighbour); the two must agree.
    """
    smask = mask_of(s)
    rest = g.full_mask() & ~smask

    direct = True
    partner: dict[int, int] = {}
    for v in bit_indices(rest):
        hits = g.adj[v] & smask
        if hits.bit_count() != 1:
            direct = False
            break
        partner[v] = hits.bit_length() - 1
    if direct:
        grouped: dict[int, list[int]] = {}
        for v, w in partner.items():
            grouped.setdefault(w, []).append(v)
        for vs in grouped.values():
            for a, b in itertools.combinations(vs, 2):
                if not g.has_edge(a, b):
                    direct = False
                    break
            if not direct:
                break

    exhaustive = True
    for amask in stable_subsets(g, rest):
        if amask == 0:
            continue
        count, _ = _count_matchings_into(g, amask, smask, 2)
        if count != 1:
            exhaustive = False
            break

    if direct != exhaustive:
        raise InternalCheckError(
            f"direct unique-matchability route ({direct}) disagrees with "
            f"exhaustive route ({exhaustive})"
        )
    return exhaustive


def p2_exchangeability(g: Graph, s, cap=None) -> bool:
    """True iff every non-empty stable set A disjoint from ``s`` extends by
    part of ``s`` to a maximum stable set.

    The proof construction (take the part of ``s`` missed by A's
    neighbourhood) is tried first; if it falls short, all subsets of the
    right size are scanned.  The empty set is vacuously fine: only a proper
    part of ``s`` would be allowed and could never reach maximum size.
    """
    smask = mask_of(s)
    rest = g.full_mask() & ~smask
    alpha = stability_number(g, cap)
    svs = sorted(bit_indices(smask))
    for amask in stable_subsets(g, rest):
        if amask == 0:
            continue
        na = 0
        for v in bit_indices(amask):
            na |= g.adj[v]
        need = alpha - amask.bit_count()
        if (smask & ~na).bit_count() >= need:
            continue
        found = False
        for combo in itertools.combinations(svs, need):
            union = amask | mask_of(combo)
            if _is_stable_mask(g, union):
                found = True
                break
        if not found:
            return False
    return True


def _is_stable_mask(g: Graph, m: int) -> bool:
    mm = m
    while mm:
        b = mm & -mm
        if g.adj[b.bit_length() - 1] & m:
            return False
        mm ^= b
    return True


def _require_maximum_stable(g: Graph, s0, cap=None) -> frozenset[int]:
    s = frozenset(s0)
    if not is_stable_set(g, s):
        raise ValueError("s0 must be a stable set")
    if len(s) != stability_number(g, cap):
        raise ValueError("s0 must be a maximum stable set")
    return s


def property_p1(g: Graph, s0, cap=None) -> bool:
    """Unique matchability of every disjoint stable set into the maximum
    stable set ``s0``.  Raises ``ValueError`` unless ``s0`` is maximum."""
    s = _require_maximum_stable(g, s0, cap)
    return p1_unique_matchability(g, s)


def property_p2(g: Graph, s0, cap=None) -> bool:
    """Exchange property of the maximum stable set ``s0``: every disjoint
    stable set extends by part of ``s0`` to a maximum stable set."""
    s = _require_maximum_stable(g, s0, cap)
    return p2_exchangeability(g, s, cap)


# ---------------------------------------------------------------------------
# Matroid structure of the family of maximum stable sets
# ---------------------------------------------------------------------------


_MATROID_SET_BUDGET = 200_000


def omega_is_matroid(g: Graph, cap_omega=None) -> bool:
    """True iff the stable sets of ``g`` are the independent sets of a
    matroid, whose bases are then exactly the maximum stable sets.

    Checked by brute force over the hereditary family and by the structural
    criterion (every component is a clique); the two must agree.  The brute
    force uses the augmentation axiom, which for a hereditary family reduces
    to: no stable set ``I`` admits a stable subset of its closed
    neighbourhood larger than ``I`` (a larger stable set avoiding the
    neighbourhood would itself provide the augmenting element).
    """
    from .solvers import DEFAULT_CAP_OMEGA, OMEGA_CAP, _alpha_mask, _check_cap

    _check_cap(g.n, cap_omega, DEFAULT_CAP_OMEGA, OMEGA_CAP)
    exchange = True
    seen = 0
    for imask in stable_subsets(g, g.full_mask()):
        seen += 1
        if seen > _MATROID_SET_BUDGET:
            raise CapExceededError("matroid stable-set budget", _MATROID_SET_BUDGET, seen)
        closed = imask
        mm = imask
        while mm:
            b = mm & -mm
            closed |= g.adj[b.bit_length() - 1]
            mm ^= b
        if _alpha_mask(g.adj, closed) > imask.bit_count():
            exchange = False
            break

    cliques = all(is_clique(g, comp) for comp in components(g))

    if exchange != cliques:
        raise InternalCheckError(
            f"augmentation route ({exchange}) disagrees with "
            f"clique-components route ({cliques}) for omega_is_matroid"
        )
    return exchange


# ---------------------------------------------------------------------------
# Aggregate report
# ---------------------------------------------------------------------------


def classify(g: Graph, cap=None, cap_omega=None) -> ClassificationReport:
    """Full classification with witnesses and report-level consistency checks."""
    ss = is_square_stable(g, cap)
    wc = is_well_covered(g, cap_omega)
    vwc = is_very_well_covered(g, cap_omega)
    ke = is_koenig_egervary(g, cap)
    cls = alpha_plus_class(g, cap, cap_omega)
    aminus = alpha_minus_stable(g, cap, cap_omega)
    family = enumerate_maximum_stable_sets(g, cap_omega)

    witnesses: dict = {
        "maximum_stable_set": sorted(maximum_stable_set(g, cap)),
        "omega_core": sorted(family.core),
    }
    if ss:
        witnesses["square_stable_distance3_set"] = sorted(square_stable_witness(g, cap))
    if not wc:
        kind, evidence = well_covered_counterexample(g, cap_omega)
        witnesses["well_covered_failure"] = (
            {"isolated_vertex": evidence} if kind == "isolated_vertex"
            else {"non_maximum_maximal": sorted(evidence)}
        )
    ppm = pendant_perfect_matching(g)
    if ppm is not None:
        witnesses["pendant_perfect_matching"] = sorted(ppm)
    witnesses["simplexes"] = [
        {"clique": sorted(s.clique), "simplicial": sorted(s.simplicial_members)}
        for s in simplexes(g)
    ]

    report = ClassificationReport(
        square_stable=ss,
        well_covered=wc,
        very_well_covered=vwc,
        koenig_egervary=ke,
        simplicial_graph=is_simplicial_graph(g),
        chordal=is_chordal(g),
        simplex_partition=simplex_partition_check(g),
        alpha_minus=aminus,
        alpha_plus_class=cls,
        omega_matroid=omega_is_matroid(g, cap_omega),
        witnesses=witnesses,
    )

    if report.very_well_covered and not report.well_covered:
        raise InternalCheckError("very well-covered graph reported as not well-covered")
    # Square-stability implies well-coveredness, the empty-core property and
    # the failure of alpha_minus -- but only on graphs where every vertex has
    # a neighbour; isolated vertices (and the edgeless graphs they produce)
    # are exempt by definition of well-covered and by vacuity of alpha_minus.
    if report.square_stable and g.n > 0 and not isolated_vertices(g):
        if not report.well_covered:
            raise InternalCheckError("square-stable graph reported as not well-covered")
        if report.alpha_plus_class is not AlphaPlusClass.PLUS_0:
            raise InternalCheckError("square-stable graph with a non-empty core")
        if report.alpha_minus:
            raise InternalCheckError("square-stable graph reported alpha_minus-stable")
    return report
