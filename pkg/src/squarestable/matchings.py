"""Maximum matchings and matching-shaped queries.

The maximum-matching core is an augmenting-path search with blossom
contraction, so it is exact on general graphs.  On top of it sit the
perfect-matching uniqueness test, the forced pendant-edge matching, the
induced-matching predicate, and the "match A into S" counting queries used
by the maximum-stable-set characterisations.
"""

from __future__ import annotations

import enum
from collections import deque
from typing import Iterable, Optional

from .graphs import Graph, bit_indices, induced_subgraph, is_stable_set, mask_of, set_of

#: A matching is a frozenset of (u, v) edges with u < v, pairwise non-incident.
Matching = frozenset


def _normalize(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# Maximum matching (blossom contraction)
# ---------------------------------------------------------------------------


def maximum_matching(g: Graph) -> Matching:
    """A maximum matching of ``g``."""
    n = g.n
    adj = [bit_indices(m) for m in g.adj]
    match = [-1] * n

    # cheap greedy seed
    for v in range(n):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break

    def find_augmenting_path(root: int) -> bool:
        p = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        q = deque([root])

        def lca(a: int, b: int) -> int:
            on_path = [False] * n
            a = base[a]
            while True:
                on_path[a] = True
                if match[a] == -1:
                    break
                a = base[p[match[a]]]
            b = base[b]
            while not on_path[b]:
                b = base[p[match[b]]]
            return b

        def mark_path(v: int, b: int, child: int, in_blossom: list[bool]) -> None:
            while base[v] != b:
                in_blossom[base[v]] = True
                in_blossom[base[match[v]]] = True
                p[v] = child
                child = match[v]
                v = p[match[v]]

        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    # odd cycle: contract the blossom
                    curbase = lca(v, to)
                    in_blossom = [False] * n
                    mark_path(v, curbase, to, in_blossom)
                    mark_path(to, curbase, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        # augment along the alternating path back to root
                        u = to
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_augmenting_path(v)

    return frozenset(_normalize(v, match[v]) for v in range(n) if match[v] > v)


def matching_number(g: Graph) -> int:
    """The maximum number of pairwise non-incident edges."""
    return len(maximum_matching(g))


def is_valid_matching(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    seen = 0
    for u, v in m:
        if not g.has_edge(u, v):
            return False
        bits = (1 << u) | (1 << v)
        if seen & bits:
            return False
        seen |= bits
    return True


def is_perfect_matching(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    edges = list(m)
    return is_valid_matching(g, edges) and 2 * len(edges) == g.n


# ---------------------------------------------------------------------------
# Perfect-matching structure
# ---------------------------------------------------------------------------


class PerfectMatchingStatus(enum.Enum):
    NONE = "none"
    UNIQUE = "unique"
    MULTIPLE = "multiple"


def unique_perfect_matching(g: Graph) -> tuple[PerfectMatchingStatus, Optional[Matching]]:
    """Decide whether ``g`` has no, exactly one, or several perfect matchings.

    One perfect matching is found first; every other perfect matching must
    avoid at least one of its edges, so uniqueness reduces to re-solving with
    each matched edge deleted in turn.
    """
    if g.n % 2:
        return PerfectMatchingStatus.NONE, None
    m = maximum_matching(g)
    if 2 * len(m) < g.n:
        return PerfectMatchingStatus.NONE, None
    for u, v in sorted(m):
        alt = maximum_matching(g.remove_edge(u, v))
        if 2 * len(alt) == g.n:
            return PerfectMatchingStatus.MULTIPLE, None
    return PerfectMatchingStatus.UNIQUE, m


def count_perfect_matchings(g: Graph, cap: int = 2) -> int:
    """Number of perfect matchings, saturated at ``cap``."""
    if g.n % 2:
        return 0
    full = g.full_mask()

    def rec(uncovered: int) -> int:
        if not uncovered:
            return 1
        b = uncovered & -uncovered
        v = b.bit_length() - 1
        total = 0
        for u in bit_indices(g.adj[v] & uncovered):
            total += rec(uncovered & ~b & ~(1 << u))
            if total >= cap:
                return cap
        return total

    return rec(full)


def enumerate_perfect_matchings(g: Graph):
    """Yield every perfect matching (deterministic order)."""
    if g.n % 2:
        return
    full = g.full_mask()

    def rec(uncovered: int, acc: list[tuple[int, int]]):
        if not uncovered:
            yield frozenset(acc)
            return
        b = uncovered & -uncovered
        v = b.bit_length() - 1
        for u in bit_indices(g.adj[v] & uncovered):
            acc.append(_normalize(v, u))
            yield from rec(uncovered & ~b & ~(1 << u), acc)
            acc.pop()

    yield from rec(full, [])


def has_induced_perfect_matching(g: Graph) -> bool:
    """True iff some perfect matching of ``g`` is an induced matching."""
    for m in enumerate_perfect_matchings(g):
        if is_induced_matching(g, m):
            return True
    return False


def pendant_perfect_matching(g: Graph) -> Optional[Matching]:
    """The perfect matching made of pendant edges, if one exists.

    Each pendant vertex forces its unique incident edge, so such a matching
    is unique when it exists: collect the forced edges and check that they
    form a matching covering every vertex.
    """
    edges = set()
    for v in range(g.n):
        if g.adj[v].bit_count() == 1:
            edges.add(_normalize(v, g.adj[v].bit_length() - 1))
    covered = 0
    for u, v in edges:
        covered |= (1 << u) | (1 << v)
    if covered != g.full_mask() or covered.bit_count() != 2 * len(edges):
        return None
    return frozenset(edges)


def is_induced_matching(g: Graph, m: Iterable[tuple[int, int]]) -> bool:
    """True iff no graph edge joins endpoints of two distinct matching edges."""
    edges = list(m)
    if not is_valid_matching(g, edges):
        raise ValueError("not a valid matching of this graph")
    covered = 0
    for u, v in edges:
        covered |= (1 << u) | (1 << v)
    for u, v in edges:
        if g.adj[u] & covered != 1 << v or g.adj[v] & covered != 1 << u:
            return False
    return True


# ---------------------------------------------------------------------------
# Matching a stable set into another set
# ---------------------------------------------------------------------------


def _count_matchings_into(g: Graph, amask: int, smask: int, cap: int):
    """Count matchings saturating the vertex mask ``amask`` into ``smask``,
    saturated at ``cap``; also return the first witness found."""
    avs = bit_indices(amask)
    opts = [g.adj[x] & smask for x in avs]
    # fail-first: scan the most constrained vertices early
    order = sorted(range(len(avs)), key=lambda i: (opts[i].bit_count(), avs[i]))
    avs = [avs[i] for i in order]
    opts = [opts[i] for i in order]
    witness: Optional[frozenset] = None

    def rec(i: int, used: int, acc: list[tuple[int, int]]) -> int:
        nonlocal witness
        if i == len(avs):
            if witness is None:
                witness = frozenset(acc)
            return 1
        total = 0
        for y in bit_indices(opts[i] & ~used):
            acc.append(_normalize(avs[i], y))
            total += rec(i + 1, used | (1 << y), acc)
            acc.pop()
            if total >= cap:
                return cap
        return total

    return rec(0, 0, []), witness


def match_into(g: Graph, a: Iterable[int], s: Iterable[int], cap: int = 2):
    """Count the matchings that saturate ``a`` using only edges into ``s``.

    The count is saturated at ``cap`` (callers only ever distinguish
    none / unique / several).  Returns ``(count, witness)`` where the witness
    is the first matching found, or ``None``.
    """
    amask, smask = mask_of(a), mask_of(s)
    if amask & smask:
        raise ValueError("the two vertex sets must be disjoint")
    return _count_matchings_into(g, amask, smask, cap)


def berge_check(g: Graph, s: Iterable[int]) -> bool:
    """True iff every stable set disjoint from ``s`` can be matched into ``s``.

    Only inclusion-maximal stable sets outside ``s`` need testing, since a
    matching of a superset restricts to any subset.  This predicate holds
    exactly when ``s`` is a maximum stable set.
    """
    from .solvers import enumerate_maximal_stable_sets

    svs = frozenset(s)
    if not is_stable_set(g, svs):
        raise ValueError("s must be a stable set")
    smask = mask_of(svs)
    rest = set_of(g.full_mask() & ~smask)
    sub, remap = induced_subgraph(g, rest)
    for m in enumerate_maximal_stable_sets(sub):
        amask = mask_of(remap[i] for i in m)
        count, _ = _count_matchings_into(g, amask, smask, 1)
        if count == 0:
            return False
    return True
