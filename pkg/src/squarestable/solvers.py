"""Exact exponential solvers for stability, domination and clique-cover
invariants, plus exhaustive enumeration of stable-set families.

Everything here is exact: branch-and-bound for the optimisation numbers,
full enumeration (pivoted Bron-Kerbosch, levelled branching) for the set
families.  Two caps guard against accidental blow-ups: a hard solver cap
(default 64) and a family-enumeration cap (default 24, since the number of
maximum stable sets can be exponential even when the number itself is easy).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceededError, InternalCheckError
from .graphs import Graph, bit_indices, set_of, square

DEFAULT_CAP_N = 64
DEFAULT_CAP_OMEGA = 24

SOLVER_CAP = "exact solver cap"
OMEGA_CAP = "stable-set enumeration cap"


def _check_cap(n: int, cap, default: int, name: str) -> None:
    limit = default if cap is None else cap
    if n > limit:
        raise CapExceededError(name, limit, n)


@dataclass(frozen=True)
class InvariantRecord:
    """The six chained invariants of a graph and its square, plus the
    matching number and order."""

    alpha: int
    alpha_sq: int
    theta: int
    theta_sq: int
    gamma: int
    idom: int
    mu: int
    n: int

    def chain(self) -> tuple[int, int, int, int, int, int]:
        """Values in their proven order: alpha_sq, theta_sq, gamma, idom, alpha, theta."""
        return (self.alpha_sq, self.theta_sq, self.gamma, self.idom, self.alpha, self.theta)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "alpha": self.alpha,
            "alpha_sq": self.alpha_sq,
            "theta": self.theta,
            "theta_sq": self.theta_sq,
            "gamma": self.gamma,
            "idom": self.idom,
            "mu": self.mu,
        }


@dataclass(frozen=True)
class StableSetFamily:
    """A family of equal-size stable sets together with its intersection."""

    sets: tuple[frozenset[int], ...]
    core: frozenset[int]


# ---------------------------------------------------------------------------
# Maximum stable sets
# ---------------------------------------------------------------------------


def _clique_cover_bound(adj: tuple[int, ...], cand: int) -> int:
    # Greedy clique partition of the candidate set; its size bounds the
    # stability number from above.
    cliques: list[int] = []
    mm = cand
    while mm:
        b = mm & -mm
        v = b.bit_length() - 1
        mm ^= b
        av = adj[v]
        for i, cl in enumerate(cliques):
            if cl & ~av == 0:
                cliques[i] = cl | b
                break
        else:
            cliques.append(b)
    return len(cliques)


def _alpha_mask(adj: tuple[int, ...], mask: int) -> int:
    best = 0

    def rec(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if not cand:
            return
        if size + _clique_cover_bound(adj, cand) <= best:
            return
        # branch on a vertex of maximum degree inside the candidate set
        v, vdeg = -1, -1
        mm = cand
        while mm:
            b = mm & -mm
            w = b.bit_length() - 1
            d = (adj[w] & cand).bit_count()
            if d > vdeg:
                v, vdeg = w, d
            mm ^= b
        rec(cand & ~adj[v] & ~(1 << v), size + 1)
        rec(cand & ~(1 << v), size)

    rec(mask, 0)
    return best


def stability_number(g: Graph, cap=None) -> int:
    """Exact maximum size of a stable set (branch-and-bound on bitsets)."""
    _check_cap(g.n, cap, DEFAULT_CAP_N, SOLVER_CAP)
    return _alpha_mask(g.adj, g.full_mask())


def maximum_stable_set(g: Graph, cap=None) -> frozenset[int]:
    """One maximum stable set: the lexicographically smallest as a sorted
    vertex list."""
    _check_cap(g.n, cap, DEFAULT_CAP_N, SOLVER_CAP)
    adj = g.adj
    remaining = _alpha_mask(adj, g.full_mask())
    chosen: list[int] = []
    cand = g.full_mask()
    v = 0
    while remaining:
        bit = 1 << v
        if cand & bit and 1 + _alpha_mask(adj, cand & ~adj[v] & ~bit) == remaining:
            chosen.append(v)
            cand &= ~adj[v] & ~bit
            remaining -= 1
        else:
            cand &= ~bit
        v += 1
    return frozenset(chosen)


def enumerate_maximum_stable_sets(g: Graph, cap=None) -> StableSetFamily:
    """Every maximum stable set, exactly once, in lexicographic order."""
    _check_cap(g.n, cap, DEFAULT_CAP_OMEGA, OMEGA_CAP)
    adj = g.adj
    alpha = _alpha_mask(adj, g.full_mask())
    results: list[frozenset[int]] = []

    def rec(chosen: list[int], cand: int, size: int) -> None:
        if size == alpha:
            results.append(frozenset(chosen))
            return
        while cand:
            if size + _clique_cover_bound(adj, cand) < alpha:
                return
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            chosen.append(v)
            rec(chosen, cand & ~adj[v], size + 1)
            chosen.pop()

    rec([], g.full_mask(), 0)
    core = frozenset(range(g.n))
    for s in results:
        core &= s
    return StableSetFamily(tuple(results), core)


def enumerate_maximal_cliques(g: Graph) -> list[frozenset[int]]:
    """All inclusion-maximal cliques (pivoted Bron-Kerbosch), sorted."""
    return sorted((set_of(m) for m in _bron_kerbosch(g.adj, g.full_mask())), key=sorted)


def enumerate_maximal_stable_sets(g: Graph, cap=None) -> list[frozenset[int]]:
    """All inclusion-maximal stable sets, each exactly once, sorted."""
    _check_cap(g.n, cap, DEFAULT_CAP_OMEGA, OMEGA_CAP)
    full = g.full_mask()
    co_adj = tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.adj))
    return sorted((set_of(m) for m in _bron_kerbosch(co_adj, full)), key=sorted)


def _bron_kerbosch(adj: tuple[int, ...], full: int) -> list[int]:
    results: list[int] = []
    if not full:
        results.append(0)
        return results

    def bk(r: int, p: int, x: int) -> None:
        if not p and not x:
            results.append(r)
            return
        # pivot on the vertex covering most of p
        pivot, best = -1, -1
        mm = p | x
        while mm:
            b = mm & -mm
            u = b.bit_length() - 1
            c = (p & adj[u]).bit_count()
            if c > best:
                pivot, best = u, c
            mm ^= b
        ext = p & ~adj[pivot]
        while ext:
            b = ext & -ext
            ext ^= b
            v = b.bit_length() - 1
            bk(r | b, p & adj[v], x & adj[v])
            p &= ~b
            x |= b

    bk(0, full, 0)
    return results


# ---------------------------------------------------------------------------
# Domination and clique cover
# ---------------------------------------------------------------------------


def independent_domination_number(g: Graph, cap=None) -> int:
    """Minimum cardinality of a maximal stable set."""
    sets = enumerate_maximal_stable_sets(g, cap)
    return min(len(s) for s in sets)


def domination_number(g: Graph, cap=None) -> int:
    """Exact minimum size of a dominating set (branch over the closed
    neighbourhood of the first uncovered vertex)."""
    _check_cap(g.n, cap, DEFAULT_CAP_N, SOLVER_CAP)
    n = g.n
    if n == 0:
        return 0
    closed = tuple(m | (1 << v) for v, m in enumerate(g.adj))
    full = g.full_mask()

    # greedy cover for the initial upper bound
    best = 0
    uncovered = full
    while uncovered:
        gain, pick = -1, 0
        for v in range(n):
            c = (closed[v] & uncovered).bit_count()
            if c > gain:
                gain, pick = c, v
        uncovered &= ~closed[pick]
        best += 1

    def rec(uncovered: int, size: int) -> None:
        nonlocal best
        if not uncovered:
            if size < best:
                best = size
            return
        max_cover = max((closed[v] & uncovered).bit_count() for v in range(n))
        if size + -(-uncovered.bit_count() // max_cover) >= best:
            return
        v = (uncovered & -uncovered).bit_length() - 1
        for u in bit_indices(closed[v]):
            rec(uncovered & ~closed[u], size + 1)

    rec(full, 0)
    return best


def _exact_coloring(adj: tuple[int, ...], n: int) -> list[int]:
    """Minimum proper colouring as a list of colour-class masks."""
    if n == 0:
        return []
    # greedy clique seeds the vertex order and the lower bound
    order_by_degree = sorted(range(n), key=lambda v: (-adj[v].bit_count(), v))
    clique: list[int] = []
    cmask = 0
    for v in order_by_degree:
        if cmask & ~adj[v] == 0:
            clique.append(v)
            cmask |= 1 << v
    rest = [v for v in order_by_degree if not cmask >> v & 1]
    order = clique + rest
    lower = len(clique)

    # greedy colouring for the initial upper bound
    best: list[int] = []
    for v in order:
        for i, cl in enumerate(best):
            if cl & adj[v] == 0:
                best[i] = cl | (1 << v)
                break
        else:
            best.append(1 << v)
    best_k = len(best)
    if best_k == lower:
        return best

    classes: list[int] = []

    def rec(idx: int) -> None:
        nonlocal best, best_k
        if len(classes) >= best_k:
            return
        if idx == n:
            best = classes.copy()
            best_k = len(classes)
            return
        v = order[idx]
        bit = 1 << v
        for i, cl in enumerate(classes):
            if cl & adj[v] == 0:
                classes[i] = cl | bit
                rec(idx + 1)
                classes[i] = cl
                if best_k == lower:
                    return
        if len(classes) + 1 < best_k:
            classes.append(bit)
            rec(idx + 1)
            classes.pop()

    rec(0)
    return best


def clique_cover(g: Graph, cap=None) -> list[frozenset[int]]:
    """A minimum partition of the vertices into cliques.

    Computed as an exact colouring of the complement, the strongest standard
    exact method at this scale.
    """
    _check_cap(g.n, cap, DEFAULT_CAP_N, SOLVER_CAP)
    full = g.full_mask()
    co_adj = tuple(full & ~m & ~(1 << v) for v, m in enumerate(g.adj))
    classes = _exact_coloring(co_adj, g.n)
    return sorted((set_of(c) for c in classes), key=sorted)


def clique_cover_number(g: Graph, cap=None) -> int:
    """Minimum number of cliques whose union covers the vertex set."""
    return len(clique_cover(g, cap))


# ---------------------------------------------------------------------------
# The invariant chain
# ---------------------------------------------------------------------------


def invariant_chain(g: Graph, cap=None, cap_omega=None) -> InvariantRecord:
    """All chained invariants of ``g`` and its square, order-checked.

    The ordering alpha_sq <= theta_sq <= gamma <= idom <= alpha <= theta is
    asserted before returning; a violation is a solver bug and raises
    :class:`InternalCheckError` rather than returning silently.
    """
    from .matchings import matching_number

    sq = square(g)
    record = InvariantRecord(
        alpha=stability_number(g, cap),
        alpha_sq=stability_number(sq, cap),
        theta=clique_cover_number(g, cap),
        theta_sq=clique_cover_number(sq, cap),
        gamma=domination_number(g, cap),
        idom=independent_domination_number(g, cap_omega),
        mu=matching_number(g),
        n=g.n,
    )
    chain = record.chain()
    if any(a > b for a, b in zip(chain, chain[1:])):
        raise InternalCheckError(f"invariant chain violated: {record}")
    if record.alpha + record.mu > record.n:
        raise InternalCheckError(f"alpha + mu exceeds order: {record}")
    return record
