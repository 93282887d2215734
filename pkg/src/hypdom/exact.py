"""Exact matching, domination and transversal numbers for small hypergraphs.

All three searches work on Python-int bitmasks. Matching is a memoized
branch on the lowest free vertex (take one of its edges, or drop it).
Domination and transversal are both minimum set cover, solved by
feasibility search with a packing lower bound and a failure memo.

Certificates are the lexicographically least optimum. Once the optimum is
known they are read off by probing: the least index that can start an
optimal solution also starts the lexicographically least one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Literal

from .core import Hypergraph, mask_of
from .errors import BudgetExceeded, NoEdges

DEFAULT_NODE_LIMIT = 5_000_000

Kind = Literal["matching", "dominating", "transversal"]


@dataclass(frozen=True)
class SolveResult:
    value: int
    certificate: tuple[int, ...]
    kind: Kind

    def certificate_edges(self, H: Hypergraph):
        """Matching certificates hold edge indices; map them to edges."""
        assert self.kind == "matching"
        return [H.edges[i] for i in self.certificate]


@dataclass(frozen=True)
class BoundReport:
    nu: int
    gamma: int
    tau: int
    rank: int
    violated: tuple[str, ...] = field(default=())

    @property
    def chain_ok(self) -> bool:
        return not self.violated


class _Budget:
    __slots__ = ("left", "limit")

    def __init__(self, limit):
        self.limit = limit
        self.left = limit

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded(f"search exceeded {self.limit} nodes")


# ---------------------------------------------------------------- matching


class _Packer:
    """Maximum matching in H[free] for arbitrary free-vertex masks."""

    def __init__(self, H: Hypergraph, node_limit: int):
        self.by_vertex: list[list[int]] = [[] for _ in range(H.n)]
        for em in H.edge_masks:
            low = (em & -em).bit_length() - 1
            self.by_vertex[low].append(em)
        self.min_size = min((len(e) for e in H.edges), default=2)
        self.memo: dict[int, int] = {0: 0}
        self.budget = _Budget(node_limit)

    def best(self, free: int) -> int:
        memo = self.memo
        got = memo.get(free)
        if got is not None:
            return got
        self.budget.tick()
        if free.bit_count() < self.min_size:
            memo[free] = 0
            return 0
        # Branch on the lowest free vertex v, using only edges whose least
        # vertex is v: edges with a smaller least vertex are out of reach
        # because every lower vertex is already used or dropped.
        low = free & -free
        rest = free ^ low
        result = self.best(rest)
        for em in self.by_vertex[low.bit_length() - 1]:
            if em & free == em:
                cand = 1 + self.best(free & ~em)
                if cand > result:
                    result = cand
        memo[free] = result
        return result


def _lex_matching(H: Hypergraph, packer: _Packer, free: int, target: int) -> tuple[int, ...]:
    chosen = []
    for i, em in enumerate(H.edge_masks):
        if target == 0:
            break
        if em & free == em and 1 + packer.best(free & ~em) == target:
            chosen.append(i)
            free &= ~em
            target -= 1
    assert target == 0
    return tuple(chosen)


def _all_vertices(H: Hypergraph) -> int:
    return (1 << H.n) - 1


def max_matching(H: Hypergraph, node_limit: int = DEFAULT_NODE_LIMIT) -> SolveResult:
    if not H.edges:
        raise NoEdges("matching number needs at least one edge")
    packer = _Packer(H, node_limit)
    full = _all_vertices(H)
    nu = packer.best(full)
    return SolveResult(nu, _lex_matching(H, packer, full, nu), "matching")


def max_matching_avoiding(
    H: Hypergraph, forbidden, node_limit: int = DEFAULT_NODE_LIMIT
) -> tuple[int, ...] | None:
    """A matching of size nu(H) touching no forbidden vertex, or None.

    Returned as edge indices, lexicographically least.
    """
    if not H.edges:
        return None
    packer = _Packer(H, node_limit)
    full = _all_vertices(H)
    nu = packer.best(full)
    free = full & ~mask_of(forbidden)
    if packer.best(free) < nu:
        return None
    return _lex_matching(H, packer, free, nu)


def matching_number(H: Hypergraph, free: int | None = None,
                    node_limit: int = DEFAULT_NODE_LIMIT) -> int:
    """nu of H restricted to the vertices in ``free`` (all vertices by default)."""
    packer = _Packer(H, node_limit)
    return packer.best(_all_vertices(H) if free is None else free)


# --------------------------------------------------------------- set cover


class _Coverer:
    """Minimum number of sets covering a universe mask."""

    def __init__(self, sets: list[int], universe: int, node_limit: int):
        self.sets = sets
        self.universe = universe
        nbits = universe.bit_length()
        self.coverers = [0] * nbits
        for j, s in enumerate(sets):
            x = s & universe
            while x:
                low = x & -x
                self.coverers[low.bit_length() - 1] |= 1 << j
                x ^= low
        self.popcov = [c.bit_count() for c in self.coverers]
        # elements ordered by how few sets cover them; reused by every bound
        self.order = sorted(
            (i for i in range(nbits) if universe >> i & 1), key=lambda i: self.popcov[i]
        )
        self.failed: dict[int, int] = {}
        self.budget = _Budget(node_limit)

    def lower_bound(self, U: int) -> int:
        # elements with pairwise disjoint coverer sets need distinct sets
        used = 0
        lb = 0
        cov = self.coverers
        for i in self.order:
            if U >> i & 1 and not cov[i] & used:
                used |= cov[i]
                lb += 1
        return lb

    def feasible(self, U: int, k: int) -> bool:
        if U == 0:
            return True
        if k <= 0:
            return False
        if self.failed.get(U, -1) >= k:
            return False
        self.budget.tick()
        if self.lower_bound(U) > k:
            self.failed[U] = max(self.failed.get(U, -1), k)
            return False
        # branch on the uncovered element with the fewest coverers
        best_i = -1
        for i in self.order:
            if U >> i & 1:
                best_i = i
                break
        options = {}
        c = self.coverers[best_i]
        while c:
            low = c & -c
            j = low.bit_length() - 1
            c ^= low
            part = self.sets[j] & U
            options[part] = True
        parts = sorted(options, key=lambda p: -p.bit_count())
        # a part contained in another part is never needed
        kept = []
        for p in parts:
            if not any(q & p == p for q in kept):
                kept.append(p)
        for p in kept:
            if self.feasible(U & ~p, k - 1):
                return True
        self.failed[U] = max(self.failed.get(U, -1), k)
        return False

    def solve(self) -> tuple[int, tuple[int, ...]]:
        U = self.universe
        k = self.lower_bound(U)
        while not self.feasible(U, k):
            k += 1
        chosen = []
        left = k
        for j, s in enumerate(self.sets):
            if U == 0:
                break
            if self.feasible(U & ~s, left - 1):
                chosen.append(j)
                U &= ~s
                left -= 1
        assert U == 0 and left == 0
        return k, tuple(chosen)


def min_dominating(H: Hypergraph, node_limit: int = DEFAULT_NODE_LIMIT) -> SolveResult:
    H.require_no_isolated()
    sets = list(H.closed_neighborhoods[1:])
    value, idx = _Coverer(sets, _all_vertices(H), node_limit).solve()
    return SolveResult(value, tuple(j + 1 for j in idx), "dominating")


def min_transversal(H: Hypergraph, node_limit: int = DEFAULT_NODE_LIMIT) -> SolveResult:
    if not H.edges:
        raise NoEdges("transversal number needs at least one edge")
    stars = [0] * H.n
    for i, e in enumerate(H.edges):
        for v in e:
            stars[v - 1] |= 1 << i
    value, idx = _Coverer(stars, (1 << H.m) - 1, node_limit).solve()
    return SolveResult(value, tuple(j + 1 for j in idx), "transversal")


# ----------------------------------------------------------- certificates


def is_matching(H: Hypergraph, indices) -> bool:
    seen = 0
    for i in indices:
        em = H.edge_masks[i]
        if em & seen:
            return False
        seen |= em
    return True


def dominates(H: Hypergraph, D) -> bool:
    # walks the edge list directly, independent of the solver's neighbourhoods
    D = set(D)
    for v in H.vertices:
        if v not in D and not any(v in e and D.intersection(e) for e in H.edges):
            return False
    return True


def is_transversal(H: Hypergraph, T) -> bool:
    tm = mask_of(T)
    return all(em & tm for em in H.edge_masks)


def check_bound_chain(H: Hypergraph, node_limit: int = DEFAULT_NODE_LIMIT) -> BoundReport:
    H.require_no_isolated()
    r = H.rank()
    nu = max_matching(H, node_limit).value
    gamma = min_dominating(H, node_limit).value
    tau = min_transversal(H, node_limit).value
    checks = [
        ("nu<=tau", nu <= tau),
        ("gamma<=tau", gamma <= tau),
        ("tau<=r*nu", tau <= r * nu),
        ("gamma<=(r-1)*nu", gamma <= (r - 1) * nu),
    ]
    if H.is_uniform(2):
        checks.append(("gamma<=nu", gamma <= nu))
    return BoundReport(nu, gamma, tau, r, tuple(name for name, ok in checks if not ok))


__all__ = [
    "BoundReport",
    "DEFAULT_NODE_LIMIT",
    "SolveResult",
    "check_bound_chain",
    "dominates",
    "is_matching",
    "is_transversal",
    "matching_number",
    "max_matching",
    "max_matching_avoiding",
    "min_dominating",
    "min_transversal",
]
