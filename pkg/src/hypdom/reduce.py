"""Edge peeling and the structures built on a peeled hypergraph.

Peeling repeatedly deletes an edge that contains no vertex of degree 1 in
the current hypergraph. At the fixed point every edge has a private vertex,
so any maximum matching yields a dominating set of size at most
``(rank - 1) * nu``: keep each matched edge minus its degree-1 vertices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import Hypergraph, members
from .errors import NotMaximumMatching, PeelPrecondition, PreconditionViolated, ValidButEmpty
from .exact import is_matching, matching_number, max_matching, min_dominating


@dataclass(frozen=True)
class PeelTrace:
    result: Hypergraph
    deleted: tuple[int, ...]  # indices into the input's edge list, in deletion order
    rounds: int  # scans performed, the last one finding nothing to delete


@dataclass(frozen=True)
class ComponentReport:
    vertices: tuple[int, ...]
    nu: int
    gamma: int
    contraction_is_complete_odd: bool


@dataclass(frozen=True)
class StructReport:
    is_three_uniform: bool
    every_edge_exactly_one_deg1: bool
    per_component: tuple[ComponentReport, ...]

    @property
    def all_ok(self) -> bool:
        return (
            self.is_three_uniform
            and self.every_edge_exactly_one_deg1
            and all(c.contraction_is_complete_odd for c in self.per_component)
        )


def _deg1_mask(H: Hypergraph) -> int:
    deg = H.degrees
    m = 0
    for v in H.vertices:
        if deg[v] == 1:
            m |= 1 << (v - 1)
    return m


def peel(H: Hypergraph, rng: random.Random | None = None) -> PeelTrace:
    """Delete edges lacking a degree-1 vertex until none is left.

    By default the canonically least eligible edge goes first. Passing
    ``rng`` picks uniformly among eligible edges instead; that mode exists
    to probe order independence in tests.
    """
    H.rank()  # raises NoEdges
    H.require_no_isolated()
    alive = list(range(H.m))
    deg = list(H.degrees)
    deleted = []
    rounds = 0
    while True:
        rounds += 1
        eligible = [i for i in alive if all(deg[v] >= 2 for v in H.edges[i])]
        if not eligible:
            break
        i = rng.choice(eligible) if rng is not None else eligible[0]
        alive.remove(i)
        deleted.append(i)
        for v in H.edges[i]:
            deg[v] -= 1
    result = Hypergraph(H.n, tuple(H.edges[i] for i in alive))
    return PeelTrace(result, tuple(deleted), rounds)


def dominating_from_matching(Hstar: Hypergraph, M, fallback: bool = False) -> tuple[int, ...]:
    """Union of the matched edges with their degree-1 vertices removed.

    ``M`` is a collection of edge indices of ``Hstar``. An edge made only of
    degree-1 vertices (a lone-edge component) contributes nothing, and the
    union then misses that component; this raises ValidButEmpty unless
    ``fallback`` is set, in which case the edge's least vertex is added.
    """
    M = tuple(M)
    deg1 = _deg1_mask(Hstar)
    for e, em in zip(Hstar.edges, Hstar.edge_masks):
        if not em & deg1:
            raise PeelPrecondition(f"edge {list(e)} has no degree-1 vertex")
    if not is_matching(Hstar, M):
        raise NotMaximumMatching(f"edges {list(M)} are not pairwise disjoint")
    nu = matching_number(Hstar)
    if len(M) != nu:
        raise NotMaximumMatching(f"matching has {len(M)} edges, maximum is {nu}")
    D = 0
    empty = []
    for i in M:
        part = Hstar.edge_masks[i] & ~deg1
        if not part:
            empty.append(Hstar.edges[i])
        D |= part
    if empty:
        if not fallback:
            raise ValidButEmpty(
                f"matched edges {empty} consist of degree-1 vertices only",
                tuple(members(D)),
                tuple(empty),
            )
        for e in empty:
            D |= 1 << (e[0] - 1)
    return tuple(members(D))


def peel_witness(H: Hypergraph) -> tuple[PeelTrace, tuple[int, ...], tuple[int, ...]]:
    """Peel H, take a maximum matching of the result, build its dominating set."""
    trace = peel(H)
    M = max_matching(trace.result).certificate
    return trace, M, dominating_from_matching(trace.result, M, fallback=True)


@dataclass(frozen=True)
class Contraction:
    graph: Hypergraph
    labels: tuple[int, ...]  # labels[i - 1] is the original id of graph vertex i


def edge_contract(H: Hypergraph) -> Contraction:
    """Drop each edge's unique degree-1 vertex; merge parallel results.

    The graph lives on the vertices of degree >= 2, relabelled in order.
    """
    if not H.is_uniform(3):
        raise PreconditionViolated("edge contraction needs a 3-uniform hypergraph")
    deg = H.degrees
    pairs = []
    for e in H.edges:
        ones = [v for v in e if deg[v] == 1]
        if len(ones) != 1:
            raise PreconditionViolated(f"edge {list(e)} has {len(ones)} degree-1 vertices")
        pairs.append([v for v in e if deg[v] != 1])
    labels = tuple(v for v in H.vertices if deg[v] >= 2)
    new_id = {v: i for i, v in enumerate(labels, 1)}
    graph = Hypergraph(len(labels), tuple(sorted({(new_id[a], new_id[b]) for a, b in pairs})))
    return Contraction(graph, labels)


def is_complete_graph(G: Hypergraph) -> bool:
    return G.is_uniform(2) and G.m == G.n * (G.n - 1) // 2


def hstar_report(H: Hypergraph) -> StructReport:
    three = H.is_uniform(3)
    deg = H.degrees
    exactly_one = all(sum(deg[v] == 1 for v in e) == 1 for e in H.edges)
    comps = []
    for comp in H.components():
        sub, _ = H.induced(comp)
        if not sub.edges:
            continue
        nu = max_matching(sub).value
        gamma = min_dominating(sub).value
        try:
            G = edge_contract(sub).graph
            ok = is_complete_graph(G) and G.n == 2 * nu + 1
        except PreconditionViolated:
            ok = False
        comps.append(ComponentReport(comp, nu, gamma, ok))
    return StructReport(three, exactly_one, tuple(comps))
