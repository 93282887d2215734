"""Immutable hypergraph model on dense 1-based vertex ids.

Edges are ascending vertex tuples kept in lexicographic order, and every
edge also has a bitmask form (bit ``v - 1`` for vertex ``v``) used by the
solvers.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import (
    BadParameters,
    EdgeTooSmall,
    EmptyEdge,
    IsolatedVertex,
    NoEdges,
    OutOfRangeVertex,
    SameVertex,
)

Edge = tuple[int, ...]


def bit(v: int) -> int:
    return 1 << (v - 1)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def members(mask: int) -> list[int]:
    """Vertices (1-based) whose bits are set in ``mask``, ascending."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


@dataclass(frozen=True)
class Hypergraph:
    n: int
    edges: tuple[Edge, ...]

    def __repr__(self):
        return f"Hypergraph(n={self.n}, edges={list(self.edges)})"

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(e) for e in self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degree of every vertex; index 0 is unused so ``degrees[v]`` works."""
        deg = [0] * (self.n + 1)
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        self._check(v)
        return self.degrees[v]

    def _check(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise OutOfRangeVertex(f"vertex {v} not in [1, {self.n}]")

    def rank(self) -> int:
        if not self.edges:
            raise NoEdges("rank of an edgeless hypergraph is undefined")
        return max(len(e) for e in self.edges)

    def is_uniform(self, r: int) -> bool:
        return bool(self.edges) and all(len(e) == r for e in self.edges)

    def star(self, v: int) -> list[Edge]:
        self._check(v)
        return [e for e in self.edges if v in e]

    def adjacent(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        if u == v:
            raise SameVertex(f"adjacency of {u} with itself")
        both = bit(u) | bit(v)
        return any(em & both == both for em in self.edge_masks)

    @cached_property
    def closed_neighborhoods(self) -> tuple[int, ...]:
        """``closed_neighborhoods[v]`` is the mask of v and all its neighbours."""
        nb = [0] * (self.n + 1)
        for v in self.vertices:
            nb[v] = bit(v)
        for e, em in zip(self.edges, self.edge_masks):
            for v in e:
                nb[v] |= em
        return tuple(nb)

    def isolated(self) -> list[int]:
        return [v for v in self.vertices if self.degrees[v] == 0]

    def require_no_isolated(self) -> None:
        iso = self.isolated()
        if iso:
            raise IsolatedVertex(f"isolated vertices {iso}")

    def components(self) -> list[tuple[int, ...]]:
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            root = find(e[0])
            for v in e[1:]:
                rv = find(v)
                if rv != root:
                    parent[rv] = root
        classes: dict[int, list[int]] = {}
        for v in self.vertices:
            classes.setdefault(find(v), []).append(v)
        return sorted((tuple(c) for c in classes.values()), key=lambda c: c[0])

    def induced(self, W: Iterable[int]) -> tuple[Hypergraph, tuple[int, ...]]:
        """Edges of H inside W, relabelled order-preservingly onto 1..|W|.

        Returns the induced hypergraph and ``labels`` with ``labels[i - 1]``
        the original id of new vertex ``i``.
        """
        labels = tuple(sorted(set(W)))
        for v in labels:
            self._check(v)
        new_id = {v: i for i, v in enumerate(labels, 1)}
        wmask = mask_of(labels)
        kept = [
            [new_id[v] for v in e]
            for e, em in zip(self.edges, self.edge_masks)
            if em & wmask == em
        ]
        return Hypergraph(len(labels), _canonical(kept)), labels

    def is_simple(self) -> bool:
        ems = self.edge_masks
        for i, a in enumerate(ems):
            for b in ems[i + 1:]:
                if a & b == a or a & b == b:
                    return False
        return True

    def relabel(self, mapping: dict[int, int], n: int | None = None) -> Hypergraph:
        """Apply ``mapping`` to every vertex and re-canonicalize."""
        return build(self.n if n is None else n, [[mapping[v] for v in e] for e in self.edges])

    def with_edges(self, extra: Iterable[Sequence[int]]) -> Hypergraph:
        return build(self.n, [*self.edges, *extra])

    def without_edges(self, indices: Iterable[int]) -> Hypergraph:
        drop = set(indices)
        return Hypergraph(self.n, tuple(e for i, e in enumerate(self.edges) if i not in drop))

    def index_of(self, edge: Iterable[int]) -> int:
        return self.edges.index(tuple(sorted(edge)))


def _canonical(raw: Iterable[Iterable[int]]) -> tuple[Edge, ...]:
    return tuple(sorted({tuple(sorted(set(e))) for e in raw}))


def build(n: int, raw_edges: Iterable[Iterable[int]]) -> Hypergraph:
    """Validate and canonicalize; repeated vertices and duplicate edges collapse."""
    if n < 1:
        raise BadParameters(f"need n >= 1, got {n}")
    cleaned = []
    for raw in raw_edges:
        e = tuple(sorted(set(raw)))
        if not e:
            raise EmptyEdge("empty edge")
        for v in e:
            if not 1 <= v <= n:
                raise OutOfRangeVertex(f"vertex {v} not in [1, {n}]")
        if len(e) < 2:
            raise EdgeTooSmall(f"edge {list(e)} has fewer than 2 vertices")
        cleaned.append(e)
    return Hypergraph(n, _canonical(cleaned))


def complete_uniform(n: int, r: int) -> Hypergraph:
    if r < 2 or r > n:
        raise BadParameters(f"need 2 <= r <= n, got n={n}, r={r}")
    edges = tuple(combinations(range(1, n + 1), r))
    assert len(edges) == comb(n, r)
    return Hypergraph(n, edges)
