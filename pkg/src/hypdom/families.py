"""Generators for the rank-3 extremal families and random fuzz inputs.

Block layout conventions (all ids 1-based, local to a block):

* Ĥ₃ block with profile of dimension 2l+1: ids ``1..2l+1`` are the spine
  endpoints X; then, pair by pair in lexicographic order (1,2), (1,3), ...,
  the ``a_ij`` middles of that pair. The first middle of each pair is the
  designated one; every other middle belongs to S.
* F block: ``1..3`` are X, then ``4, 5, 6`` are the middles of pairs
  (1,2), (2,3), (1,3) in that order.

A G₃ member is a list of blocks numbered from 1, laid out back to back,
plus glue edges. ``GlueEdge(m, a, b, n, c)`` joins locals ``a, b`` (X
vertices of block m) to local ``c`` of block n: an X vertex for z1, an S
vertex for z2.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Union

from .core import Hypergraph, build
from .errors import BadProfile, BadSpec, InfeasibleBounds, RetriesExhausted

Pair = tuple[int, int]


@dataclass(frozen=True)
class MatrixProfile:
    """Strict upper triangle of an odd square matrix of positive integers."""

    l: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.l < 1:
            raise BadProfile(f"l must be >= 1, got {self.l}")
        need = comb(self.dim, 2)
        if len(self.entries) != need:
            raise BadProfile(f"l={self.l} needs {need} entries, got {len(self.entries)}")
        if any(a < 1 for a in self.entries):
            raise BadProfile(f"entries must be positive: {self.entries}")

    @classmethod
    def from_csv(cls, l: int, text: str) -> MatrixProfile:
        try:
            entries = tuple(int(t) for t in text.split(","))
        except ValueError as err:
            raise BadProfile(f"bad entry list {text!r}") from err
        return cls(l, entries)

    @classmethod
    def ones(cls, l: int) -> MatrixProfile:
        return cls(l, (1,) * comb(2 * l + 1, 2))

    @property
    def dim(self) -> int:
        return 2 * self.l + 1

    def pairs(self) -> list[Pair]:
        return list(combinations(range(1, self.dim + 1), 2))

    def entry(self, i: int, j: int) -> int:
        return dict(zip(self.pairs(), self.entries))[(i, j)]

    @property
    def size(self) -> int:
        return self.dim + sum(self.entries)


EXAMPLE_PROFILE = MatrixProfile(1, (2, 1, 2))


@dataclass(frozen=True)
class VertexLayout:
    X: tuple[int, ...]
    middles: dict[Pair, tuple[int, ...]]

    @classmethod
    def of(cls, profile: MatrixProfile) -> VertexLayout:
        X = tuple(range(1, profile.dim + 1))
        nxt = profile.dim + 1
        middles = {}
        for pair, a in zip(profile.pairs(), profile.entries):
            middles[pair] = tuple(range(nxt, nxt + a))
            nxt += a
        return cls(X, middles)

    @property
    def n(self) -> int:
        return len(self.X) + sum(len(ms) for ms in self.middles.values())

    @property
    def designated(self) -> dict[Pair, int]:
        return {pair: ms[0] for pair, ms in self.middles.items()}

    @property
    def S(self) -> tuple[int, ...]:
        return tuple(v for ms in self.middles.values() for v in ms[1:])

    def spines(self) -> list[tuple[int, int, int]]:
        return [(i, v, j) for (i, j), ms in self.middles.items() for v in ms]


@dataclass(frozen=True)
class Hhat3Spec:
    profile: MatrixProfile
    extra1: tuple[tuple[int, ...], ...] = ()
    extra2: tuple[tuple[int, ...], ...] = ()

    @property
    def layout(self) -> VertexLayout:
        return VertexLayout.of(self.profile)

    @property
    def l(self) -> int:
        return self.profile.l

    def validate(self) -> None:
        lay = self.layout
        X = set(lay.X)
        S = set(lay.S)
        for e in self.extra1:
            if len(set(e)) not in (2, 3) or len(set(e)) != len(e) or not set(e) <= X:
                raise BadSpec(f"extra1 edge {e} must be 2 or 3 distinct X vertices")
        for e in self.extra2:
            xs = [v for v in e if v in X]
            ss = [v for v in e if v in S]
            if len(e) != 3 or len(set(xs)) != 2 or len(ss) != 1:
                raise BadSpec(f"extra2 edge {e} must be two X vertices and one S vertex")


class FBlock:
    """The fixed six-vertex block."""

    l = 1
    size = 6

    def __eq__(self, other):
        return isinstance(other, FBlock)

    def __hash__(self):
        return hash("FBlock")

    def __repr__(self):
        return "FBlock()"


F_EDGES = ((1, 2, 4), (2, 3, 5), (1, 3, 6), (4, 5, 6))
F_X = (1, 2, 3)

Block = Union[FBlock, Hhat3Spec]


@dataclass(frozen=True)
class GlueEdge:
    m: int
    a: int
    b: int
    n: int
    c: int


@dataclass(frozen=True)
class G3Spec:
    blocks: tuple[Block, ...]
    z1: tuple[GlueEdge, ...] = ()
    z2: tuple[GlueEdge, ...] = ()

    def touches_f(self) -> bool:
        """True when some glue edge has an endpoint in an F block."""
        return any(
            isinstance(self.blocks[g.m - 1], FBlock) or isinstance(self.blocks[g.n - 1], FBlock)
            for g in (*self.z1, *self.z2)
        )

    def validate(self) -> None:
        if not self.blocks:
            raise BadSpec("a G3 spec needs at least one block")
        for blk in self.blocks:
            if isinstance(blk, Hhat3Spec):
                blk.validate()
            elif not isinstance(blk, FBlock):
                raise BadSpec(f"unknown block {blk!r}")
        k = len(self.blocks)
        for kind, glue in (("z1", self.z1), ("z2", self.z2)):
            for g in glue:
                if not (1 <= g.m <= k and 1 <= g.n <= k) or g.m == g.n:
                    raise BadSpec(f"{kind} {g}: blocks must be distinct and in 1..{k}")
                Xm = set(block_x(self.blocks[g.m - 1]))
                if g.a == g.b or g.a not in Xm or g.b not in Xm:
                    raise BadSpec(f"{kind} {g}: a, b must be distinct X vertices of block {g.m}")
                third = block_x(self.blocks[g.n - 1]) if kind == "z1" else block_s(self.blocks[g.n - 1])
                if g.c not in third:
                    what = "an X" if kind == "z1" else "an S"
                    raise BadSpec(f"{kind} {g}: c must be {what} vertex of block {g.n}")

    @property
    def total_l(self) -> int:
        return sum(b.l for b in self.blocks)


def block_x(blk: Block) -> tuple[int, ...]:
    return F_X if isinstance(blk, FBlock) else blk.layout.X


def block_s(blk: Block) -> tuple[int, ...]:
    return () if isinstance(blk, FBlock) else blk.layout.S


def block_size(blk: Block) -> int:
    return 6 if isinstance(blk, FBlock) else blk.profile.size


def block_edges(blk: Block) -> list[tuple[int, ...]]:
    if isinstance(blk, FBlock):
        return list(F_EDGES)
    return [*blk.layout.spines(), *blk.extra1, *blk.extra2]


@dataclass(frozen=True)
class BlockMap:
    """Offsets of each block inside a laid-out G₃ member."""

    offsets: tuple[int, ...]
    sizes: tuple[int, ...]

    def to_global(self, block: int, local: int) -> int:
        return self.offsets[block - 1] + local

    def locate(self, v: int) -> tuple[int, int]:
        for b, (off, size) in enumerate(zip(self.offsets, self.sizes), 1):
            if off < v <= off + size:
                return b, v - off
        raise KeyError(v)

    def vertices(self, block: int) -> range:
        off = self.offsets[block - 1]
        return range(off + 1, off + self.sizes[block - 1] + 1)


def make_F() -> Hypergraph:
    return build(6, F_EDGES)


def make_h3a(profile: MatrixProfile) -> Hypergraph:
    if not isinstance(profile, MatrixProfile):
        raise BadProfile(f"expected a MatrixProfile, got {profile!r}")
    lay = VertexLayout.of(profile)
    return build(lay.n, lay.spines())


def make_hhat3(spec: Hhat3Spec) -> Hypergraph:
    spec.validate()
    return build(spec.profile.size, block_edges(spec))


def make_g3(spec: G3Spec) -> tuple[Hypergraph, BlockMap]:
    """Lay blocks out in list order and add the glue edges.

    Glue touching an F block is accepted here, since it has the right shape,
    but such members are not extremal; see ``expected_invariants``.
    """
    spec.validate()
    offsets, sizes = [], []
    total = 0
    for blk in spec.blocks:
        offsets.append(total)
        sizes.append(block_size(blk))
        total += sizes[-1]
    bmap = BlockMap(tuple(offsets), tuple(sizes))
    edges = []
    for b, blk in enumerate(spec.blocks, 1):
        edges.extend([bmap.to_global(b, v) for v in e] for e in block_edges(blk))
    for g in (*spec.z1, *spec.z2):
        edges.append([bmap.to_global(g.m, g.a), bmap.to_global(g.m, g.b), bmap.to_global(g.n, g.c)])
    return build(total, edges), bmap


def expected_invariants(spec: G3Spec) -> tuple[int, int]:
    """Predicted (nu, gamma) = (sum of l, 2 * sum of l)."""
    spec.validate()
    if spec.touches_f():
        raise BadSpec("glue touching an F block breaks gamma = 2 nu; no prediction")
    total = spec.total_l
    return total, 2 * total


# ------------------------------------------------------------------ sampling


@dataclass(frozen=True)
class SampleBounds:
    max_blocks: int = 3
    max_l: int = 2
    max_entry: int = 2
    max_vertices: int = 24
    allow_f: bool = True
    max_extra1: int = 3
    max_extra2: int = 3
    max_glue: int = 3
    min_blocks: int = 1


def _sample_block(rng: random.Random, bounds: SampleBounds, room: int) -> Block | None:
    choices = []
    if bounds.allow_f and room >= 6:
        choices.append(None)
    for l in range(1, bounds.max_l + 1):
        d = 2 * l + 1
        if d + comb(d, 2) <= room:
            choices.append(l)
    if not choices:
        return None
    pick = rng.choice(choices)
    if pick is None:
        return FBlock()
    d = 2 * pick + 1
    npairs = comb(d, 2)
    # cap entries so the block fits the remaining room
    spare = room - d - npairs
    entries = []
    for _ in range(npairs):
        extra = rng.randint(0, min(bounds.max_entry - 1, spare))
        spare -= extra
        entries.append(1 + extra)
    rng.shuffle(entries)
    profile = MatrixProfile(pick, tuple(entries))
    lay = VertexLayout.of(profile)
    cand1 = [*combinations(lay.X, 3), *combinations(lay.X, 2)]
    cand2 = [(i, j, v) for i, j in combinations(lay.X, 2) for v in lay.S]
    extra1 = rng.sample(cand1, rng.randint(0, min(bounds.max_extra1, len(cand1))))
    extra2 = rng.sample(cand2, rng.randint(0, min(bounds.max_extra2, len(cand2))))
    return Hhat3Spec(profile, tuple(sorted(extra1)), tuple(sorted(extra2)))


def sample_member(bounds: SampleBounds, seed: int) -> tuple[G3Spec, Hypergraph]:
    """Reproducible pseudo-random G₃ member whose glue never touches F blocks."""
    smallest = 6  # F and the all-ones l=1 block both have 6 vertices
    if bounds.max_blocks < 1 or bounds.max_l < 1 or bounds.max_entry < 1:
        raise InfeasibleBounds(f"bounds admit no block: {bounds}")
    if bounds.max_vertices < smallest * max(1, bounds.min_blocks):
        raise InfeasibleBounds(f"max_vertices={bounds.max_vertices} too small")
    if bounds.min_blocks > bounds.max_blocks:
        raise InfeasibleBounds("min_blocks exceeds max_blocks")
    rng = random.Random(seed)
    k = rng.randint(bounds.min_blocks, bounds.max_blocks)
    blocks: list[Block] = []
    room = bounds.max_vertices
    for b in range(k):
        # keep room for the blocks still owed to min_blocks
        owed = max(0, bounds.min_blocks - b - 1) * smallest
        blk = _sample_block(rng, bounds, room - owed)
        if blk is None:
            break
        blocks.append(blk)
        room -= block_size(blk)
    hh = [i for i, blk in enumerate(blocks, 1) if isinstance(blk, Hhat3Spec)]
    z1: list[GlueEdge] = []
    z2: list[GlueEdge] = []
    if len(hh) >= 2:
        cand1 = []
        cand2 = []
        for m in hh:
            for a, b in combinations(blocks[m - 1].layout.X, 2):
                for n in hh:
                    if n == m:
                        continue
                    cand1.extend(GlueEdge(m, a, b, n, c) for c in blocks[n - 1].layout.X)
                    cand2.extend(GlueEdge(m, a, b, n, c) for c in blocks[n - 1].layout.S)
        z1 = rng.sample(cand1, rng.randint(0, min(bounds.max_glue, len(cand1))))
        if cand2:
            z2 = rng.sample(cand2, rng.randint(0, min(bounds.max_glue, len(cand2))))
    spec = G3Spec(tuple(blocks), tuple(z1), tuple(z2))
    H, _ = make_g3(spec)
    return spec, H


def sample_random_hypergraph(
    n: int, max_rank: int, m: int, seed: int, retries: int = 10_000
) -> Hypergraph:
    """m distinct edges of sizes 2..max_rank with no isolated vertex.

    The first edge drawn always has size ``max_rank``, so the rank is exact.
    Whole draws are repeated until every vertex is covered.
    """
    if n < 2 or max_rank < 2 or max_rank > n or m < 1:
        raise InfeasibleBounds(f"n={n}, max_rank={max_rank}, m={m}")
    available = sum(comb(n, k) for k in range(2, max_rank + 1))
    if m > available:
        raise InfeasibleBounds(f"only {available} distinct edges exist, asked for {m}")
    if m * max_rank < n:
        raise InfeasibleBounds(f"{m} edges of size <= {max_rank} cannot cover {n} vertices")
    rng = random.Random(seed)
    verts = range(1, n + 1)
    for _ in range(retries):
        edges = {tuple(sorted(rng.sample(verts, max_rank)))}
        while len(edges) < m:
            edges.add(tuple(sorted(rng.sample(verts, rng.randint(2, max_rank)))))
        covered = set().union(*edges)
        if len(covered) == n:
            return build(n, edges)
    raise RetriesExhausted(f"no isolated-vertex-free draw in {retries} tries")
