"""Structural decision of gamma(H) = 2 nu(H) for rank-3 hypergraphs.

A rank-3 hypergraph is extremal exactly when it splits into blocks: Ĥ₃
blocks joined by z1/z2 glue, plus F blocks that stand alone as connected
components. Glue touching an F block raises nu or lowers gamma, so such
inputs are rejected. The steps below recover one decomposition or name
the first clause that fails.

1. rank gate: rank must be 3;
2. every degree-1 vertex sits in a 3-edge whose other two vertices have
   degree >= 2;
3. the spine quotient (one pair per degree-1 vertex) splits into complete
   graphs of odd order, which are the X sets of the Ĥ₃ blocks;
4. connected components shaped exactly like F become F blocks;
5. every other vertex is a middle and needs an edge {x, x', v} with x, x'
   in the X of one block; the least such block is its home;
6. every edge must be a spine, extra1, extra2, z1, z2 or F edge;
7. every pair of every block keeps a degree-1 designated middle.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Literal

from .core import Edge, Hypergraph
from .errors import Disagreement
from .exact import max_matching, min_dominating
from .families import FBlock, G3Spec, GlueEdge, Hhat3Spec, MatrixProfile

Pair = tuple[int, int]
Mode = Literal["structural", "oracle", "both"]

EDGE_TAGS = ("spine", "extra1", "extra2", "z1", "z2", "f_internal")


@dataclass(frozen=True)
class HhatWitness:
    X: tuple[int, ...]
    spine: dict[int, Edge]  # middle -> its spine edge
    pair: dict[int, Pair]  # middle -> the X pair of its spine
    designated: dict[Pair, int]

    @property
    def middles(self) -> tuple[int, ...]:
        return tuple(sorted(self.spine))

    @property
    def S(self) -> tuple[int, ...]:
        chosen = set(self.designated.values())
        return tuple(v for v in self.middles if v not in chosen)


@dataclass(frozen=True)
class FWitness:
    X: tuple[int, int, int]
    middles: tuple[int, int, int]  # middles of pairs (1,2), (2,3), (1,3) of X


@dataclass(frozen=True)
class BlockDecomposition:
    hhat_blocks: tuple[HhatWitness, ...]
    f_blocks: tuple[FWitness, ...]
    edge_classes: tuple[str, ...]


@dataclass(frozen=True)
class Rejection:
    code: str
    step: int
    detail: str
    vertices: tuple[int, ...] = ()
    edges: tuple[Edge, ...] = ()


@dataclass(frozen=True)
class RecognitionReport:
    accepted: bool
    witness: BlockDecomposition | None = None
    reason: Rejection | None = None
    extras: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        out: dict = {"accepted": self.accepted, "blocks": [], "reason": None}
        if self.witness is not None:
            for b in self.witness.hhat_blocks:
                out["blocks"].append({
                    "kind": "hhat3",
                    "X": list(b.X),
                    "designated": {f"{i},{j}": v for (i, j), v in sorted(b.designated.items())},
                    "S": list(b.S),
                    "middles": {str(v): list(b.pair[v]) for v in b.middles},
                })
            for f in self.witness.f_blocks:
                out["blocks"].append({"kind": "F", "X": list(f.X), "middles": list(f.middles)})
            out["edge_classes"] = list(self.witness.edge_classes)
        if self.reason is not None:
            r = self.reason
            out["reason"] = {
                "code": r.code,
                "step": r.step,
                "detail": r.detail,
                "vertices": list(r.vertices),
                "edges": [list(e) for e in r.edges],
            }
        out.update(self.extras)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


@dataclass(frozen=True)
class SpineQuotient:
    """Pairs {a, b} backed by degree-1 vertices v with edge {a, v, b}."""

    backers: dict[Pair, tuple[int, ...]]

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted({v for p in self.backers for v in p}))

    def components(self) -> list[tuple[int, ...]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.backers:
            adj[a].add(b)
            adj[b].add(a)
        seen: set[int] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in adj[u] - seen:
                    seen.add(w)
                    stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps


def spine_quotient(H: Hypergraph) -> SpineQuotient:
    """Quotient over degree-1 vertices whose edge is a 3-edge; others are skipped."""
    deg = H.degrees
    backers: dict[Pair, list[int]] = {}
    for e in H.edges:
        if len(e) != 3:
            continue
        for v in e:
            if deg[v] == 1:
                a, b = (u for u in e if u != v)
                backers.setdefault((a, b), []).append(v)
    return SpineQuotient({p: tuple(vs) for p, vs in sorted(backers.items())})


def is_f_shaped(H: Hypergraph, comp) -> FWitness | None:
    """The component is F iff it has 6 vertices, 4 3-edges pairwise meeting once."""
    if len(comp) != 6:
        return None
    cset = set(comp)
    es = [e for e in H.edges if e[0] in cset]
    if len(es) != 4 or any(len(e) != 3 for e in es):
        return None
    for e, f in combinations(es, 2):
        if len(set(e) & set(f)) != 1:
            return None
    # any edge can play the middle triangle; take the last one
    tri = set(es[-1])
    X = tuple(sorted(cset - tri))

    def middle(i, j):
        (w,) = [v for v in tri for e in es[:-1] if set(e) == {X[i], X[j], v}]
        return w

    return FWitness(X, (middle(0, 1), middle(1, 2), middle(0, 2)))


def _reject(code, step, detail, vertices=(), edges=()):
    return RecognitionReport(False, reason=Rejection(code, step, detail, tuple(vertices), tuple(edges)))


def recognize(H: Hypergraph) -> RecognitionReport:
    H.require_no_isolated()
    deg = H.degrees

    # 1. rank gate
    r = H.rank()
    if r == 2:
        return _reject("RankTwo", 1, "all edges have size 2, so gamma <= nu < 2 nu")
    if r > 3:
        big = [e for e in H.edges if len(e) > 3]
        return _reject("RankAboveThree", 1, f"rank is {r}", edges=big[:1])

    # 2. degree-1 scan
    for v in H.vertices:
        if deg[v] == 1:
            (e,) = H.star(v)
            if len(e) != 3 or any(deg[u] < 2 for u in e if u != v):
                return _reject(
                    "BadDegreeOneVertex", 2,
                    f"degree-1 vertex {v} is not the middle of a 3-edge between degree>=2 vertices",
                    vertices=[v], edges=[e],
                )

    # 3. spine quotient
    Q = spine_quotient(H)
    blocks_x = []
    for comp in Q.components():
        for a, b in combinations(comp, 2):
            if (a, b) not in Q.backers:
                return _reject(
                    "QuotientNotComplete", 3,
                    f"{a} and {b} share a quotient component but no degree-1 middle",
                    vertices=[a, b],
                )
        if len(comp) % 2 == 0:
            return _reject("QuotientEvenOrder", 3, f"quotient component of even order {len(comp)}",
                           vertices=comp)
        blocks_x.append(comp)
    x_block = {v: b for b, comp in enumerate(blocks_x) for v in comp}

    # 4. F blocks are whole components
    f_blocks = []
    f_vertex = set()
    for comp in H.components():
        if x_block.keys() & set(comp):
            continue
        fw = is_f_shaped(H, comp)
        if fw is not None:
            f_blocks.append(fw)
            f_vertex.update(comp)

    # 5. middle assignment
    spine: dict[int, Edge] = {}
    home: dict[int, int] = {}
    for v in H.vertices:
        if v in x_block or v in f_vertex:
            continue
        best = None
        for e in H.star(v):
            if len(e) != 3:
                continue
            a, b = (u for u in e if u != v)
            if a in x_block and b in x_block and x_block[a] == x_block[b]:
                key = (x_block[a], e)
                if best is None or key < best:
                    best = key
        if best is None:
            return _reject(
                "UnexplainedVertex", 5,
                f"vertex {v} is neither in an X set, nor in an F component, "
                "nor the middle of an edge between two X vertices of one block",
                vertices=[v],
            )
        home[v], spine[v] = best

    def pair_of(v):
        return tuple(u for u in spine[v] if u != v)

    designated: list[dict[Pair, int]] = [{} for _ in blocks_x]
    for v in sorted(spine):
        if deg[v] == 1:
            designated[home[v]].setdefault(pair_of(v), v)

    # 6. edge classification
    classes = []
    for e in H.edges:
        tag = _classify(e, x_block, home, spine, deg, f_vertex)
        if tag is None:
            return _reject("BadEdge", 6, f"edge {list(e)} fits no edge class", edges=[e])
        classes.append(tag)

    # 7. designation audit
    for b, comp in enumerate(blocks_x):
        for p in combinations(comp, 2):
            if p not in designated[b]:
                return _reject("DesignationMissing", 7, f"pair {p} has no degree-1 middle",
                               vertices=p)

    hh = []
    for b, comp in enumerate(blocks_x):
        mids = [v for v in sorted(spine) if home[v] == b]
        hh.append(HhatWitness(
            comp,
            {v: spine[v] for v in mids},
            {v: pair_of(v) for v in mids},
            dict(sorted(designated[b].items())),
        ))
    return RecognitionReport(True, BlockDecomposition(tuple(hh), tuple(f_blocks), tuple(classes)))


def _classify(e, x_block, home, spine, deg, f_vertex):
    if e[0] in f_vertex:
        return "f_internal" if all(v in f_vertex for v in e) else None
    per_block: dict[int, list[int]] = {}
    for v in e:
        if v in x_block:
            per_block.setdefault(x_block[v], []).append(v)
    owner = [b for b, xs in per_block.items() if len(xs) >= 2]
    if not owner:
        return None
    m = owner[0]
    if len(per_block[m]) == len(e):
        return "extra1"
    if len(e) != 3:
        return None
    (w,) = [v for v in e if v not in per_block[m]]
    if w in x_block:
        return "z1"
    if w not in home:
        return None
    if home[w] == m and spine[w] == e:
        return "spine"
    if deg[w] < 2:
        # a designated middle has no edge besides its spine
        return None
    return "extra2" if home[w] == m else "z2"


# ------------------------------------------------------------------ witness


def witness_to_spec(H: Hypergraph, wit: BlockDecomposition) -> tuple[G3Spec, dict[int, int]]:
    """Turn a decomposition of H into a G3Spec and a vertex map.

    ``mapping`` sends each vertex of ``make_g3(spec)`` to the vertex of H it
    stands for, so ``make_g3(spec)[0].relabel(mapping) == H``.
    """
    blocks = []
    local_of: dict[int, tuple[int, int]] = {}  # input vertex -> (block, local)
    layouts = []
    for b, hw in enumerate(wit.hhat_blocks, 1):
        xl = {x: i for i, x in enumerate(hw.X, 1)}
        for x, i in xl.items():
            local_of[x] = (b, i)
        nxt = len(hw.X) + 1
        entries = []
        for p in combinations(hw.X, 2):
            mids = [hw.designated[p]] + sorted(
                v for v in hw.middles if hw.pair[v] == p and v != hw.designated[p]
            )
            for v in mids:
                local_of[v] = (b, nxt)
                nxt += 1
            entries.append(len(mids))
        layouts.append(MatrixProfile((len(hw.X) - 1) // 2, tuple(entries)))
    offset_b = len(wit.hhat_blocks)
    for k, fw in enumerate(wit.f_blocks, offset_b + 1):
        for i, v in enumerate((*fw.X, *fw.middles), 1):
            local_of[v] = (k, i)

    # split edges by class
    extra1: list[list] = [[] for _ in wit.hhat_blocks]
    extra2: list[list] = [[] for _ in wit.hhat_blocks]
    z1, z2 = [], []
    for e, tag in zip(H.edges, wit.edge_classes):
        locs = [local_of[v] for v in e]
        if tag in ("spine", "f_internal"):
            continue
        if tag == "extra1":
            extra1[locs[0][0] - 1].append(tuple(sorted(i for _, i in locs)))
            continue
        counts: dict[int, int] = {}
        for blk, _ in locs:
            counts[blk] = counts.get(blk, 0) + 1
        (m,) = [blk for blk, c in counts.items() if c >= 2]
        if tag == "extra2":
            extra2[m - 1].append(tuple(sorted(i for _, i in locs)))
            continue
        a, b = sorted(i for blk, i in locs if blk == m)
        (third,) = [loc for loc in locs if not (loc[0] == m and loc[1] in (a, b))]
        glue = GlueEdge(m, a, b, third[0], third[1])
        (z1 if tag == "z1" else z2).append(glue)
    for b, prof in enumerate(layouts):
        blocks.append(Hhat3Spec(prof, tuple(sorted(extra1[b])), tuple(sorted(extra2[b]))))
    blocks.extend(FBlock() for _ in wit.f_blocks)
    spec = G3Spec(tuple(blocks), tuple(z1), tuple(z2))

    offsets = {}
    total = 0
    for b, blk in enumerate(blocks, 1):
        offsets[b] = total
        total += 6 if isinstance(blk, FBlock) else blk.profile.size
    mapping = {offsets[b] + i: v for v, (b, i) in local_of.items()}
    return spec, mapping


# --------------------------------------------------------------- decisions


def oracle_extremal(H: Hypergraph) -> bool:
    H.require_no_isolated()
    if H.rank() != 3:
        return False
    nu = max_matching(H).value
    return min_dominating(H).value == 2 * nu


def decide_extremal(H: Hypergraph, mode: Mode = "both") -> bool:
    if mode == "structural":
        return recognize(H).accepted
    if mode == "oracle":
        return oracle_extremal(H)
    if mode != "both":
        raise ValueError(f"unknown mode {mode!r}")
    structural = recognize(H).accepted
    oracle = oracle_extremal(H)
    if structural != oracle:
        raise Disagreement(H, structural, oracle)
    return structural
