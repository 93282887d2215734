"""Corpus sweeps that cross-check the recognizer against the exact solvers."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from multiprocessing import Pool

from .core import Hypergraph, build
from .errors import Disagreement, InfeasibleBounds, RetriesExhausted
from .exact import check_bound_chain
from .families import SampleBounds, sample_member, sample_random_hypergraph
from .hgr import emit_hgr
from .recognize import decide_extremal

MAX_REPORTED = 5


@dataclass
class VerifySummary:
    checked: int = 0
    agreements: int = 0
    disagreements: int = 0
    bound_violations: int = 0
    extremal: int = 0
    wall_time: float = 0.0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.disagreements == 0 and self.bound_violations == 0

    def merge(self, other: VerifySummary) -> None:
        self.checked += other.checked
        self.agreements += other.agreements
        self.disagreements += other.disagreements
        self.bound_violations += other.bound_violations
        self.extremal += other.extremal
        self.failures.extend(other.failures[: MAX_REPORTED - len(self.failures)])

    def counts(self) -> dict:
        return {
            "checked": self.checked,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "bound_violations": self.bound_violations,
            "extremal": self.extremal,
        }

    def render(self) -> str:
        lines = [f"{k}={v}" for k, v in self.counts().items()]
        lines.append(f"wall_time={self.wall_time:.2f}s")
        for text in self.failures:
            lines.append("c failing instance:")
            lines.append(text.rstrip("\n"))
        return "\n".join(lines) + "\n"


def check_instance(H: Hypergraph, summary: VerifySummary) -> None:
    summary.checked += 1
    try:
        summary.extremal += decide_extremal(H, "both")
        summary.agreements += 1
    except Disagreement as err:
        summary.disagreements += 1
        if len(summary.failures) < MAX_REPORTED:
            summary.failures.append(
                emit_hgr(H, [f"disagreement structural={err.structural} oracle={err.oracle}"])
            )
    report = check_bound_chain(H)
    if not report.chain_ok:
        summary.bound_violations += 1
        if len(summary.failures) < MAX_REPORTED:
            summary.failures.append(emit_hgr(H, ["bound violations " + " ".join(report.violated)]))


# ------------------------------------------------------------------ corpora


def exhaustive_instances(n: int):
    """Every edge set of 2- and 3-subsets of [n] that leaves no vertex isolated."""
    cands = [c for k in (2, 3) for c in combinations(range(1, n + 1), k)]
    full = (1 << n) - 1
    cmasks = [sum(1 << (v - 1) for v in c) for c in cands]
    for subset in range(1, 1 << len(cands)):
        cover = 0
        picked = []
        for i, cm in enumerate(cmasks):
            if subset >> i & 1:
                cover |= cm
                picked.append(cands[i])
        if cover == full:
            yield Hypergraph(n, tuple(sorted(picked)))


def random_instance(seed: int, index: int, n_min: int, n_max: int) -> Hypergraph:
    """Instance ``index`` of the seeded corpus.

    Cycles through three kinds: plain random rank-3 hypergraphs, random
    hypergraphs of rank 2..4, and single-block extremal members with a few
    edges added or removed (only when ``n_max >= 6``).
    """
    rng = random.Random(f"{seed}:{index}")
    kind = index % 3
    for attempt in range(100):
        if kind == 2 and n_max >= 6 and attempt < 20:
            bounds = SampleBounds(max_blocks=1, max_l=1, max_vertices=n_max)
            _, H = sample_member(bounds, rng.getrandbits(32))
            H = _perturb(H, rng)
            if H is not None and n_min <= H.n:
                return H
            continue
        n = rng.randint(n_min, n_max)
        r = 3 if kind == 0 else rng.randint(2, 4)
        r = min(r, n)
        if r < 2:
            raise InfeasibleBounds(f"n={n} admits no edge")
        cap = sum(comb(n, k) for k in range(2, r + 1))
        m = rng.randint(max(1, -(-n // r)), min(cap, 2 * n))
        try:
            return sample_random_hypergraph(n, r, m, rng.getrandbits(32), retries=50)
        except RetriesExhausted:
            continue
    raise RetriesExhausted(f"corpus instance {seed}:{index}")


def _perturb(H: Hypergraph, rng: random.Random) -> Hypergraph | None:
    edges = list(H.edges)
    for _ in range(rng.randint(0, 2)):
        if rng.random() < 0.5 and len(edges) > 1:
            edges.pop(rng.randrange(len(edges)))
        else:
            edges.append(rng.sample(range(1, H.n + 1), rng.choice((2, 3, 3))))
    out = build(H.n, edges)
    return None if out.isolated() else out


# ------------------------------------------------------------------- sweeps


def _exhaustive_chunk(args) -> VerifySummary:
    n, start, step = args
    summary = VerifySummary()
    for i, H in enumerate(exhaustive_instances(n)):
        if i % step == start:
            check_instance(H, summary)
    return summary


def _random_chunk(args) -> VerifySummary:
    indices, seed, n_min, n_max = args
    summary = VerifySummary()
    for i in indices:
        check_instance(random_instance(seed, i, n_min, n_max), summary)
    return summary


def _run(tasks, worker, jobs: int) -> VerifySummary:
    total = VerifySummary()
    t0 = time.perf_counter()
    if jobs <= 1:
        parts = map(worker, tasks)
    else:
        pool = Pool(jobs)
        parts = pool.map(worker, tasks)
        pool.close()
        pool.join()
    for part in parts:
        total.merge(part)
    total.wall_time = time.perf_counter() - t0
    return total


def verify_exhaustive(max_n: int, jobs: int = 1) -> VerifySummary:
    jobs = max(1, jobs)
    tasks = [(n, j, jobs) for n in range(2, max_n + 1) for j in range(jobs)]
    return _run(tasks, _exhaustive_chunk, jobs)


def verify_random(count: int, n_max: int, seed: int, n_min: int | None = None,
                  jobs: int = 1) -> VerifySummary:
    n_min = n_max if n_min is None else n_min
    if not 2 <= n_min <= n_max:
        raise InfeasibleBounds(f"need 2 <= n_min <= n_max, got {n_min}, {n_max}")
    jobs = max(1, jobs)
    tasks = [(range(j, count, jobs), seed, n_min, n_max) for j in range(jobs)]
    return _run(tasks, _random_chunk, jobs)
