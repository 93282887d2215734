"""Reading and writing the ``p hg`` hypergraph text format.

::

    c optional comment lines
    p hg <n> <m>
    <m lines, each the space-separated 1-based vertices of one edge>

Emission is canonical: header, then edges in canonical order with
ascending vertices, every line newline-terminated.
"""

from __future__ import annotations

from .core import Hypergraph, build
from .errors import CountMismatch, HgrSyntaxError


def parse_hgr(text: str) -> Hypergraph:
    header = None
    raw_edges = []
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        if header is None:
            if tokens[0] != "p":
                raise HgrSyntaxError("expected header 'p hg <n> <m>'", lineno)
            if len(tokens) != 4 or tokens[1] != "hg":
                raise HgrSyntaxError("header must read 'p hg <n> <m>'", lineno)
            try:
                n, m = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise HgrSyntaxError("n and m must be integers", lineno, line.index(tokens[2]) + 1)
            if n < 1 or m < 0:
                raise HgrSyntaxError("need n >= 1 and m >= 0", lineno)
            header = (n, m)
            continue
        edge = []
        col = 0
        for tok in tokens:
            col = line.index(tok, col)
            if not tok.isdigit():
                raise HgrSyntaxError(f"bad vertex id {tok!r}", lineno, col + 1)
            edge.append(int(tok))
            col += len(tok)
        raw_edges.append(edge)
    if header is None:
        raise HgrSyntaxError("missing header 'p hg <n> <m>'", 1)
    n, m = header
    if len(raw_edges) != m:
        raise CountMismatch(f"header promises {m} edges, found {len(raw_edges)}")
    return build(n, raw_edges)


def emit_hgr(H: Hypergraph, comments=()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p hg {H.n} {H.m}")
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def read_hgr(path) -> Hypergraph:
    with open(path) as fh:
        return parse_hgr(fh.read())
