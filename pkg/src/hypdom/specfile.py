"""Line-oriented text encoding of G3Spec and Hhat3Spec.

Grammar, one directive per line, blank lines and ``c ...`` comments ignored::

    block f
    block hhat3 <l> <entries>     entries: upper triangle row-major, e.g. 2,1,2
    extra1 <x> <x> [<x>]          local ids, attached to the last hhat3 block
    extra2 <x> <x> <s>
    z1 <m> <a> <b> <n> <c>        blocks numbered from 1, ids local to their block
    z2 <m> <a> <b> <n> <c>

An Ĥ₃ spec file holds exactly one ``block hhat3`` line and no glue.
"""

from __future__ import annotations

from .errors import BadSpec, HgrSyntaxError
from .families import FBlock, G3Spec, GlueEdge, Hhat3Spec, MatrixProfile


def parse_g3_spec(text: str) -> G3Spec:
    blocks: list = []
    extras: dict[int, tuple[list, list]] = {}
    z1, z2 = [], []
    for lineno, line in enumerate(text.splitlines(), 1):
        tokens = line.split()
        if not tokens or tokens[0] == "c":
            continue
        head, args = tokens[0], tokens[1:]
        try:
            if head == "block":
                if args == ["f"]:
                    blocks.append(FBlock())
                elif len(args) == 3 and args[0] == "hhat3":
                    blocks.append(MatrixProfile.from_csv(int(args[1]), args[2]))
                    extras[len(blocks)] = ([], [])
                else:
                    raise HgrSyntaxError("expected 'block f' or 'block hhat3 <l> <entries>'", lineno)
            elif head in ("extra1", "extra2"):
                target = [b for b in extras if b <= len(blocks)]
                if not target:
                    raise HgrSyntaxError(f"{head} before any hhat3 block", lineno)
                ids = tuple(int(a) for a in args)
                extras[max(target)][0 if head == "extra1" else 1].append(ids)
            elif head in ("z1", "z2"):
                if len(args) != 5:
                    raise HgrSyntaxError(f"{head} takes 5 integers", lineno)
                (z1 if head == "z1" else z2).append(GlueEdge(*(int(a) for a in args)))
            else:
                raise HgrSyntaxError(f"unknown directive {head!r}", lineno)
        except ValueError:
            raise HgrSyntaxError(f"non-integer argument in {line.strip()!r}", lineno)
    built = []
    for b, blk in enumerate(blocks, 1):
        if isinstance(blk, MatrixProfile):
            e1, e2 = extras[b]
            built.append(Hhat3Spec(blk, tuple(e1), tuple(e2)))
        else:
            built.append(blk)
    spec = G3Spec(tuple(built), tuple(z1), tuple(z2))
    spec.validate()
    return spec


def parse_hhat3_spec(text: str) -> Hhat3Spec:
    spec = parse_g3_spec(text)
    if len(spec.blocks) != 1 or not isinstance(spec.blocks[0], Hhat3Spec) or spec.z1 or spec.z2:
        raise BadSpec("an hhat3 spec needs exactly one hhat3 block and no glue")
    return spec.blocks[0]


def emit_g3_spec(spec: G3Spec) -> str:
    lines = []
    for blk in spec.blocks:
        if isinstance(blk, FBlock):
            lines.append("block f")
            continue
        prof = blk.profile
        lines.append(f"block hhat3 {prof.l} {','.join(map(str, prof.entries))}")
        lines.extend("extra1 " + " ".join(map(str, e)) for e in blk.extra1)
        lines.extend("extra2 " + " ".join(map(str, e)) for e in blk.extra2)
    for kind, glue in (("z1", spec.z1), ("z2", spec.z2)):
        lines.extend(f"{kind} {g.m} {g.a} {g.b} {g.n} {g.c}" for g in glue)
    return "\n".join(lines) + "\n"
