"""Command-line entry point.

Exit codes: 0 success, 1 computation error (the error class name is printed
to stderr), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import exact, families, reduce
from .errors import HypergraphError
from .hgr import emit_hgr, read_hgr
from .recognize import RecognitionReport, decide_extremal, oracle_extremal, recognize
from .specfile import parse_g3_spec, parse_hhat3_spec
from .verify import verify_exhaustive, verify_random


def _fmt_set(vs) -> str:
    return "{" + ",".join(map(str, vs)) + "}"


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    H = read_hgr(args.file)
    M = exact.max_matching(H)
    D = exact.min_dominating(H)
    T = exact.min_transversal(H)
    if args.json:
        out = {"nu": M.value, "gamma": D.value, "tau": T.value}
        if args.certificates:
            out["matching"] = [list(e) for e in M.certificate_edges(H)]
            out["dominating"] = list(D.certificate)
            out["transversal"] = list(T.certificate)
        print(json.dumps(out, sort_keys=True))
        return 0
    print(f"nu={M.value} gamma={D.value} tau={T.value}")
    if args.certificates:
        print("matching: " + " ".join(_fmt_set(e) for e in M.certificate_edges(H)))
        print("dominating: " + _fmt_set(D.certificate))
        print("transversal: " + _fmt_set(T.certificate))
    return 0


def cmd_peel(args) -> int:
    H = read_hgr(args.file)
    trace = reduce.peel(H)
    deleted = " ".join(_fmt_set(H.edges[i]) for i in trace.deleted) or "none"
    _write(emit_hgr(trace.result, [f"deleted {deleted}"]), args.output)
    return 0


def cmd_contract(args) -> int:
    H = read_hgr(args.file)
    if args.peel:
        H = reduce.peel(H).result
    c = reduce.edge_contract(H)
    comments = ["labels " + " ".join(map(str, c.labels))]
    _write(emit_hgr(c.graph, comments), None)
    return 0


def cmd_recognize(args) -> int:
    H = read_hgr(args.file)
    if args.mode == "oracle":
        report = RecognitionReport(oracle_extremal(H))
    else:
        report = recognize(H)
        if args.mode == "both":
            decide_extremal(H, "both")  # raises Disagreement
    if args.mode != "structural" and H.rank() == 3:
        report.extras.update(nu=exact.max_matching(H).value,
                             gamma=exact.min_dominating(H).value,
                             tau=exact.min_transversal(H).value)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True))
        return 0
    print("accepted" if report.accepted else "rejected")
    if "nu" in report.extras:
        e = report.extras
        print(f"nu={e['nu']} gamma={e['gamma']} tau={e['tau']}")
    if report.witness is not None:
        for b in report.witness.hhat_blocks:
            print(f"block hhat3 X={_fmt_set(b.X)} middles={_fmt_set(b.middles)}")
        for f in report.witness.f_blocks:
            print(f"block F X={_fmt_set(f.X)} middles={_fmt_set(f.middles)}")
    if report.reason is not None:
        r = report.reason
        print(f"reason: {r.code} (step {r.step}): {r.detail}")
    return 0


def cmd_generate(args) -> int:
    kind = args.kind
    if kind == "f":
        H = families.make_F()
    elif kind == "h3a":
        if args.l is None or args.entries is None:
            raise _Usage("generate h3a needs --l and --entries")
        H = families.make_h3a(families.MatrixProfile.from_csv(args.l, args.entries))
    elif kind == "hhat3":
        if args.spec is None:
            raise _Usage("generate hhat3 needs --spec")
        with open(args.spec) as fh:
            H = families.make_hhat3(parse_hhat3_spec(fh.read()))
    elif kind == "g3":
        if args.spec is None:
            raise _Usage("generate g3 needs --spec")
        with open(args.spec) as fh:
            H, _ = families.make_g3(parse_g3_spec(fh.read()))
    elif kind == "member":
        _, H = families.sample_member(families.SampleBounds(), args.seed)
    else:  # random
        if None in (args.n, args.rank, args.m):
            raise _Usage("generate random needs --n, --rank and --m")
        H = families.sample_random_hypergraph(args.n, args.rank, args.m, args.seed)
    _write(emit_hgr(H), args.output)
    return 0


def cmd_verify(args) -> int:
    if args.exhaustive_n is not None:
        summary = verify_exhaustive(args.exhaustive_n, args.jobs)
    else:
        if args.n is None:
            raise _Usage("verify --random needs --n")
        summary = verify_random(args.random, args.n, args.seed, args.n_min, args.jobs)
    sys.stdout.write(summary.render())
    return 0 if summary.ok else 1


class _Usage(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hypdom", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="print nu, gamma and tau")
    s.add_argument("file")
    s.add_argument("--certificates", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("peel", help="peel edges without a degree-1 vertex")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_peel)

    s = sub.add_parser("contract", help="edge-contracting graph of a peeled hypergraph")
    s.add_argument("file")
    s.add_argument("--peel", action="store_true", help="peel the input first")
    s.set_defaults(func=cmd_contract)

    s = sub.add_parser("recognize", help="decide gamma = 2 nu for rank 3")
    s.add_argument("file")
    s.add_argument("--mode", choices=("structural", "oracle", "both"), default="structural")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_recognize)

    s = sub.add_parser("generate", help="write a family member or random instance")
    s.add_argument("kind", choices=("f", "h3a", "hhat3", "g3", "member", "random"))
    s.add_argument("--l", type=int)
    s.add_argument("--entries")
    s.add_argument("--spec")
    s.add_argument("--n", type=int)
    s.add_argument("--rank", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("verify", help="cross-check recognizer and solvers on a corpus")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--exhaustive-n", type=int, metavar="K")
    g.add_argument("--random", type=int, metavar="COUNT")
    s.add_argument("--n", type=int, help="largest vertex count of random instances")
    s.add_argument("--n-min", type=int, help="smallest vertex count (default: --n)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Usage as err:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {err}", file=sys.stderr)
        return 2
    except (HypergraphError, OSError) as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
