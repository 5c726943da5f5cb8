"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import arquiver as arq
from . import duality as dual
from . import orders as ords
from .errors import GammaQError
from .rootsys import Segment, parse_quiver, positive_roots

ALIASES = {"R": ">", "L": "<"}


class UsageError(Exception):
    pass


def _quiver(args):
    orient = "".join(ALIASES.get(ch, ch) for ch in args.orient)
    return parse_quiver(args.n, orient, args.xi1)


def _segment(text: str) -> Segment:
    return Segment.parse(text)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_gamma(args) -> int:
    ar = arq.build(_quiver(args))
    text = arq.serialize(ar, args.format)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        _emit(text)
    return 0


def cmd_word(args) -> int:
    ar = arq.build(_quiver(args))
    w = ords.reading(ar, args.reading)
    if args.format == "json":
        o = ords.order_from_word(w)
        _emit(json.dumps({"reading": args.reading, "word": list(w.letters), "order": [[r.a, r.b] for r in o.sequence]}))
    else:
        _emit(str(w))
    return 0


def cmd_pairs(args) -> int:
    ar = arq.build(_quiver(args))
    gamma = _segment(args.gamma).check_rank(ar.n)
    orders = {k: ords.order_from_word(ords.reading(ar, k)) for k in ("L", "U")}
    if args.order:
        orders = {args.order: orders[args.order]}
    rows = []
    for pr in arq.pairs_of(ar, gamma):
        minimal = {}
        for k, o in orders.items():
            key = tuple(sorted((pr.alpha, pr.beta), key=o.rank.__getitem__))
            minimal[k] = key in ords.minimal_pairs(o, gamma)
        rows.append((pr, minimal))
    if args.format == "json":
        _emit(json.dumps([
            {"alpha": [p.alpha.a, p.alpha.b], "beta": [p.beta.a, p.beta.b], "ray": p.side.value, "minimal": mn}
            for p, mn in rows
        ]))
    else:
        for p, mn in rows:
            flags = " ".join(f"minimal_{k}={'yes' if v else 'no'}" for k, v in mn.items())
            _emit(f"{p.alpha} + {p.beta} = {gamma}  ray={p.side.value}  {flags}")
    return 0


def _kind(args):
    return dual.a1(args.n) if args.kind == "a1" else dual.a2(args.n)


def cmd_denom(args) -> int:
    if args.k is None or args.l is None:
        raise UsageError("denom needs --k and --l")
    zeros = dual.denominator_zeros(_kind(args), args.k, args.l)
    if args.format == "json":
        _emit(json.dumps([str(z) for z in zeros]))
    else:
        _emit(", ".join(map(str, zeros)) if zeros else "(none)")
    return 0


def _pair(text: str) -> tuple[int, int]:
    try:
        i, a = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected i,p but got {text!r}") from exc
    return i, a


def cmd_dorey(args) -> int:
    if args.triple:
        if len(args.triple) != 3:
            raise UsageError("give --triple exactly three times")
        ok = dual.dorey_untwisted(args.n, *map(_pair, args.triple), printed=args.printed)
        _emit("true" if ok else "false")
        return 0 if ok else 1
    if not args.gamma:
        raise UsageError("dorey needs --gamma or three --triple values")
    ar = arq.build(_quiver(args))
    gamma = _segment(args.gamma).check_rank(ar.n)
    all_ok = True
    out = []
    for pr in arq.pairs_of(ar, gamma):
        t = dual.dorey_from_pair(ar, pr.alpha, pr.beta, printed=args.printed)
        all_ok &= t.verified
        out.append((pr, t))
    if args.format == "json":
        _emit(json.dumps([
            {"alpha": [p.alpha.a, p.alpha.b], "beta": [p.beta.a, p.beta.b], "ray": p.side.value,
             "modules": [str(t.first), str(t.second), str(t.target)], "verified": t.verified}
            for p, t in out
        ]))
    else:
        for p, t in out:
            _emit(f"{t.first} (x) {t.second} -> {t.target}  ray={p.side.value}  {'ok' if t.verified else 'FAIL'}")
    return 0 if all_ok else 1


def cmd_qj(args) -> int:
    ar = arq.build(_quiver(args))
    qj = dual.build_qj(dual.simple_root_datum(ar))
    type_a = dual.is_type_A_graph(qj.cartan)
    if args.format == "json":
        _emit(json.dumps({
            "J": [[c.i, c.p] for c in qj.datum.coords],
            "cartan": [list(r) for r in qj.cartan],
            "arrows": [list(r) for r in qj.d],
            "type_A": type_a,
        }))
    else:
        for k, c in enumerate(qj.datum.coords, 1):
            _emit(f"alpha_{k} at ({c.i},{c.p})")
        for r in qj.cartan:
            _emit(" ".join(f"{v:3d}" for v in r))
        _emit(f"type A: {'yes' if type_a else 'no'}")
    return 0 if type_a else 1


def cmd_verify(args) -> int:
    from .oracle import verify_suite

    rep = verify_suite(args.max_n, workers=args.workers)
    _emit(rep.to_json() if args.format == "json" else rep.to_text())
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gammaq", description="AR quivers of type A and their duality data.")
    sub = parser.add_subparsers(dest="command", required=True)

    def quiver_args(p):
        p.add_argument("--n", type=int, required=True, help="rank")
        p.add_argument("--orient", default="", help="orientation over '>' '<' (aliases R L), length n-1")
        p.add_argument("--xi1", type=int, default=0, help="height of vertex 1")

    p = sub.add_parser("gamma", help="build and print the AR quiver")
    quiver_args(p)
    p.add_argument("--format", choices=("json", "dot", "ascii"), default="json")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("word", help="L- or U-reading reduced word")
    quiver_args(p)
    p.add_argument("--reading", choices=("L", "U"), default="L")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("pairs", help="pairs summing to a root, with ray and minimality")
    quiver_args(p)
    p.add_argument("--gamma", required=True, help="root as a,b or a")
    p.add_argument("--order", choices=("L", "U"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("denom", help="zeros of a denominator formula")
    p.add_argument("--kind", choices=("a1", "a2"), default="a1")
    p.add_argument("--n", type=int, required=True, help="n for a1, m for a2")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_denom)

    p = sub.add_parser("dorey", help="Dorey condition for a triple or for the pairs of a root")
    quiver_args(p)
    p.add_argument("--gamma")
    p.add_argument("--triple", action="append", metavar="i,p")
    p.add_argument("--printed", action="store_true", help="use the off-by-sign second case")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_dorey)

    p = sub.add_parser("qj", help="quiver on the simple-root positions")
    quiver_args(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_qj)

    p = sub.add_parser("verify", help="exhaustive verification sweep")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GammaQError) as exc:
        code = getattr(exc, "code", "USAGE")
        print(f"error [{code}]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
