"""Command-line front end.

    gpr analyze FILE [--json]
    gpr compare A B [--json]
    gpr reduce FILE --word W
    gpr distance FILE --from W --to W [--electrified --radius N]
    gpr ball FILE --radius N [--count-only] [--electrified] [--max-vertices N]
    gpr flat FILE --diag1 u,v --diag2 a,b --size N

Words are whitespace-separated tokens ``v`` or ``v^k``; ``e`` is the empty
word.  Exit codes: 0 success, 1 usage or parse error, 2 resource cap hit.
"""

from __future__ import annotations

import argparse
import sys

from .geometry import (
    BallCapExceeded,
    DEFAULT_VERTEX_CAP,
    build_ball,
    electrified_distance,
    flat_witness,
)
from .graphs import GGParseError, parse_graph
from .report import analyze, compare, render_comparison, render_report
from .words import WordParseError, format_word, invert, multiply, parse_word, reduce_word

__all__ = ["main"]


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors by default; the contract here is 1
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SystemExit(self._fail(message))

    def _fail(self, message):
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        return 1


def _build_parser():
    p = _Parser(prog="gpr", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pa = sub.add_parser("analyze", help="full invariant report for one graph")
    pa.add_argument("file")
    pa.add_argument("--json", action="store_true")

    pc = sub.add_parser("compare", help="confront two graphs on QI invariants")
    pc.add_argument("file_a")
    pc.add_argument("file_b")
    pc.add_argument("--json", action="store_true")

    pr = sub.add_parser("reduce", help="canonical normal form of a word")
    pr.add_argument("file")
    pr.add_argument("--word", required=True)

    pd = sub.add_parser("distance", help="word-metric or electrified distance")
    pd.add_argument("file")
    pd.add_argument("--from", dest="from_", required=True, metavar="W")
    pd.add_argument("--to", required=True, metavar="W")
    pd.add_argument("--electrified", action="store_true")
    pd.add_argument("--radius", type=int)

    pb = sub.add_parser("ball", help="materialize a Cayley ball")
    pb.add_argument("file")
    pb.add_argument("--radius", type=int, required=True)
    pb.add_argument("--count-only", action="store_true")
    pb.add_argument("--electrified", action="store_true")
    pb.add_argument("--max-vertices", type=int, default=DEFAULT_VERTEX_CAP)

    pf = sub.add_parser("flat", help="flat grid spanned by two square diagonals")
    pf.add_argument("file")
    pf.add_argument("--diag1", required=True, metavar="u,v")
    pf.add_argument("--diag2", required=True, metavar="a,b")
    pf.add_argument("--size", type=int, required=True)
    return p


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"gpr: cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(1) from None
    try:
        return parse_graph(text)
    except (GGParseError, ValueError) as exc:
        print(f"gpr: {path}: {exc}", file=sys.stderr)
        raise SystemExit(1) from None


def _word(g, text):
    try:
        return reduce_word(parse_word(g, text))
    except WordParseError as exc:
        print(f"gpr: bad word {text!r}: {exc}", file=sys.stderr)
        raise SystemExit(1) from None


def _pair(g, text):
    parts = text.split(",")
    if len(parts) != 2:
        print(f"gpr: expected a pair u,v (got {text!r})", file=sys.stderr)
        raise SystemExit(1)
    return parts[0].strip(), parts[1].strip()


def main(argv=None):
    try:
        args = _build_parser().parse_args(argv)
        return _dispatch(args)
    except BallCapExceeded as exc:
        print(f"gpr: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1


def _dispatch(args):
    cmd = args.command
    if cmd == "analyze":
        rep = analyze(_load(args.file))
        print(rep.to_json() if args.json else render_report(rep))
        return 0
    if cmd == "compare":
        verdict = compare(_load(args.file_a), _load(args.file_b))
        print(verdict.to_json() if args.json else render_comparison(verdict))
        return 0
    if cmd == "reduce":
        g = _load(args.file)
        print(format_word(_word(g, args.word)))
        return 0
    if cmd == "distance":
        g = _load(args.file)
        x = _word(g, args.from_)
        y = _word(g, args.to)
        if args.electrified:
            if args.radius is None:
                print("gpr: --electrified requires --radius", file=sys.stderr)
                return 1
            d = electrified_distance(x, y, args.radius)
            print(f"{d.value} (radius {d.radius})")
        else:
            print(multiply(invert(x), y).length)
        return 0
    if cmd == "ball":
        g = _load(args.file)
        ball = build_ball(g, args.radius, electrified=args.electrified,
                          max_vertices=args.max_vertices)
        if args.count_only:
            print(ball.vertex_count)
        else:
            cones = sum(1 for _ in ball.cone_edges()) if args.electrified else 0
            print(f"vertices {ball.vertex_count} edges {ball.edge_count()}"
                  + (f" cone_edges {cones}" if args.electrified else ""))
            for nf in ball.verts:
                print(format_word(nf))
        return 0
    if cmd == "flat":
        g = _load(args.file)
        try:
            grid = flat_witness(g, _pair(g, args.diag1), _pair(g, args.diag2),
                                args.size)
        except ValueError as exc:
            print(f"gpr: {exc}", file=sys.stderr)
            return 1
        for row in grid.all_vertices():
            print(" | ".join(format_word(nf) for nf in row))
        print(f"isometric: {grid.is_isometric()}")
        return 0
    raise AssertionError(f"unhandled command {cmd!r}")


if __name__ == "__main__":
    sys.exit(main())
