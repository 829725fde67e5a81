"""``ctxsim`` command line.

Exit status: 0 on success, 1 for bad input or usage, 2 if ``demo`` fails
its own checks.
"""
from __future__ import annotations

import argparse
import sys

from . import demo
from .dataset import ingest
from .report import distmat_report, rank_report, stream_report, weights_report

EXIT_OK = 0
EXIT_DATA = 1
EXIT_DEMO = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DATA, f"{self.prog}: error: {message}\n")


def _floor(text: str):
    if text.lower() in ("none", "inf"):
        return None
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer or 'none', got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("alpha floor must be >= 1")
    return v


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def _precision(text: str) -> int:
    v = int(text)
    if not 0 <= v <= 17:
        raise argparse.ArgumentTypeError("precision must be between 0 and 17")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=_precision, default=3,
                        help="decimals in text output (default 3)")
    common.add_argument("--output", choices=("text", "json"), default="text",
                        help="text table or full-precision JSON")

    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("file", help="case table; '-' reads stdin")
    data.add_argument("--format", choices=("csv", "json"), default="csv", help="input format")

    ctxopt = argparse.ArgumentParser(add_help=False)
    ctxopt.add_argument("--context", metavar="FILE",
                        help="estimate weights from this table instead of FILE itself")

    p = _Parser(prog="ctxsim", description="Context-dependent dissimilarity of boolean cases.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("weights", parents=[common, data], help="attribute probabilities and weights")
    sub.add_parser("distmat", parents=[common, data, ctxopt], help="pairwise dissimilarity table")
    r = sub.add_parser("rank", parents=[common, data, ctxopt], help="rank candidates for a query case")
    r.add_argument("query", help="name of the query case")
    r.add_argument("--candidates", help="comma-separated candidate names (default: all others)")
    s = sub.add_parser("stream", parents=[common, data], help="replay rows through the online estimator")
    s.add_argument("--alpha-floor", type=_floor, default=100,
                   help="case count after which the step size stops shrinking; 'none' disables")
    s.add_argument("--snapshot-every", type=_positive, default=None,
                   help="emit weights every K cases (a final snapshot is always emitted)")
    sub.add_parser("demo", parents=[common], help="reproduce the Austria/Sweden/Hungary grouping flip")
    return p


def _load(path: str, fmt: str):
    if path == "-":
        return ingest(sys.stdin, fmt)
    return ingest(path, fmt)


def _run(args):
    if args.command == "demo":
        return demo.run_demo(args.precision)
    ds = _load(args.file, args.format)
    ctx = None
    if getattr(args, "context", None):
        cds = _load(args.context, args.format)
        if cds.schema != ds.schema:
            raise ValueError("context table has different attributes from the case table")
        ctx = cds.context()
    if args.command == "weights":
        return weights_report(ds, precision=args.precision)
    if args.command == "distmat":
        return distmat_report(ds, ctx, precision=args.precision)
    if args.command == "rank":
        cands = None
        if args.candidates:
            cands = [c.strip() for c in args.candidates.split(",") if c.strip()]
        return rank_report(ds, args.query, cands, ctx, precision=args.precision)
    if args.command == "stream":
        return stream_report(ds, args.alpha_floor, args.snapshot_every, precision=args.precision)
    raise AssertionError(args.command)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = _run(args)
    except (ValueError, KeyError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        print(f"ctxsim: error: {msg}", file=sys.stderr)
        return EXIT_DATA
    sys.stdout.write(doc.to_json() if args.output == "json" else doc.to_text())
    if doc.kind == "demo" and not doc.passed:
        print("ctxsim: demo values deviate from the published tables", file=sys.stderr)
        return EXIT_DEMO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
