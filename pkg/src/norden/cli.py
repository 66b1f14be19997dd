"""Command-line interface: ``norden paper-verify | analyze | sample | family``.

Exit codes: 0 success, 1 when a verification check FAILs, 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from fractions import Fraction

from .analysis import analyze, family_manifold, render_analysis
from .documents import BUNDLED, DocumentError, bundled_path, load_manifold
from .parser import ParseError, parse_scalar
from .polynomial import Polynomial
from .sampling import sample
from .verify import run_paper_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        p = parse_scalar(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not p.is_constant():
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number")
    return p.constant_value()


def _range(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("range must be LO,HI")
    lo, hi = (_rational(p.strip()) for p in parts)
    if hi < lo:
        raise argparse.ArgumentTypeError(f"invalid range: {lo} > {hi}")
    return lo, hi


def _point(text: str) -> tuple[Fraction, ...]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("a point needs four comma-separated values l1,l2,l3,l4")
    return tuple(_rational(p.strip()) for p in parts)


def _scalar_arg(text: str) -> Polynomial:
    try:
        return parse_scalar(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="norden", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("paper-verify", help="verify every published result for the 4-parameter family")
    fmt(p)

    p = sub.add_parser("analyze", help="analyze a manifold document")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="path to a manifold JSON document")
    src.add_argument("--example", choices=BUNDLED, help="use a bundled example document")
    fmt(p)

    p = sub.add_parser("sample", help="evaluate the family at seeded random rational points")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--range", type=_range, default=(Fraction(-10), Fraction(10)), metavar="LO,HI")
    p.add_argument("--include-point", type=_point, action="append", default=[], metavar="l1,l2,l3,l4")
    p.add_argument("--points", action="store_true", help="list every evaluated point")
    p.add_argument("--workers", type=int, default=1)
    fmt(p)

    p = sub.add_parser("family", help="analyze the 4-parameter family at given parameters")
    for name in ("l1", "l2", "l3", "l4"):
        p.add_argument(f"--{name}", type=_scalar_arg, default=None)
    p.add_argument("--symbolic", action="store_true", help="keep unspecified parameters symbolic")
    fmt(p)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "paper-verify":
            report = run_paper_suite()
            out.write(report.to_json() if args.format == "json" else report.to_text())
            return EXIT_OK if report.ok else EXIT_FAIL

        if args.command == "analyze":
            path = args.input if args.input else bundled_path(args.example)
            with warnings.catch_warnings(record=True) as caught:
                warnings.simplefilter("always")
                M = load_manifold(path)
            for w in caught:
                print(f"warning: {w.message}", file=sys.stderr)
            out.write(render_analysis(analyze(M), args.format))
            return EXIT_OK

        if args.command == "sample":
            if args.count <= 0:
                raise ValueError("--count must be positive")
            lo, hi = args.range
            summary = sample(args.count, args.seed, lo, hi, args.include_point, workers=args.workers)
            if args.format == "json":
                import json

                out.write(json.dumps(summary.to_dict(args.points), indent=2) + "\n")
            else:
                out.write(summary.to_text(args.points))
            return EXIT_OK

        if args.command == "family":
            lams = []
            for name in ("l1", "l2", "l3", "l4"):
                value = getattr(args, name)
                if value is None:
                    if not args.symbolic:
                        raise ValueError(f"--{name} is required unless --symbolic is given")
                    value = Polynomial.var(name)
                lams.append(value)
            out.write(render_analysis(analyze(family_manifold(lams)), args.format))
            return EXIT_OK
    except (OSError, DocumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
