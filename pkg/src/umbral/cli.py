"""Command-line surface: emit triangles and series, run identity checks.

Exit status: 0 when every comparison passed, 1 when at least one identity
case failed (the report is still emitted), 2 on usage or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional

from .errors import UmbralError
from .identities import verify
from .rationals import parse_rational
from .series import Series
from .special import (
    abel_triangle,
    bernoulli_series,
    euler_series,
    lah_triangle,
    mittag_leffler_triangle,
    stirling1_triangle,
)
from .triangles import CoeffTriangle

TABLE_FAMILIES = ("stirling1u", "stirling1s", "lah", "lah-signed", "abel", "mittag-leffler")
SERIES_OPS = ("revert", "compose", "pow", "bernoulli-gf", "euler-gf")
IDENTITIES = ("t1", "t2", "t3", "remark", "xcheck")
VERIFY_FAMILIES = ("rising-factorial", "lah", "lah-signed", "abel", "mittag-leffler")
FORMATS = ("plain", "csv", "json")


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except UmbralError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="umbral",
        description="Exact umbral-calculus tables, series operations and identity checks.")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="emit a coefficient triangle")
    table.add_argument("--family", choices=TABLE_FAMILIES, required=True)
    table.add_argument("--a", type=_rational_arg, default=Fraction(1),
                       help="abel parameter p/q (nonzero, default 1)")
    table.add_argument("--n-max", type=int, required=True)
    table.add_argument("--format", choices=FORMATS, default="plain")
    table.add_argument("--output", default=None, help="write to this path instead of stdout")
    table.set_defaults(handler=_cmd_table)

    series = sub.add_parser("series", help="run one series operation")
    series.add_argument("op", choices=SERIES_OPS)
    series.add_argument("--coeffs", default=None, help='series literal "c0,c1,..."')
    series.add_argument("--inner", default=None, help="inner series literal for compose")
    series.add_argument("--alpha", type=_rational_arg, default=None,
                        help="exponent / order p/q")
    series.add_argument("--trunc", type=int, default=None)
    series.add_argument("--output", default=None)
    series.set_defaults(handler=_cmd_series)

    ver = sub.add_parser("verify", help="verify an identity on an (n, m, k) grid")
    ver.add_argument("identity", choices=IDENTITIES)
    ver.add_argument("--n-max", type=int, required=True)
    ver.add_argument("--m-max", type=int, required=True)
    ver.add_argument("--a", type=_rational_arg, default=None,
                     help="abel parameter p/q (t3 and xcheck abel)")
    ver.add_argument("--family", choices=VERIFY_FAMILIES, default=None,
                     help="sequence family for xcheck")
    ver.add_argument("--format", choices=FORMATS, default="plain")
    ver.add_argument("--output", default=None)
    ver.set_defaults(handler=_cmd_verify)

    return parser


def _emit(lines, output: Optional[str]) -> None:
    text = "\n".join(lines) + "\n"
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def _build_table(args) -> CoeffTriangle:
    if args.n_max < 0:
        raise UmbralError("--n-max must be nonnegative")
    name = args.family
    if name == "stirling1u":
        return stirling1_triangle(args.n_max, signed=False)
    if name == "stirling1s":
        return stirling1_triangle(args.n_max, signed=True)
    if name == "lah":
        return lah_triangle(args.n_max, signed=False)
    if name == "lah-signed":
        return lah_triangle(args.n_max, signed=True)
    if name == "abel":
        return abel_triangle(args.n_max, args.a)
    return mittag_leffler_triangle(args.n_max)


def _triangle_plain(triangle: CoeffTriangle):
    cells = [[str(n)] + [format(c) for c in row]
             for n, row in enumerate(triangle.rows)]
    header = ["n\\k"] + [str(k) for k in range(triangle.n_max + 1)]
    widths = [len(h) for h in header]
    for row in cells:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    yield "  ".join(h.ljust(widths[i]) for i, h in enumerate(header)).rstrip()
    for row in cells:
        yield "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()


def _cmd_table(args) -> int:
    triangle = _build_table(args)
    if args.format == "csv":
        lines = list(triangle.csv_lines())
    elif args.format == "json":
        obj = {
            "family": args.family,
            "n_max": triangle.n_max,
            "rows": [[str(c) for c in row] for row in triangle.rows],
        }
        if args.family == "abel":
            obj["a"] = str(args.a)
        lines = [json.dumps(obj, indent=2)]
    else:
        lines = list(_triangle_plain(triangle))
    _emit(lines, args.output)
    return 0


def _series_from_args(args, flag: str, value: Optional[str]) -> Series:
    if value is None:
        raise UmbralError(f"series {args.op!r} needs {flag}")
    return Series.from_text(value, trunc=args.trunc)


def _cmd_series(args) -> int:
    if args.trunc is not None and args.trunc < 1:
        raise UmbralError("--trunc must be a positive integer")
    if args.op == "revert":
        result = _series_from_args(args, "--coeffs", args.coeffs).revert()
    elif args.op == "compose":
        outer = _series_from_args(args, "--coeffs", args.coeffs)
        inner = _series_from_args(args, "--inner", args.inner)
        result = outer.compose(inner)
    elif args.op == "pow":
        if args.alpha is None:
            raise UmbralError("series 'pow' needs --alpha")
        result = _series_from_args(args, "--coeffs", args.coeffs) ** args.alpha
    else:
        if args.trunc is None:
            raise UmbralError(f"series {args.op!r} needs --trunc")
        alpha = args.alpha if args.alpha is not None else Fraction(1)
        builder = bernoulli_series if args.op == "bernoulli-gf" else euler_series
        result = builder(alpha, args.trunc)
    _emit([result.to_text()], args.output)
    return 0


def _cmd_verify(args) -> int:
    report = verify(args.identity, args.n_max, args.m_max,
                    a=args.a, family_name=args.family)
    if args.format == "csv":
        lines = list(report.csv_lines())
    elif args.format == "json":
        lines = [json.dumps(report.to_json_obj(), indent=2)]
    else:
        lines = list(report.plain_lines())
    _emit(lines, args.output)
    return 0 if report.all_equal else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except UmbralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
