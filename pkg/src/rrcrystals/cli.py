"""Command-line front end.

Exit codes: 0 pass, 1 mismatch, 2 integrity error, 64 usage, 74 I/O.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .check import CheckReport, run_check
from .energy import ConsistencyError, CoverageError, IntegrityError, difference_matrix
from .formats import (FORMATS, render_ccon, render_columns, render_icon, render_matrix,
                      render_series, _csv, _md)
from .productside import (normalized_character_series, principal_vector,
                          product_side_series, specialized_D, level_one_vector)
from .rootsystem import ALL_TYPES, AffineType, affine_config
from .sumside import BudgetError, congruence_table, count_d_series, forbidden_parts

EXIT_OK, EXIT_MISMATCH, EXIT_INTEGRITY, EXIT_USAGE, EXIT_IO = 0, 1, 2, 64, 74


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _type(value: str) -> AffineType:
    try:
        return AffineType.parse(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def cmd_matrix(t: AffineType, fmt: str = "csv") -> str:
    return render_matrix(difference_matrix(t), fmt)


def cmd_ccon(t: AffineType, fmt: str = "csv") -> str:
    return render_ccon(t, congruence_table(t), fmt)


def cmd_icon(t: AffineType, fmt: str = "csv") -> str:
    positive = [p for p in forbidden_parts(t) if p.value > 0]
    return render_icon(t, positive, fmt)


def cmd_sum(t: AffineType, n: int, fmt: str = "csv") -> str:
    return render_series(count_d_series(t, n), fmt, t, "d")


def cmd_product(t: AffineType, n: int, fmt: str = "csv") -> str:
    return render_series(product_side_series(t, n).coeffs, fmt, t, "c")


def cmd_specialize(t: AffineType, n: int, fmt: str = "csv") -> str:
    dual = affine_config(t).dual
    columns = {
        "principal_D": list(specialized_D(dual, principal_vector(dual), n).coeffs),
        "shifted_D": list(specialized_D(dual, level_one_vector(dual), n).coeffs),
        "character": list(normalized_character_series(t, n).coeffs),
    }
    return render_columns(columns, fmt, t)


def render_reports(reports: list[CheckReport], fmt: str) -> str:
    if fmt == "json":
        payload = [r.as_dict() for r in reports]
        return json.dumps(payload[0] if len(payload) == 1 else payload) + "\n"
    header = ["type", "p", "c", "d", "reference"]
    rows = [row for r in reports for row in r.rows()]
    if fmt == "csv":
        return _csv([header] + rows)
    return _md(header, rows) + "\n" + "\n".join(r.verdict() for r in reports) + "\n"


def cmd_check(types: list[AffineType], p_max: int, fmt: str = "csv",
              jobs: int = 1) -> tuple[str, list[CheckReport]]:
    if p_max < 1:
        raise UsageError("check needs --max >= 1")
    if jobs > 1 and len(types) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(run_check, types, [p_max] * len(types)))
    else:
        reports = [run_check(t, p_max) for t in types]
    return render_reports(reports, fmt), reports


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rrcrystals", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, series=False, need_type=True):
        p.add_argument("--type", type=_type, required=need_type,
                       help="one of " + ", ".join(t.value for t in ALL_TYPES))
        p.add_argument("--format", choices=FORMATS, default="csv")
        p.add_argument("--out", help="write to this path instead of stdout")
        if series:
            p.add_argument("--max", type=int, default=60, dest="max")
        return p

    common(sub.add_parser("matrix", help="difference matrix"))
    common(sub.add_parser("ccon", help="congruence table"))
    common(sub.add_parser("icon", help="forbidden initial parts"))
    common(sub.add_parser("sum", help="sum-side coefficients d(p)"), series=True)
    common(sub.add_parser("product", help="product-side coefficients c(p)"), series=True)
    common(sub.add_parser("specialize", help="specialized denominators and character"),
           series=True)
    chk = common(sub.add_parser("check", help="compare c(p) and d(p)"),
                 series=True, need_type=False)
    chk.add_argument("--all", action="store_true", help="check all seven types")
    chk.add_argument("--jobs", type=int, default=1)
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        code = EXIT_OK
        if args.command == "check":
            if args.all == (args.type is not None):
                raise UsageError("check needs exactly one of --type or --all")
            types = list(ALL_TYPES) if args.all else [args.type]
            text, reports = cmd_check(types, args.max, args.format, args.jobs)
            for r in reports:
                print(r.verdict(), file=sys.stderr)
            code = EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH
        elif args.command in ("sum", "product", "specialize"):
            if args.max < 0:
                raise UsageError("--max must be nonnegative")
            fn = {"sum": cmd_sum, "product": cmd_product,
                  "specialize": cmd_specialize}[args.command]
            text = fn(args.type, args.max, args.format)
        else:
            fn = {"matrix": cmd_matrix, "ccon": cmd_ccon, "icon": cmd_icon}[args.command]
            text = fn(args.type, args.format)
        _emit(text, args.out)
        return code
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConsistencyError, CoverageError, IntegrityError, OverflowError,
            BudgetError) as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
