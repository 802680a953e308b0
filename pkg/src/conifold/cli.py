"""Command-line front end.

Exit codes: 0 success, 1 an identity failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from conifold.laurent import render_t
from conifold.partition import (
    PT,
    Chamber,
    InvariantTable,
    Report,
    invariant_table,
    verify_exterior_identity,
    verify_inverse_identity,
    verify_sl2,
    verify_topstring,
)
from conifold.weightpoly import WeightExprError, parse_weight_expr

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_QMAX, DEFAULT_TMAX = 8, 4
EXTERIOR_CHAMBERS = range(7)
CHECKS = ("inverse", "exterior", "topstring", "sl2")


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _chamber(text: str) -> Chamber:
    try:
        return Chamber.parse(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"chamber must be a nonnegative integer or 'pt', got {text!r}")


def _flip(text: str) -> tuple[int, int]:
    try:
        m, j = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected M,J")
    return m, j


def _box_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--qmax", type=_nonneg, default=DEFAULT_QMAX, help="largest q-degree M (default 8)")
    p.add_argument("--tmax", type=_nonneg, default=DEFAULT_TMAX, help="largest T-degree L (default 4)")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    p.add_argument("--inject-sign-flip", type=_flip, default=None, help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conifold",
        description="Refined conifold invariants and the identities between them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("refined-table", help="emit the table of refined invariants")
    _box_flags(p)
    p.add_argument("--chamber", type=_chamber, default=PT, help="chamber index n or 'pt' (default)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("verify", help="check identities exactly within the box")
    p.add_argument("which", choices=("all",) + CHECKS)
    _box_flags(p)
    p.add_argument("--chamber", type=_chamber, default=None,
                   help="restrict exterior/sl2 checks to one chamber (default: 0..6 and pt)")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--report", help="also write the JSON report to this path")

    p = sub.add_parser("weightpoly", help="evaluate a weight-polynomial expression")
    p.add_argument("expr")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--output", "-o")
    return parser


def _emit(text: str, path: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def format_table(table: InvariantTable, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(table.to_json(), indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["l", "m", "s_min", "coeffs", "P_lm", "sl2"])
        for r in table.rows:
            j = r.to_json()
            sl2 = "" if j["sl2"] is None else json.dumps(j["sl2"], separators=(",", ":"))
            w.writerow([r.l, r.m, j["s_min"], ",".join(j["coeffs"]), j["P_lm"], sl2])
        return buf.getvalue()
    M, L = table.box
    lines = [f"# refined invariants W(t^(1/2)) of T^l q^m, qmax={M} tmax={L} chamber={table.chamber}"]
    lines.append(f"{'l':>3} {'m':>3} {'P_lm':>8}  W")
    for r in table.rows:
        lines.append(f"{r.l:>3} {r.m:>3} {r.numeric:>8}  {render_t(r.invariant)}")
    return "\n".join(lines)


def run_checks(which: str, box, chamber: Chamber | None, sign_flip=None) -> list[Report]:
    selected = CHECKS if which == "all" else (which,)
    reports: list[Report] = []
    for name in selected:
        if name == "inverse":
            reports.append(verify_inverse_identity(box, sign_flip))
        elif name == "topstring":
            reports.append(verify_topstring(box, sign_flip))
        elif name == "exterior":
            chambers = [chamber] if chamber is not None else [Chamber(n) for n in EXTERIOR_CHAMBERS] + [PT]
            reports.extend(verify_exterior_identity(box, c, sign_flip) for c in chambers)
        elif name == "sl2":
            reports.append(verify_sl2(box, chamber if chamber is not None else PT, sign_flip))
    return reports


def format_reports(reports: list[Report], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in reports], indent=2)
    lines = []
    for r in reports:
        extra = f" {r.detail}" if r.detail else ""
        lines.append(f"{r.status.upper():4} {r.identity:<9} box={r.box[0]},{r.box[1]}{extra}")
        for d in r.discrepancies[:5]:
            lines.append(f"     at (l={d['l']}, m={d['m']}): " + json.dumps({k: v for k, v in d.items() if k not in ("l", "m")}))
        if len(r.discrepancies) > 5:
            lines.append(f"     ... {len(r.discrepancies) - 5} more")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    if args.command == "weightpoly":
        try:
            value = parse_weight_expr(args.expr)
        except WeightExprError as exc:
            print(f"conifold weightpoly: {exc}", file=sys.stderr)
            return EXIT_USAGE
        out = json.dumps(value.to_json()) if args.format == "json" else render_t(value)
        _emit(out, args.output)
        return EXIT_OK

    box = (args.qmax, args.tmax)
    if args.command == "refined-table":
        table = invariant_table(box, args.chamber, args.inject_sign_flip)
        _emit(format_table(table, args.format), args.output)
        return EXIT_OK

    reports = run_checks(args.which, box, args.chamber, args.inject_sign_flip)
    _emit(format_reports(reports, args.format), args.output)
    if args.report:
        _emit(format_reports(reports, "json"), args.report)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
