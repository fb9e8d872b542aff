"""
Command-line interface: ``qstirling table|eval|verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from .enumeration import BoundExceededError
from .exactmath import QPoly
from .formulas import S1_METHODS, S2_METHODS
from .verify import SUITES, run_suite

__all__ = ["main", "build_table", "render_table", "table_from_json"]

FORMATS = ("csv", "json", "latex")


def _methods(kind: int) -> dict:
    return S1_METHODS if kind == 1 else S2_METHODS


def build_table(kind: int, nmax: int, method: str = "closed") -> list[list[QPoly]]:
    if nmax < 0:
        raise ValueError("nmax must be >= 0")
    fn = _methods(kind).get(method)
    if fn is None:
        raise ValueError(f"unknown method {method!r}")
    return [[fn(n, k) for k in range(n + 1)] for n in range(nmax + 1)]


def _csv(rows: list[list[QPoly]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n", "k", "poly"])
    for n, row in enumerate(rows):
        for k, p in enumerate(row):
            w.writerow([n, k, str(p)])
    return buf.getvalue()


def _latex(kind: int, rows: list[list[QPoly]]) -> str:
    def cell(p: QPoly) -> str:
        return "$" + str(p).replace("*", "") + "$"

    width = len(rows)
    lines = [f"% S{kind}[n,k], rows n = 0..{width - 1}, columns k = 0..{width - 1}",
             "\\begin{tabular}{r|" + "l" * width + "}",
             "$n \\backslash k$ & " + " & ".join(str(k) for k in range(width)) + " \\\\",
             "\\hline"]
    for n, row in enumerate(rows):
        lines.append(f"{n} & " + " & ".join(cell(p) for p in row) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def render_table(kind: int, rows: list[list[QPoly]], fmt: str) -> str:
    if fmt == "csv":
        return _csv(rows)
    if fmt == "json":
        doc = {"kind": kind, "nmax": len(rows) - 1,
               "rows": [[p.to_json() for p in row] for row in rows]}
        return json.dumps(doc) + "\n"
    if fmt == "latex":
        return _latex(kind, rows)
    raise ValueError(f"unknown format {fmt!r}")


def table_from_json(text: str) -> tuple[int, list[list[QPoly]]]:
    doc = json.loads(text)
    return doc["kind"], [[QPoly.from_json(c) for c in row] for row in doc["rows"]]


def _parser() -> argparse.ArgumentParser:
    methods = sorted(set(S1_METHODS) | set(S2_METHODS))
    p = argparse.ArgumentParser(prog="qstirling", description="Exact q-Stirling numbers of both kinds.")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="print the triangle 0 <= k <= n <= nmax")
    t.add_argument("--kind", type=int, choices=(1, 2), required=True)
    t.add_argument("--nmax", type=int, required=True)
    t.add_argument("--format", choices=FORMATS, default="csv")
    t.add_argument("--method", choices=methods, default="closed")

    e = sub.add_parser("eval", help="print a single entry")
    e.add_argument("--kind", type=int, choices=(1, 2), required=True)
    e.add_argument("-n", type=int, required=True)
    e.add_argument("-k", type=int, required=True)
    e.add_argument("--method", choices=methods, default="closed")
    e.add_argument("--at-q", type=int, default=None, dest="at_q")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    v.add_argument("--nmax", type=int, required=True)
    v.add_argument("--json", action="store_true", help="emit the full report as JSON")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = _parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "table":
            if args.nmax < 0:
                parser.error("--nmax must be >= 0")
            out.write(render_table(args.kind, build_table(args.kind, args.nmax, args.method), args.format))
            return 0
        if args.command == "eval":
            if not 0 <= args.k <= args.n:
                parser.error("need 0 <= k <= n")
            fn = _methods(args.kind).get(args.method)
            if fn is None:
                parser.error(f"method {args.method!r} does not apply to kind {args.kind}")
            value = fn(args.n, args.k)
            out.write(f"{value(args.at_q) if args.at_q is not None else value}\n")
            return 0
        if args.nmax < 0:
            parser.error("--nmax must be >= 0")
        report = run_suite(args.suite, args.nmax)
        if args.json:
            out.write(json.dumps(report.to_json(), indent=2) + "\n")
        else:
            out.write(report.summary_text() + "\n")
        return 0 if report.ok else 1
    except (BoundExceededError, ValueError) as exc:
        print(f"qstirling: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
