"""Command-line front end: expansion, diagrams, involution, statistics, checks.

Exit codes: 0 success (all checks Pass), 1 verification failure, 2 usage
or input error.  Big integers are serialized as decimal strings in JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

from .involution import (
    InvolutionCase,
    cancellation_stats,
    enumerate_fixed_points,
    involute,
    orbit_audit,
)
from .partitions import DistinctPartition, format_partition, parse_partition
from .qseries import euler_product, format_series, rhs_fixed_points, rhs_general
from .staircase import render_ferrers, staircase
from .verify import (
    VerificationReport,
    check_durfee_decomposition,
    check_fixed_point_formula,
    check_general_formula,
    check_sylvester,
)

_GENERAL_ORDER = 240
_FIXED_ORDER = 120
_SYLVESTER_ORDER = 32
_DURFEE_ORDER = 26
_DURFEE_DIMENSION = 5
_AUDIT_SIZE = 30
_DEFAULT_MS = (0, 1, 2, 3, 4)


def _display_partition(p: DistinctPartition) -> str:
    return format_partition(p) if p.n else "()"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="franklin",
        description=(
            "Exact expansions of the product of (1 - q^k) over k > m, and the"
            " staircase involution on partitions with distinct parts > m that"
            " explains their cancellations."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print a truncated series expansion")
    p.add_argument("--m", type=int, default=0, help="expand the product over parts > m")
    p.add_argument("--order", type=int, required=True, help="truncation order in q")
    p.add_argument(
        "--rhs",
        choices=("general", "fixed"),
        help="print a closed form instead of the product",
    )
    p.add_argument("--raw", action="store_true", help="comma-separated coefficients")
    p.add_argument("--out", help="write output to a file instead of stdout")

    p = sub.add_parser("staircase", help="describe the m-landing staircase")
    p.add_argument("--partition", required=True, help="comma-separated parts, largest first")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--render", action="store_true", help="draw the labelled diagram")
    p.add_argument("--out", help="write output to a file instead of stdout")

    p = sub.add_parser("involve", help="apply the involution once")
    p.add_argument("--partition", required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--trace", action="store_true", help="draw both diagrams")
    p.add_argument("--out", help="write output to a file instead of stdout")

    p = sub.add_parser("fixed-points", help="list involution fixed points by size")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write output to a file instead of stdout")

    p = sub.add_parser("stats", help="per-size cancellation statistics")
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write output to a file instead of stdout")

    p = sub.add_parser("verify", help="run identity checks")
    p.add_argument(
        "--suite",
        choices=("all", "general", "sylvester", "durfee", "involution"),
        default="all",
    )
    p.add_argument("--m", type=int, help="restrict to one m (default: sweep 0..4)")
    p.add_argument("--order", type=int, help="override the default truncation order")
    p.add_argument("--max-size", type=int, help="involution audit size bound")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", help="write output to a file instead of stdout")
    return parser


def _cmd_expand(args) -> tuple[int, str]:
    if args.rhs == "general":
        series = rhs_general(args.m, args.order)
    elif args.rhs == "fixed":
        series = rhs_fixed_points(args.m, args.order)
    else:
        series = euler_product(args.m, args.order)
    text = ",".join(str(c) for c in series.coeffs) if args.raw else format_series(series)
    return 0, text + "\n"


def _cmd_staircase(args) -> tuple[int, str]:
    p = parse_partition(args.partition)
    sc = staircase(p, args.m)
    lines = [
        f"partition: {_display_partition(p)}",
        f"s_m = {sc.length}",
        f"stairs = {sc.stair_count}",
        f"landings = {len(sc.landing_rows)}",
        f"landing rows = {','.join(str(r) for r in sc.landing_rows)}",
        "cells = " + " ".join(f"({c.row},{c.col})" for c in sc.cells),
    ]
    if args.render:
        lines.append(render_ferrers(p, args.m, mark_staircase=True))
    return 0, "\n".join(lines) + "\n"


def _cmd_involve(args) -> tuple[int, str]:
    p = parse_partition(args.partition)
    result = involute(p, args.m)
    lines = [f"case: {result.case.value}", f"image: {_display_partition(result.image)}"]
    if args.trace and p.n:
        lines.append("input (staircase marked):")
        lines.append(render_ferrers(p, args.m, mark_staircase=True))
        if result.case is not InvolutionCase.FIXED:
            lines.append("image (staircase marked):")
            lines.append(render_ferrers(result.image, args.m, mark_staircase=True))
    return 0, "\n".join(lines) + "\n"


def _cmd_fixed_points(args) -> tuple[int, str]:
    points = list(enumerate_fixed_points(args.m, args.max_size))
    if args.json:
        payload = {
            "m": args.m,
            "maxSize": args.max_size,
            "fixedPoints": [
                {"parts": list(p.parts), "size": w.exponent, "sign": w.sign}
                for p, w in points
            ],
        }
        return 0, json.dumps(payload, indent=2) + "\n"
    lines = [f"{w} {_display_partition(p)}" for p, w in points]
    return 0, "\n".join(lines) + ("\n" if lines else "")


def _cmd_stats(args) -> tuple[int, str]:
    table = cancellation_stats(args.m, args.max_size)
    if args.json:
        payload = {
            "m": args.m,
            "maxSize": args.max_size,
            "perSize": [
                {
                    "size": row.size,
                    "partitions": str(row.partitions),
                    "fixed": row.fixed,
                    "fixedPositive": row.fixed_positive,
                    "fixedNegative": row.fixed_negative,
                    "residual": row.residual,
                    "productCoefficient": str(row.product_coefficient),
                }
                for row in table
            ],
        }
        return 0, json.dumps(payload, indent=2) + "\n"
    lines = ["size partitions fixed fixed+ fixed- residual coefficient"]
    for row in table:
        lines.append(
            f"{row.size} {row.partitions} {row.fixed} {row.fixed_positive}"
            f" {row.fixed_negative} {row.residual} {row.product_coefficient}"
        )
    return 0, "\n".join(lines) + "\n"


def _audit_report(m: int, max_size: int) -> VerificationReport:
    audit = orbit_audit(m, max_size)
    mismatch = None
    if audit.violations:
        law, parts = audit.violations[0]
        mismatch = {"law": law, "partition": ",".join(map(str, parts))}
    return VerificationReport(
        identity="involution-audit",
        params={
            "m": m,
            "maxSize": max_size,
            "totalPartitions": audit.total_partitions,
            "pairedCount": audit.paired_count,
            "fixedCount": audit.fixed_count,
        },
        verdict="Fail" if mismatch else "Pass",
        first_mismatch=mismatch,
    )


def _cmd_verify(args) -> tuple[int, str]:
    ms = [args.m] if args.m is not None else list(_DEFAULT_MS)
    reports: list[VerificationReport] = []
    if args.suite in ("all", "general"):
        for m in ms:
            reports.append(check_general_formula(m, args.order or _GENERAL_ORDER))
            reports.append(check_fixed_point_formula(m, args.order or _FIXED_ORDER))
    if args.suite in ("all", "sylvester"):
        order = args.order or _SYLVESTER_ORDER
        reports.append(check_sylvester(order, order))
    if args.suite in ("all", "durfee"):
        reports.append(
            check_durfee_decomposition(args.order or _DURFEE_ORDER, _DURFEE_DIMENSION)
        )
    if args.suite in ("all", "involution"):
        for m in ms:
            reports.append(_audit_report(m, args.max_size or _AUDIT_SIZE))
    failed = [r for r in reports if not r.passed]
    if args.json:
        payload = [
            {
                "identity": r.identity,
                "params": r.params,
                "verdict": r.verdict,
                "firstMismatch": r.first_mismatch,
                "elapsedSeconds": round(r.elapsed, 6),
            }
            for r in reports
        ]
        return (1 if failed else 0), json.dumps(payload, indent=2) + "\n"
    lines = [r.summary() for r in reports]
    lines.append(f"{len(reports) - len(failed)}/{len(reports)} checks passed")
    return (1 if failed else 0), "\n".join(lines) + "\n"


_HANDLERS = {
    "expand": _cmd_expand,
    "staircase": _cmd_staircase,
    "involve": _cmd_involve,
    "fixed-points": _cmd_fixed_points,
    "stats": _cmd_stats,
    "verify": _cmd_verify,
}


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = _HANDLERS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "out", None):
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
