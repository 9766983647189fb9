"""Command-line front end.

Every run is fully determined by its flags: identical flags give
byte-identical output, regardless of --threads. JSON output is a single
document; CSV carries the same fields in the same order. Exit codes:
0 success, 1 bad input or capacity, 2 a verify subcommand found a
counterexample (broken implementation, not broken input).

Subcommands:
  check <n>; f <n> [--brute]; count --x X --y Y; pr --x X;
  ratio-grid --xs a,b,c --ys d,e,f; window <x>;
  endpoints --limit X [--witnesses]; density --m M [--empirical-x X];
  density-sum --m-max M; hs-verify --limit X; hs-near --d-limit D;
  robin --limit X
Global flags (valid after any subcommand):
  --threads K --segment-size S --format json|csv --output PATH
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

from pracnum import arith, density, hs, practical, sieve
from pracnum.errors import PracnumError, TheoremViolationError


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on parse failure; the contract here is
    # exit 1 with usage text, so route errors through an exception
    def error(self, message):
        raise _UsageError(f"{self.format_usage()}error: {message}")


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: machine parallelism)")
    common.add_argument("--segment-size", type=int, default=sieve.DEFAULT_SEGMENT_SIZE,
                        help="integers per sieve segment (default 2^20)")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--output", default=None, help="output path (default: stdout)")
    return common


def _build_parser() -> _Parser:
    parser = _Parser(prog="pracnum", description=__doc__.splitlines()[0])
    common = _common_flags()
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("check", parents=[common], help="classify n and report f(n)")
    p.add_argument("n", type=int)

    p = sub.add_parser("f", parents=[common], help="the practicality function f(n)")
    p.add_argument("n", type=int)
    p.add_argument("--brute", action="store_true",
                   help="use the subset-sum oracle instead of the factorization path")

    p = sub.add_parser("count", parents=[common], help="N(x,y) = #{n <= x : f(n) >= y}")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--y", type=int, required=True)

    p = sub.add_parser("pr", parents=[common], help="PR(x) = count of practical n <= x")
    p.add_argument("--x", type=int, required=True)

    p = sub.add_parser("ratio-grid", parents=[common],
                       help="N(x,y) and normalized ratios over a grid")
    p.add_argument("--xs", required=True, help="comma-separated x values")
    p.add_argument("--ys", required=True, help="comma-separated y values")

    p = sub.add_parser("window", parents=[common],
                       help="least practical number in (x, x + 2*sqrt(x))")
    p.add_argument("x", type=int)

    p = sub.add_parser("endpoints", parents=[common], help="additive endpoints up to a limit")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--witnesses", action="store_true",
                   help="include the least practical witness per endpoint")

    p = sub.add_parser("density", parents=[common], help="exact density of {n : f(n) = m}")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--empirical-x", type=int, default=None,
                   help="also estimate the density by exact count up to this limit")

    p = sub.add_parser("density-sum", parents=[common],
                       help="partial sum of the endpoint densities")
    p.add_argument("--m-max", type=int, required=True)

    p = sub.add_parser("hs-verify", parents=[common],
                       help="scan for non-practical n with f(n) above the threshold")
    p.add_argument("--limit", type=int, required=True)

    p = sub.add_parser("hs-near", parents=[common],
                       help="construct non-practical n approaching the threshold")
    p.add_argument("--d-limit", type=int, required=True)

    p = sub.add_parser("robin", parents=[common], help="verify the sigma upper bound on [3, X]")
    p.add_argument("--limit", type=int, required=True)

    return parser


def _check_range(value: int, flag: str, lo: int, hi: int):
    if not lo <= value <= hi:
        raise _UsageError(f"error: {flag} must be in [{lo}, {hi}], got {value}")


def _int_list(text: str, flag: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part != ""]
    except ValueError:
        raise _UsageError(f"error: {flag} expects comma-separated integers, got {text!r}")


# ---------------------------------------------------------------- output --

def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit(args, doc, header: list[str], rows: list[dict]):
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        if args.format == "json":
            out.write(json.dumps(doc))
            out.write("\n")
        else:
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([_cell(row[key]) for key in header])
    finally:
        if args.output:
            out.close()


# -------------------------------------------------------------- handlers --

def _cmd_check(args, threads, segment_size):
    _check_range(args.n, "n", 1, arith.N_CAP)
    dec = practical.decompose(args.n)
    row = {"n": dec.n, "practical": dec.is_practical, "f": dec.f_value,
           "component": dec.component}
    return row, ["n", "practical", "f", "component"], [row], 0


def _cmd_f(args, threads, segment_size):
    _check_range(args.n, "n", 1, practical.F_BRUTE_N_CAP if args.brute else arith.N_CAP)
    value = practical.f_brute(args.n) if args.brute else practical.f_fast(args.n)
    row = {"n": args.n, "f": value}
    return row, ["n", "f"], [row], 0


def _point_row(point: sieve.CountPoint) -> dict:
    return {"x": point.x, "y": point.y, "count": point.count,
            "normalized": point.normalized}


def _cmd_count(args, threads, segment_size):
    _check_range(args.x, "--x", 1, sieve.X_CAP)
    _check_range(args.y, "--y", 1, sieve.X_CAP)
    count = sieve.n_count(args.x, args.y, threads=threads, segment_size=segment_size)
    row = _point_row(sieve.CountPoint(args.x, args.y, count,
                                      count * math.log(args.y) / args.x))
    return row, ["x", "y", "count", "normalized"], [row], 0


def _cmd_pr(args, threads, segment_size):
    _check_range(args.x, "--x", 1, sieve.X_CAP)
    count = sieve.pr_count(args.x, threads=threads, segment_size=segment_size)
    row = {"x": args.x, "count": count, "normalized": count * math.log(args.x) / args.x}
    return row, ["x", "count", "normalized"], [row], 0


def _cmd_ratio_grid(args, threads, segment_size):
    xs = _int_list(args.xs, "--xs")
    ys = _int_list(args.ys, "--ys")
    for x in xs:
        _check_range(x, "--xs", 1, sieve.X_CAP)
    for y in ys:
        _check_range(y, "--ys", 1, sieve.X_CAP)
    points, rejected = sieve.ratio_grid(xs, ys, threads=threads, segment_size=segment_size)
    for x, y in rejected:
        print(f"rejected pair x={x} y={y}: need 4 <= y <= x", file=sys.stderr)
    rows = [_point_row(pt) for pt in points]
    return rows, ["x", "y", "count", "normalized"], rows, 0


def _cmd_window(args, threads, segment_size):
    _check_range(args.x, "x", 1, arith.N_CAP)
    found = sieve.practical_in_window(args.x)
    row = {"x": args.x, "n": found}
    return row, ["x", "n"], [row], 0


def _cmd_endpoints(args, threads, segment_size):
    _check_range(args.limit, "--limit", 1, sieve.X_CAP)
    table = density.endpoints_up_to(args.limit, threads=threads, segment_size=segment_size)
    if args.witnesses:
        rows = [{"m": m, "witness": table.witness[m]} for m in table.endpoints]
        return rows, ["m", "witness"], rows, 0
    rows = [{"m": m} for m in table.endpoints]
    return list(table.endpoints), ["m"], rows, 0


def _cmd_density(args, threads, segment_size):
    _check_range(args.m, "--m", 1, density.RHO_M_CAP)
    if args.empirical_x is not None:
        _check_range(args.empirical_x, "--empirical-x", 1, sieve.X_CAP)
    record = density.density_record(args.m, args.empirical_x,
                                    threads=threads, segment_size=segment_size)
    row = {"m": record.m, "rho_num": record.rho_exact.numerator,
           "rho_den": record.rho_exact.denominator, "rho_float": record.rho_float,
           "empirical": record.empirical, "sample_limit": record.sample_limit}
    return row, ["m", "rho_num", "rho_den", "rho_float", "empirical", "sample_limit"], [row], 0


def _cmd_density_sum(args, threads, segment_size):
    _check_range(args.m_max, "--m-max", 1, density.PARTIAL_SUM_CAP)
    total = density.rho_partial_sum(args.m_max, threads=threads, segment_size=segment_size)
    row = {"m_max": args.m_max, "sum_num": total.numerator,
           "sum_den": total.denominator, "sum_float": float(total)}
    return row, ["m_max", "sum_num", "sum_den", "sum_float"], [row], 0


def _report_row(report: hs.HsReport) -> dict:
    return {"n": report.n, "f": report.f_value, "threshold": report.threshold,
            "ratio": report.ratio, "practical": report.practical}


def _cmd_hs_verify(args, threads, segment_size):
    _check_range(args.limit, "--limit", 1, sieve.X_CAP)
    violations = hs.verify_hs_theorem(args.limit, threads=threads, segment_size=segment_size)
    rows = [_report_row(r) for r in violations]
    return rows, ["n", "f", "threshold", "ratio", "practical"], rows, 2 if rows else 0


def _cmd_hs_near(args, threads, segment_size):
    _check_range(args.d_limit, "--d-limit", 1, hs.NEAR_MISS_D_CAP)
    reports = hs.near_miss_search(args.d_limit, threads=threads, segment_size=segment_size)
    rows = [_report_row(r) for r in reports]
    return rows, ["n", "f", "threshold", "ratio", "practical"], rows, 0


def _cmd_robin(args, threads, segment_size):
    _check_range(args.limit, "--limit", 3, sieve.X_CAP)
    violations = hs.robin_violations(args.limit, threads=threads, segment_size=segment_size)
    rows = [{"n": n} for n in violations]
    return rows, ["n"], rows, 2 if rows else 0


_HANDLERS = {
    "check": _cmd_check,
    "f": _cmd_f,
    "count": _cmd_count,
    "pr": _cmd_pr,
    "ratio-grid": _cmd_ratio_grid,
    "window": _cmd_window,
    "endpoints": _cmd_endpoints,
    "density": _cmd_density,
    "density-sum": _cmd_density_sum,
    "hs-verify": _cmd_hs_verify,
    "hs-near": _cmd_hs_near,
    "robin": _cmd_robin,
}


def run(argv: list[str]) -> int:
    """Parse argv, execute, write results; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        threads = args.threads if args.threads is not None else (os.cpu_count() or 1)
        if threads < 1:
            raise _UsageError(f"error: --threads must be positive, got {threads}")
        if args.segment_size < 1:
            raise _UsageError(f"error: --segment-size must be positive, got {args.segment_size}")
        doc, header, rows, code = _HANDLERS[args.command](args, threads, args.segment_size)
        _emit(args, doc, header, rows)
        return code
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 2
    except OverflowError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PracnumError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
