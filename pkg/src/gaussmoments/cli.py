"""Command-line front end.

    gaussmoments compute --kind central --nu 4 --mu 0 --sigma 1
    gaussmoments check --kind raw --nu 2.5 --mu -1 --sigma 2 --samples 1000000
    gaussmoments table --pretty

Exit status: 0 success, 1 a check failed, 2 usage or precondition error.
Records go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys

from . import moments
from .errors import DomainError, MomentsError, ToleranceNotMetError
from .moments import FormulaPath, MomentKind, MomentQuery, NormalParams
from .oracle import mc_moment, quad_moment
from .records import format_pretty, format_record

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

KINDS = {
    "raw": MomentKind.RAW,
    "central": MomentKind.CENTRAL,
    "abs": MomentKind.RAW_ABS,
    "central-abs": MomentKind.CENTRAL_ABS,
}
_KIND_NAMES = {v: k for k, v in KINDS.items()}
METHODS = {p.value.replace("_", "-"): p for p in FormulaPath}

#: Oracle agreement: |closed form - quadrature| <= bound + ORACLE_RTOL * max(1, |value|).
ORACLE_RTOL = 1e-9
#: Monte Carlo agreement, in standard errors.
MC_SIGMAS = 4.0
#: Multiplies every check tolerance; 0 turns any nonzero deviation into a failure.
TOLERANCE_SCALE = 1.0

TABLE_ORDERS = [float(n) for n in range(9)] + [0.5, 1.5, 2.5]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="gaussmoments",
                     description="Moments of the normal distribution of real order nu > -1.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def moment_args(p):
        p.add_argument("--kind", required=True, choices=list(KINDS))
        p.add_argument("--nu", required=True, type=float)
        p.add_argument("--mu", type=float, default=0.0)
        p.add_argument("--sigma", type=float, default=1.0)
        p.add_argument("--pretty", action="store_true", help="aligned columns")

    compute = sub.add_parser("compute", help="evaluate one moment")
    moment_args(compute)
    compute.add_argument("--method", choices=list(METHODS), default="auto")

    check = sub.add_parser("check", help="cross-check all formula paths and the oracles")
    moment_args(check)
    check.add_argument("--seed", type=int, default=0)
    check.add_argument("--samples", type=int, default=0,
                       help="Monte Carlo sample count; 0 skips sampling")

    table = sub.add_parser("table", help="central and central-absolute moments, sigma = 1")
    table.add_argument("--pretty", action="store_true")
    return parser


def _emit(records, pretty):
    if pretty:
        print(format_pretty(records))
    else:
        for rec in records:
            print(format_record(rec))


def _base_record(kind, nu, p, result):
    return {
        "kind": _KIND_NAMES[kind],
        "nu": nu,
        "mu": p.mu,
        "sigma": p.sigma,
        "value_re": result.value.real,
        "value_im": result.value.imag,
        "path": result.path.value,
        "err_estimate": result.err_estimate,
    }


def cmd_compute(args) -> int:
    kind = KINDS[args.kind]
    p = NormalParams(args.mu, args.sigma)
    q = MomentQuery(kind, args.nu)
    result = moments.moment(p, q, METHODS[args.method])
    _emit([_base_record(kind, q.nu, p, result)], args.pretty)
    return EXIT_OK


def cmd_check(args) -> int:
    kind = KINDS[args.kind]
    p = NormalParams(args.mu, args.sigma)
    q = MomentQuery(kind, args.nu)
    if args.samples and args.samples < 1000:
        raise DomainError("samples must be 0 or at least 1000")
    result = moments.moment(p, q)
    rec = _base_record(kind, q.nu, p, result)
    failures = []

    report = moments.consistency_report(p, q.nu, kind)
    path_dev = max((c.deviation for c in report), default=0.0)
    rec["paths"] = ",".join(c.path.value for c in report)
    rec["path_deviation"] = path_dev
    if path_dev > moments.PATH_RTOL * TOLERANCE_SCALE:
        failures.append(f"formula paths disagree by {path_dev:.3g}")

    scale = max(1.0, abs(result.value))
    try:
        est = quad_moment(p, q)
    except ToleranceNotMetError as exc:
        failures.append(f"quadrature: {exc}")
    else:
        dev = abs(result.value - est.value)
        rec.update(oracle_value_re=est.value.real, oracle_value_im=est.value.imag,
                   oracle_bound=est.abs_error_bound, oracle_deviation=dev / scale)
        if dev > (est.abs_error_bound + ORACLE_RTOL * scale) * TOLERANCE_SCALE:
            failures.append(f"quadrature oracle deviates by {dev:.3g}")

    if args.samples:
        mc = mc_moment(p, q, args.samples, args.seed)
        dev = abs(result.value - mc.value)
        rec.update(mc_value_re=mc.value.real, mc_value_im=mc.value.imag,
                   mc_bound=mc.abs_error_bound, mc_sigmas=dev / mc.abs_error_bound)
        if dev > MC_SIGMAS * mc.abs_error_bound * TOLERANCE_SCALE:
            failures.append(f"Monte Carlo estimate off by {dev / mc.abs_error_bound:.2f} SE")

    rec["status"] = "fail" if failures else "pass"
    _emit([rec], args.pretty)
    if failures:
        for msg in failures:
            print(f"check failed: {msg}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    return EXIT_OK


def table_records() -> list[dict]:
    p = NormalParams(0.0, 1.0)
    rows = []
    for nu in TABLE_ORDERS:
        c = moments.central_moment(p, nu).value
        a = moments.central_abs_moment(p, nu).value
        rows.append({"nu": nu, "central_re": c.real, "central_im": c.imag,
                     "central_abs": a.real})
    return rows


def cmd_table(args) -> int:
    _emit(table_records(), args.pretty)
    return EXIT_OK


_COMMANDS = {"compute": cmd_compute, "check": cmd_check, "table": cmd_table}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MomentsError, ArithmeticError) as exc:
        # series non-convergence or overflow inside an otherwise valid query
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED if args.command == "check" else EXIT_USAGE


def run():
    sys.exit(main())
