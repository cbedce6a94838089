"""Command-line surface: constant tables, identity suites, Li positivity.

    zkconst table --seq <gamma|eta|sigma|lambda|xi1|zeta0> --max-n <N>
                  [--digits <D>] [--u <U>] [--format <text|csv|json>]
    zkconst verify --suite <all|bell|stieltjes|eta|lambda|xi|zeta-derivs>
                  [--digits <D>] [--tol-exp <T>] [--format <text|json>]
    zkconst li-check --max-n <N> [--digits <D>] [--format <text|json>]

Exit codes: 0 success, 1 verification failure, 2 usage or cap error,
3 convergence failure.  Numeric values are emitted as decimal strings, never
binary floats, and identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys

from mpmath import mp

from . import eta_sigma, li_keiper, xi, zeta_derivs
from .precision import ConvergenceError, PrecisionContext
from .reports import all_passed
from .stieltjes import ConstantTable, stieltjes_table
from .verify import SUITES, run_suite

DEFAULT_DIGITS = 30
DEFAULT_GUARD = 10
DEFAULT_CONSECUTIVE_SMALL = 4

TABLE_CAPS = {"gamma": 20, "eta": 20, "sigma": 20, "lambda": 20, "xi1": 12, "zeta0": 10}

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CONVERGENCE = 3


def _context(digits: int) -> PrecisionContext:
    if not 10 <= digits <= 60:
        raise ValueError("digits must lie in [10, 60]")
    return PrecisionContext(
        digits=digits,
        guard_digits=DEFAULT_GUARD,
        consecutive_small=DEFAULT_CONSECUTIVE_SMALL,
    )


def _parse_u(raw: str, ctx: PrecisionContext):
    with mp.workdps(ctx.working_dps + 10):
        try:
            u = mp.mpf(raw)
        except (ValueError, TypeError) as exc:
            raise ValueError(f"cannot parse --u value {raw!r}") from exc
        if not (mp.isfinite(u) and u > 0):
            raise ValueError("--u must be a finite real > 0")
        return u


def build_table(seq: str, max_n: int, ctx: PrecisionContext, u=None) -> ConstantTable:
    """Assemble the requested constant family up to max_n."""
    if seq not in TABLE_CAPS:
        raise ValueError(f"unknown sequence {seq!r}")
    if u is not None and seq != "gamma":
        raise ValueError("--u is only meaningful with --seq gamma")
    start = 0 if seq in ("gamma", "eta", "zeta0") else 1
    if not start <= max_n <= TABLE_CAPS[seq]:
        raise ValueError(
            f"--max-n for {seq} must lie in [{start}, {TABLE_CAPS[seq]}]"
        )
    if seq == "gamma":
        return stieltjes_table(max_n, ctx, u=u if u is not None else 1)
    if seq == "eta":
        gammas = stieltjes_table(max_n, ctx)
        return eta_sigma.eta_from_gamma(max_n, gammas, ctx)
    gammas = stieltjes_table(max(0, max_n - 1), ctx)
    etas = eta_sigma.eta_from_gamma(max(0, max_n - 1), gammas, ctx)
    if seq == "sigma":
        return eta_sigma.sigma_table(max_n, etas, ctx)
    if seq == "lambda":
        sigmas = eta_sigma.sigma_table(max_n, etas, ctx)
        return li_keiper.lambda_table(max_n, sigmas, ctx)
    if seq == "xi1":
        sigmas = eta_sigma.sigma_table(max_n, etas, ctx)
        return xi.xi_table(max_n, sigmas, ctx)
    # zeta0: triangular inversion from the gamma table
    return zeta_derivs.zeta_derivs_at_zero(max_n, "apostol", ctx, gammas=gammas)


def _emit_table(table: ConstantTable, seq: str, fmt: str, out) -> None:
    rows = [
        {"n": e.n, "value": e.value.decimal(table.digits), "method": e.method}
        for e in table
    ]
    if fmt == "json":
        payload = {"seq": seq, "digits": table.digits, "rows": rows}
        out.write(json.dumps(payload, indent=2))
        out.write("\n")
    elif fmt == "csv":
        out.write("n,value,method\n")
        for row in rows:
            out.write(f"{row['n']},{row['value']},{row['method']}\n")
    else:
        width = max(len(r["value"]) for r in rows)
        for row in rows:
            out.write(f"{row['n']:>4}  {row['value']:<{width}}  {row['method']}\n")


def _emit_reports(reports, head_key: str, head_val: str, digits: int, fmt: str, out):
    if fmt == "json":
        payload = {
            head_key: head_val,
            "digits": digits,
            "reports": [r.as_dict() for r in reports],
        }
        out.write(json.dumps(payload, indent=2))
        out.write("\n")
        return
    npass = sum(1 for r in reports if r.passed)
    for r in reports:
        verdict = "pass" if r.passed else "FAIL"
        out.write(
            f"{verdict}  {r.identity}  lhs={r.lhs}  rhs={r.rhs}  "
            f"abs_err={r.abs_err}  tol={r.tol}  [{' | '.join(r.method_tags)}]\n"
        )
    out.write(f"{head_key}={head_val} digits={digits} passed={npass}/{len(reports)}\n")


def _cmd_table(args, out) -> int:
    ctx = _context(args.digits)
    u = _parse_u(args.u, ctx) if args.u is not None else None
    table = build_table(args.seq, args.max_n, ctx, u=u)
    _emit_table(table, args.seq, args.format, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    ctx = _context(args.digits)
    tol_exp = args.tol_exp if args.tol_exp is not None else ctx.digits - 5
    reports = run_suite(args.suite, ctx, tol_exp)
    _emit_reports(reports, "suite", args.suite, ctx.digits, args.format, out)
    return EXIT_OK if all_passed(reports) else EXIT_VERIFY_FAILED


def _cmd_li_check(args, out) -> int:
    ctx = _context(args.digits)
    if not 1 <= args.max_n <= 20:
        raise ValueError("--max-n for li-check must lie in [1, 20]")
    reports = li_keiper.positivity_report(args.max_n, ctx)
    _emit_reports(reports, "suite", "li-check", ctx.digits, args.format, out)
    return EXIT_OK if all_passed(reports) else EXIT_VERIFY_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zkconst",
        description=(
            "High-precision Stieltjes, eta, sigma, Li/Keiper, xi- and "
            "zeta-derivative constants with multi-route verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="emit one constant family")
    p_table.add_argument(
        "--seq", required=True,
        choices=["gamma", "eta", "sigma", "lambda", "xi1", "zeta0"],
    )
    p_table.add_argument("--max-n", required=True, type=int, dest="max_n")
    p_table.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p_table.add_argument("--u", default=None)
    p_table.add_argument(
        "--format", choices=["text", "csv", "json"], default="text"
    )
    p_table.set_defaults(func=_cmd_table)

    p_verify = sub.add_parser("verify", help="run an identity suite")
    p_verify.add_argument("--suite", required=True, choices=list(SUITES))
    p_verify.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p_verify.add_argument("--tol-exp", type=int, default=None, dest="tol_exp")
    p_verify.add_argument("--format", choices=["text", "json"], default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_li = sub.add_parser("li-check", help="desk-scale Li positivity check")
    p_li.add_argument("--max-n", required=True, type=int, dest="max_n")
    p_li.add_argument("--digits", type=int, default=DEFAULT_DIGITS)
    p_li.add_argument("--format", choices=["text", "json"], default="text")
    p_li.set_defaults(func=_cmd_li_check)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, sys.stdout)
    except ConvergenceError as exc:
        print(f"convergence failure at index {exc.index}: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
