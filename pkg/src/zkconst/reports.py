"""Verification report records.

A VerificationReport captures one identity check: both sides as decimal
strings that round-trip at the run's precision, the absolute error, the
tolerance it was judged against, and the route tags of the formulas that
produced each side.  The invariant `passed == (abs_err <= tol)` holds for
every constructor here; inequality checks encode their violation magnitude
as abs_err against a zero tolerance so the same invariant applies.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpf

from .precision import PrecisionContext, roundtrip_decimal


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    lhs: str
    rhs: str
    abs_err: str
    tol: str
    passed: bool
    method_tags: tuple

    def as_dict(self) -> dict:
        return {
            "identity": self.identity,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "abs_err": self.abs_err,
            "tol": self.tol,
            "pass": self.passed,
            "method_tags": list(self.method_tags),
        }


def default_tol(ctx: PrecisionContext, tol_exp: int | None = None):
    """10^-tol_exp, defaulting to tol_exp = digits - 5."""
    exp = ctx.digits - 5 if tol_exp is None else tol_exp
    with mp.workdps(ctx.working_dps + 10):
        return mpf(10) ** (-exp)


def equality_report(
    identity: str,
    lhs,
    rhs,
    tol,
    ctx: PrecisionContext,
    method_tags=(),
) -> VerificationReport:
    """|lhs - rhs| <= tol, with both sides recorded at run precision."""
    with mp.workdps(ctx.working_dps + 10):
        lhs_v, rhs_v, tol_v = mpf(lhs), mpf(rhs), mpf(tol)
        err = abs(lhs_v - rhs_v)
        passed = bool(err <= tol_v)
        lhs_s = roundtrip_decimal(lhs_v, ctx)
        rhs_s = roundtrip_decimal(rhs_v, ctx)
        err_s = mp.nstr(err, 8)
        tol_s = mp.nstr(tol_v, 8)
    return VerificationReport(
        identity=identity,
        lhs=lhs_s,
        rhs=rhs_s,
        abs_err=err_s,
        tol=tol_s,
        passed=passed,
        method_tags=tuple(method_tags),
    )


def exact_report(
    identity: str,
    equal: bool,
    witness_lhs,
    witness_rhs,
    ctx: PrecisionContext,
    method_tags=(),
) -> VerificationReport:
    """An exact (rational-arithmetic) check; witnesses are representative values."""
    with mp.workdps(ctx.working_dps + 10):
        lhs = mp.mpf(witness_lhs.numerator) / witness_lhs.denominator \
            if hasattr(witness_lhs, "numerator") and hasattr(witness_lhs, "denominator") \
            else mpf(witness_lhs)
        rhs = mp.mpf(witness_rhs.numerator) / witness_rhs.denominator \
            if hasattr(witness_rhs, "numerator") and hasattr(witness_rhs, "denominator") \
            else mpf(witness_rhs)
    return VerificationReport(
        identity=identity,
        lhs=roundtrip_decimal(lhs, ctx),
        rhs=roundtrip_decimal(rhs, ctx),
        abs_err="0.0" if equal else "1.0",
        tol="0.0",
        passed=bool(equal),
        method_tags=tuple(method_tags),
    )


def inequality_report(
    identity: str,
    lhs,
    rhs,
    ctx: PrecisionContext,
    method_tags=(),
) -> VerificationReport:
    """lhs >= rhs; abs_err is the violation magnitude max(0, rhs - lhs)."""
    with mp.workdps(ctx.working_dps + 10):
        lhs_v, rhs_v = mpf(lhs), mpf(rhs)
        violation = rhs_v - lhs_v
        if violation < 0:
            violation = mp.mpf(0)
        passed = bool(violation <= 0)
        lhs_s = roundtrip_decimal(lhs_v, ctx)
        rhs_s = roundtrip_decimal(rhs_v, ctx)
        err_s = mp.nstr(violation, 8)
    return VerificationReport(
        identity=identity,
        lhs=lhs_s,
        rhs=rhs_s,
        abs_err=err_s,
        tol="0.0",
        passed=passed,
        method_tags=tuple(method_tags),
    )


def all_passed(reports) -> bool:
    return all(r.passed for r in reports)
