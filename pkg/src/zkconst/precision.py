"""Precision plumbing: contexts, arbitrary-precision value records, errors.

Every numeric operation in the package is a pure function of its arguments
plus a PrecisionContext.  The context fixes the number of decimal digits the
caller wants to trust, the extra guard digits carried internally, and the
truncation policy for infinite series.  Results are returned as BigReal
records so a value never travels without the precision it was computed at.
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpf

MIN_DIGITS = 10
MAX_DIGITS = 60
MIN_GUARD = 5
MIN_CONSECUTIVE_SMALL = 3


class ConvergenceError(ArithmeticError):
    """An infinite sum failed to meet its truncation criterion within the cap.

    Carries the last partial result and the index at which summation stopped,
    so a caller (or the CLI) can report where the series was abandoned.
    """

    def __init__(self, message: str, partial, index: int):
        super().__init__(message)
        self.partial = partial
        self.index = index


@dataclass(frozen=True)
class PrecisionContext:
    """Target accuracy plus working headroom for series evaluation.

    digits            decimal digits of target accuracy (>= 10)
    guard_digits      extra working digits (>= 5)
    consecutive_small consecutive below-threshold terms required before an
                      infinite sum may stop (>= 3); guards against series
                      whose terms do not decay monotonically
    """

    digits: int = 30
    guard_digits: int = 10
    consecutive_small: int = 4

    def __post_init__(self):
        if not isinstance(self.digits, int) or self.digits < MIN_DIGITS:
            raise ValueError(f"digits must be an integer >= {MIN_DIGITS}")
        if not isinstance(self.guard_digits, int) or self.guard_digits < MIN_GUARD:
            raise ValueError(f"guard_digits must be an integer >= {MIN_GUARD}")
        if (
            not isinstance(self.consecutive_small, int)
            or self.consecutive_small < MIN_CONSECUTIVE_SMALL
        ):
            raise ValueError(
                f"consecutive_small must be an integer >= {MIN_CONSECUTIVE_SMALL}"
            )

    @property
    def working_dps(self) -> int:
        """Decimal digits carried by default in intermediate arithmetic."""
        return self.digits + self.guard_digits

    @property
    def series_tol(self) -> mpf:
        """Truncation threshold 10^-(digits + guard_digits)."""
        with mp.workdps(self.working_dps + 10):
            return mpf(10) ** (-(self.digits + self.guard_digits))

    def escalated(self, extra_digits: int) -> "PrecisionContext":
        """Same policy with `extra_digits` more digits of target accuracy."""
        return PrecisionContext(
            digits=self.digits + extra_digits,
            guard_digits=self.guard_digits,
            consecutive_small=self.consecutive_small,
        )


@dataclass(frozen=True)
class BigReal:
    """An arbitrary-precision real together with its precision provenance.

    `value` is an mpmath mpf computed at (at least) `digits` decimal digits.
    Public operations never return non-finite values; an overflow or NaN in
    an intermediate surfaces as an error instead.
    """

    value: mpf
    digits: int

    def __post_init__(self):
        if not mp.isfinite(self.value):
            raise ValueError("BigReal requires a finite value")

    def __float__(self) -> float:
        return float(self.value)

    def decimal(self, digits: int | None = None) -> str:
        """Decimal-string form rounded to `digits` significant digits."""
        n = self.digits if digits is None else digits
        return mp.nstr(self.value, n, strip_zeros=False)

    def __repr__(self) -> str:
        return f"BigReal({self.decimal()}, digits={self.digits})"


def make_bigreal(value, ctx: PrecisionContext) -> BigReal:
    """Wrap an mpf computed under `ctx` into a BigReal tagged with ctx.digits."""
    return BigReal(value=value, digits=ctx.digits)


def roundtrip_decimal(value: mpf, ctx: PrecisionContext) -> str:
    """Decimal string with enough digits to round-trip at the run's precision.

    A binary float of p bits needs ceil(p log10 2) + 1 significant decimal
    digits to reparse exactly; working_dps + 5 covers the working precision
    of every operation in this package.
    """
    with mp.workdps(ctx.working_dps + 10):
        return mp.nstr(value, ctx.working_dps + 5, strip_zeros=False)
