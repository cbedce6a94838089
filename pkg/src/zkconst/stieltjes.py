"""Generalized Stieltjes constants gamma_n(u) from alternating binomial sums.

The computational core is the globally convergent double series

    gamma_n(u) = -1/(n+1) sum_{i>=0} 1/(i+1)
                 sum_{j=0}^{i} C(i,j) (-1)^j log^(n+1)(u+j)

with the convention log^0 1 = 1.  This is the canonical source of gamma =
gamma_0(1) and of every gamma_n used elsewhere in the package.

Direct summation at small u is useless: the outer terms decay only like
(log i)^n / (i^(u+1) log i), so at u = 1 no realistic cap reaches even ten
digits.  The inner alternating sums, however, decay like i^(-u), so the
series converges geometrically fast once u is large.  We therefore shift the
argument with the exact identity

    gamma_n(u) = log^n(u)/u + gamma_n(u+1)

(the Laurent-coefficient image of zeta(s,u) - zeta(s,u+1) = u^(-s), and for
n = 0 just the digamma recurrence) until the argument is comparable to the
number of working digits, then run the double series there.  The series
machinery itself is untouched: exact integer binomials, inner sums carried
with ~i extra bits at outer index i to absorb the 2^i cancellation, and a
consecutive-small-terms stopping rule with a hard cap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from mpmath import mp

from .precision import (
    MAX_DIGITS,
    BigReal,
    ConvergenceError,
    PrecisionContext,
    make_bigreal,
)

GAMMA_TAG = "hasse-2.8"

MAX_INDEX = 20  # supported gamma_n index at digits <= MAX_DIGITS

TABLE_KINDS = ("gamma", "eta", "sigma", "lambda", "xi1", "zeta0")
TABLE_START = {"gamma": 0, "eta": 0, "sigma": 1, "lambda": 1, "xi1": 1, "zeta0": 0}


@dataclass(frozen=True)
class TableEntry:
    n: int
    value: BigReal
    method: str


@dataclass(frozen=True)
class ConstantTable:
    """An indexed constant family with a method tag per entry.

    Indices are contiguous from the family's natural start (gamma and zeta0
    from 0, the others from 1) and every entry names the formula route that
    produced it.
    """

    kind: str
    entries: tuple
    digits: int

    def __post_init__(self):
        if self.kind not in TABLE_KINDS:
            raise ValueError(f"unknown table kind {self.kind!r}")
        start = TABLE_START[self.kind]
        for offset, entry in enumerate(self.entries):
            if entry.n != start + offset:
                raise ValueError(
                    f"{self.kind} table indices must be contiguous from {start}"
                )
            if not entry.method:
                raise ValueError("every table entry needs a method tag")

    @property
    def start(self) -> int:
        return TABLE_START[self.kind]

    @property
    def max_n(self) -> int:
        return self.start + len(self.entries) - 1

    def covers(self, n: int) -> bool:
        return self.start <= n <= self.max_n

    def value(self, n: int) -> BigReal:
        if not self.covers(n):
            raise ValueError(
                f"{self.kind} table covers {self.start}..{self.max_n}, not {n}"
            )
        return self.entries[n - self.start].value

    def mpf(self, n: int):
        return self.value(n).value

    def __iter__(self):
        return iter(self.entries)


def alternating_binomial_sum(values):
    """sum_j C(i,j) (-1)^j values[j] with i = len(values) - 1.

    Exact when the values are exact; this is the inner kernel of the double
    series, exposed so its normalization (the constant-1 case collapses to a
    Kronecker delta in i) can be checked directly.
    """
    total = 0
    for j, v in enumerate(values):
        c = math.comb(len(values) - 1, j)
        total = total + (c * v if j % 2 == 0 else -(c * v))
    return total


def _to_mpf(u):
    from fractions import Fraction

    if isinstance(u, Fraction):
        return mp.mpf(u.numerator) / u.denominator
    return mp.mpf(u)


def _log_power(x, n: int):
    """log^n x with the convention log^0 = 1 (in particular log^0 1 = 1)."""
    if n == 0:
        return mp.mpf(1)
    return mp.log(x) ** n


def _hasse_tail(n: int, big_u, ctx: PrecisionContext):
    """gamma_n(big_u) by the double series, assuming big_u is large enough
    that the outer terms fall below ctx.series_tol within the cap.

    Runs under the caller's precision; log powers and inner sums are carried
    with extra bits that grow with the outer index, since the inner sum at
    index i cancels from C(i, i/2) ~ 2^i down to about i^(-u).
    """
    tol = ctx.series_tol
    cap = 10 * (ctx.digits + ctx.guard_digits) * (n + 2)
    base_prec = mp.prec

    def log_powers(count, prec):
        with mp.workprec(prec):
            return [_log_power(big_u + j, n + 1) for j in range(count)]

    alloc = min(cap + 1, 192)
    data_prec = base_prec + alloc + 64
    powers = log_powers(alloc, data_prec)

    total = mp.mpf(0)
    small_run = 0
    row = [1]  # exact binomial row C(i, .)
    i = 0
    while True:
        if i >= alloc:
            alloc = min(cap + 1, alloc * 2)
            data_prec = base_prec + alloc + 64
            powers = log_powers(alloc, data_prec)
        with mp.workprec(data_prec):
            inner = mp.mpf(0)
            for j, c in enumerate(row):
                term = c * powers[j]
                inner = inner + term if j % 2 == 0 else inner - term
            outer_term = inner / (i + 1)
        total += outer_term
        if abs(outer_term) < tol:
            small_run += 1
            if small_run >= ctx.consecutive_small:
                return -total / (n + 1)
        else:
            small_run = 0
        i += 1
        if i > cap:
            raise ConvergenceError(
                f"gamma_{n}({mp.nstr(big_u, 8)}) did not converge within "
                f"{cap} outer terms",
                partial=-total / (n + 1),
                index=i,
            )
        row = [1] + [row[k] + row[k + 1] for k in range(len(row) - 1)] + [1]


def stieltjes_gamma(n: int, u, ctx: PrecisionContext) -> BigReal:
    """gamma_n(u) accurate to ctx.digits digits; gamma_n(1) = gamma_n.

    u accepts int, Fraction, mpf, or a decimal string; a Python float is
    taken at its exact binary value (pass a string for decimal semantics).
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError("stieltjes index must be an integer >= 0")
    if n > MAX_INDEX:
        raise ValueError(f"supported range is n <= {MAX_INDEX}")
    if ctx.digits > MAX_DIGITS:
        raise ValueError(f"supported range is digits <= {MAX_DIGITS}")
    # headroom: the shifted partial sum and the series value at the shifted
    # argument are both ~log^(n+1)(shift)/(n+1) and cancel to an O(1) result
    work_dps = ctx.working_dps + n + 15
    with mp.workdps(work_dps):
        u_mp = _to_mpf(u)
        if not (mp.isfinite(u_mp) and u_mp > 0):
            raise ValueError("u must be a finite real > 0")
        target = ctx.working_dps + 2
        shift = max(0, int(mp.ceil(target - u_mp)))
        direct = mp.mpf(0)
        for m in range(shift):
            x = u_mp + m
            direct += _log_power(x, n) / x
        tail = _hasse_tail(n, u_mp + shift, ctx)
        return make_bigreal(+(direct + tail), ctx)


def stieltjes_table(max_n: int, ctx: PrecisionContext, u=1) -> ConstantTable:
    """gamma_0(u) .. gamma_max_n(u) as a table (u defaults to 1)."""
    if not isinstance(max_n, int) or not 0 <= max_n <= MAX_INDEX:
        raise ValueError(f"need 0 <= max_n <= {MAX_INDEX}")
    entries = []
    for n in range(max_n + 1):
        try:
            value = stieltjes_gamma(n, u, ctx)
        except ConvergenceError as exc:
            raise ConvergenceError(
                f"gamma table failed at index {n}: {exc}",
                partial=exc.partial,
                index=n,
            ) from exc
        entries.append(TableEntry(n=n, value=value, method=GAMMA_TAG))
    return ConstantTable(kind="gamma", entries=tuple(entries), digits=ctx.digits)
