"""Threshold formulas and exact sign scans: when does the full t-star beat
the leave-one-out family, and where does the conjectured r = 3 crossover sit.

All scan verdicts are exact integer comparisons; the irrational thresholds
(the (2.5t)^(1/(r-1)) style bounds and the radical crossover ratio) are
handled as certified rational intervals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .canonical import max_frankl_size, size_frankl
from .exactmath import (
    RealInterval,
    binom,
    nth_root_interval,
    resolve_ceil,
    resolve_floor,
)
from .search import DEFAULT_CAP, FeasibilityError, max_uniform


@dataclass(frozen=True)
class ScanRow:
    n: int
    a1: int
    star: int
    sign_a1: int          # sign of |A_1| - C(n-t, k-t)
    max_i_size: int
    sign_max: int         # sign of max_i |A_i| - C(n-t, k-t)


@dataclass
class ThresholdScan:
    k: int
    r: int
    t: int
    rows: list[ScanRow] = field(default_factory=list)
    certified: bool = True


def n0_upper_bound(k: int, r: int, t: int, tol=Fraction(1, 10**12)) -> RealInterval:
    """The proved upper bound on the least n from which the full t-star is
    optimal: (2.5 t)^(1/(r-1)) (k-t) + k for r in {3, 4}, and
    (2 t)^(1/(r-1)) (k-t) + k for r >= 5."""
    if r < 3:
        raise ValueError("the bound needs r >= 3")
    if k < t + r:
        raise ValueError("the bound needs k >= t + r")
    base = Fraction(5 * t, 2) if r in (3, 4) else Fraction(2 * t)
    inner = Fraction(tol) / (k - t + 1)
    root = nth_root_interval(base, r - 1, inner)
    return root * (k - t) + k


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def star_vs_a1_scan(k: int, r: int, t: int, n_range) -> ThresholdScan:
    """Exact per-n signs of |A_1| - C(n-t, k-t) and max_i |A_i| - C(n-t, k-t)."""
    scan = ThresholdScan(k=k, r=r, t=t)
    for n in n_range:
        if n < k or t + r > n:
            continue
        star = binom(n - t, k - t)
        a1 = size_frankl(n, k, r, t, 1)
        mx, _ = max_frankl_size(n, k, r, t)
        scan.rows.append(
            ScanRow(n, a1, star, _sign(a1 - star), mx, _sign(mx - star))
        )
    return scan


def crossover_ratio(t: int, tol=Fraction(1, 10**12)) -> RealInterval:
    """(sqrt(4t+9) - 1) / 2, the r = 3 crossover slope of n against k."""
    root = nth_root_interval(4 * t + 9, 2, 2 * Fraction(tol))
    return (root + (-1)) * Fraction(1, 2)


def crossover_n(k: int, t: int) -> int:
    """The least integer n at or above the crossover line, certified."""
    return resolve_ceil(lambda tol: crossover_ratio(t, tol) * k)


@dataclass
class FranklVsStarVerdict:
    max_size: int
    max_i: int
    star: int
    search_optimum: int | None
    conjecture_holds: bool | None   # None when the search was infeasible


def max_frankl_vs_star(
    n: int, k: int, r: int, t: int, cap: int = DEFAULT_CAP
) -> FranklVsStarVerdict:
    """Compare max_i |A_i| with the star and, when the search is feasible,
    with the true optimum."""
    mx, mi = max_frankl_size(n, k, r, t)
    star = binom(n - t, k - t)
    try:
        opt = max_uniform(n, k, r, t, cap=cap, enumerate_optima=False).optimum
    except FeasibilityError:
        return FranklVsStarVerdict(mx, mi, star, None, None)
    return FranklVsStarVerdict(mx, mi, star, opt, opt == mx)


def conjecture_scan(
    k: int, t: int, window: int = 3, cap: int = DEFAULT_CAP
) -> tuple[ThresholdScan, list[FranklVsStarVerdict | None]]:
    """Scan n around the r = 3 crossover ceil(ratio * k), comparing the star,
    max_i |A_i|, and (when feasible) the brute-force optimum."""
    center = crossover_n(k, t)
    lo = max(k, t + 3, center - window)
    ns = range(lo, center + window + 1)
    scan = star_vs_a1_scan(k, 3, t, ns)
    verdicts: list[FranklVsStarVerdict | None] = []
    for row in scan.rows:
        try:
            verdicts.append(max_frankl_vs_star(row.n, k, 3, t, cap=cap))
        except FeasibilityError:
            verdicts.append(None)
    return scan, verdicts


def lower_regime_a1_wins(k: int, r: int, t: int) -> bool:
    """At n = floor(((t+r)/2)^(1/(r-1)) (k-t-r+2)) + t+r-2, the leave-one-out
    family beats the star (the regime t >= 2^r - r)."""
    if t < 2**r - r:
        raise ValueError("the lower-bound regime needs t >= 2^r - r")
    base = Fraction(t + r, 2)
    n = (
        resolve_floor(
            lambda tol: nth_root_interval(base, r - 1, tol / (k - t - r + 3))
            * (k - t - r + 2)
        )
        + t
        + r
        - 2
    )
    return size_frankl(n, k, r, t, 1) > binom(n - t, k - t)
