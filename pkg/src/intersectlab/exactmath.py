"""Exact arithmetic underneath everything else.

Counts are plain Python ints (arbitrary precision already), probabilities are
``fractions.Fraction``, and every irrational constant lives in a
``RealInterval`` whose endpoints are exact rationals.  Sign decisions near a
crossover are made by refining intervals, never by floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

# Refusing to decide below this interval width is an error, not a guess.
REFINE_CAP = Fraction(1, 10**30)

_DEFAULT_TOL = Fraction(1, 10**12)


class UndecidableComparison(Exception):
    """An interval comparison that stayed ambiguous at the refinement cap."""


def binom(n: int, k: int) -> int:
    """C(n, k) with the summation convention: 0 whenever k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binom: n must be >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def fraction_to_decimal(x: Fraction, digits: int = 12) -> str:
    """Decimal rendering of an exact rational, rounded to `digits` places."""
    x = Fraction(x)
    sign = "-" if x < 0 else ""
    x = abs(x)
    scaled = x.numerator * 10**digits
    q, rem = divmod(scaled, x.denominator)
    if 2 * rem >= x.denominator:
        q += 1
    whole, frac = divmod(q, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{str(frac).zfill(digits)}"


def parse_fraction(text) -> Fraction:
    """Accepts '1/2', '0.5', '1e-12', ints and Fractions."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    return Fraction(str(text).strip())


@dataclass(frozen=True)
class RealInterval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: {self.lo} > {self.hi}")

    @classmethod
    def point(cls, x) -> "RealInterval":
        x = Fraction(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lo <= x <= self.hi

    def __add__(self, other):
        if isinstance(other, RealInterval):
            return RealInterval(self.lo + other.lo, self.hi + other.hi)
        other = Fraction(other)
        return RealInterval(self.lo + other, self.hi + other)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, RealInterval):
            prods = (
                self.lo * other.lo,
                self.lo * other.hi,
                self.hi * other.lo,
                self.hi * other.hi,
            )
            return RealInterval(min(prods), max(prods))
        other = Fraction(other)
        if other >= 0:
            return RealInterval(self.lo * other, self.hi * other)
        return RealInterval(self.hi * other, self.lo * other)

    __rmul__ = __mul__

    def power(self, e: int) -> "RealInterval":
        """Interval of x**e for nonnegative intervals (e >= 0)."""
        if e < 0 or self.lo < 0:
            raise ValueError("power: need e >= 0 and lo >= 0")
        return RealInterval(self.lo**e, self.hi**e)

    # Certified comparisons against exact rationals (or intervals): True only
    # when every point of the interval satisfies the relation.
    def surely_lt(self, x) -> bool:
        if isinstance(x, RealInterval):
            return self.hi < x.lo
        return self.hi < Fraction(x)

    def surely_le(self, x) -> bool:
        if isinstance(x, RealInterval):
            return self.hi <= x.lo
        return self.hi <= Fraction(x)

    def surely_gt(self, x) -> bool:
        if isinstance(x, RealInterval):
            return self.lo > x.hi
        return self.lo > Fraction(x)

    def surely_ge(self, x) -> bool:
        if isinstance(x, RealInterval):
            return self.lo >= x.hi
        return self.lo >= Fraction(x)

    def decimal(self, digits: int = 12) -> str:
        return fraction_to_decimal(self.midpoint, digits)


def _int_nth_root(a: int, d: int):
    """Exact integer d-th root of a >= 0, or None if a is not a d-th power."""
    if a < 0:
        raise ValueError("negative radicand")
    if a in (0, 1) or d == 1:
        return a
    hi = 1 << (a.bit_length() // d + 1)
    lo = 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**d <= a:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo**d == a else None


def nth_root_interval(x, d: int, tol=_DEFAULT_TOL) -> RealInterval:
    """Bracket x**(1/d) by bisection with exact rational endpoints.

    Guarantees lo**d <= x <= hi**d and hi - lo <= tol.  Perfect d-th powers of
    rationals come back as degenerate (exact) intervals.
    """
    x = Fraction(x)
    tol = Fraction(tol)
    if x < 0:
        raise ValueError("nth_root_interval: x must be >= 0")
    if d < 1:
        raise ValueError("nth_root_interval: d must be >= 1")
    if tol <= 0:
        raise ValueError("nth_root_interval: tol must be > 0")
    rn = _int_nth_root(x.numerator, d)
    rd = _int_nth_root(x.denominator, d)
    if rn is not None and rd is not None:
        return RealInterval.point(Fraction(rn, rd))
    lo = Fraction(0)
    hi = max(x, Fraction(1))
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if mid**d <= x:
            lo = mid
        else:
            hi = mid
    return RealInterval(lo, hi)


def exp_neg_interval(q, tol=_DEFAULT_TOL) -> RealInterval:
    """Bracket e**(-q) for rational q >= 0 by alternating partial sums."""
    q = Fraction(q)
    tol = Fraction(tol)
    if q < 0:
        raise ValueError("exp_neg_interval: q must be >= 0")
    if tol <= 0:
        raise ValueError("exp_neg_interval: tol must be > 0")
    if q == 0:
        return RealInterval.point(1)
    # Partial sums of sum (-q)^j / j! bracket the limit once terms decrease.
    term = Fraction(1)
    s = Fraction(1)
    j = 0
    prev = s
    while True:
        j += 1
        term = term * (-q) / j
        prev, s = s, s + term
        if j > q and abs(term) <= tol / 2:
            lo, hi = (s, prev) if s <= prev else (prev, s)
            return RealInterval(max(lo, Fraction(0)), hi)


def _shrink(tol: Fraction) -> Fraction:
    return tol * tol if tol < 1 else tol / 10**9


def decide_lt(make_interval, bound, cap=REFINE_CAP) -> bool:
    """Certified `value < bound`, where make_interval(tol) brackets the value.

    Refines until the sign is decided or the cap is reached.
    """
    bound = Fraction(bound)
    tol = Fraction(1, 10**9)
    while True:
        iv = make_interval(tol)
        if iv.hi < bound:
            return True
        if iv.lo >= bound:
            return False
        if tol <= cap:
            raise UndecidableComparison(f"[{iv.lo}, {iv.hi}] vs {bound}")
        tol = _shrink(tol)


def resolve_floor(make_interval, cap=REFINE_CAP) -> int:
    """Certified floor of the bracketed value."""
    tol = Fraction(1, 10**9)
    while True:
        iv = make_interval(tol)
        flo, fhi = math.floor(iv.lo), math.floor(iv.hi)
        if flo == fhi:
            return flo
        if iv.lo == iv.hi:
            return flo
        if tol <= cap:
            raise UndecidableComparison(f"floor of [{iv.lo}, {iv.hi}]")
        tol = _shrink(tol)


def resolve_ceil(make_interval, cap=REFINE_CAP) -> int:
    tol = Fraction(1, 10**9)
    while True:
        iv = make_interval(tol)
        clo, chi = math.ceil(iv.lo), math.ceil(iv.hi)
        if clo == chi:
            return clo
        if tol <= cap:
            raise UndecidableComparison(f"ceil of [{iv.lo}, {iv.hi}]")
        tol = _shrink(tol)
