"""Shadows, up-shadows, and the quantitative lower bounds satisfied by
shadows of r-wise t-intersecting families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exactmath import binom
from .families import Family, elements_of, mask_of


def lower_shadow(fam: Family, b: int) -> Family:
    """All (k-b)-sets contained in some member, 1 <= b < k."""
    k = fam.uniform_k
    if k is None:
        raise ValueError("lower_shadow needs a uniform family")
    if not 1 <= b < k:
        raise ValueError("need 1 <= b < k")
    out = set()
    for m in fam.members:
        for keep in combinations(elements_of(m), k - b):
            out.add(mask_of(keep))
    return Family(fam.ground_n, tuple(out), k - b)


def upper_shadow(fam: Family) -> Family:
    """All (k+1)-supersets of members."""
    k = fam.uniform_k
    if k is None:
        raise ValueError("upper_shadow needs a uniform family")
    if k >= fam.ground_n:
        raise ValueError("upper_shadow needs k < n")
    out = set()
    for m in fam.members:
        for e in range(1, fam.ground_n + 1):
            if not (m >> (e - 1)) & 1:
                out.add(m | (1 << (e - 1)))
    return Family(fam.ground_n, tuple(out), k + 1)


def f91_bound(size: int, k: int, r: int, t: int, b: int) -> Fraction:
    """Lower bound on |b-th shadow| of an r-wise t-intersecting k-family:
    size * min over 0 <= i <= (k-t)/(r-1) of C(ri+t, i+b) / C(ri+t, i)."""
    if not 0 < b <= t:
        raise ValueError("need 0 < b <= t")
    if r < 2:
        raise ValueError("r must be >= 2")
    if k < t:
        raise ValueError("need k >= t")
    ratios = [
        Fraction(binom(r * i + t, i + b), binom(r * i + t, i))
        for i in range((k - t) // (r - 1) + 1)
    ]
    return size * min(ratios)


def kk_threshold_check(fam: Family, m: int) -> bool:
    """Threshold form of the shadow growth theorem on a concrete family:
    |F| > C(m, k) implies |shadow F| > C(m, k-1).  Vacuously true when the
    hypothesis fails."""
    k = fam.uniform_k
    if k is None or k < 2:
        raise ValueError("kk_threshold_check needs a uniform family with k >= 2")
    if not k <= m <= fam.ground_n:
        raise ValueError("need k <= m <= n")
    if len(fam) <= binom(m, k):
        return True
    return len(lower_shadow(fam, 1)) > binom(m, k - 1)


@dataclass(frozen=True)
class ShadowReport:
    input_size: int
    output_size: int
    bound: Fraction
    bound_satisfied: bool


def shadow_report(fam: Family, b: int, r: int, t: int) -> ShadowReport:
    """Compute the b-th shadow and compare against f91_bound."""
    shadow = lower_shadow(fam, b)
    bound = f91_bound(len(fam), fam.uniform_k, r, t, b)
    return ShadowReport(len(fam), len(shadow), bound, len(shadow) >= bound)
