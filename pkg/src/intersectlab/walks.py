"""Hitting probabilities of biased walks against the boundary y = (r-1)x + t,
their limiting fixed points, and the tail bound used alongside them.

f_finite is the exact finite-horizon probability via the one-step recursion
(up lowers the remaining offset by 1, right raises it by r-1).  The infinite
walk hits with probability gamma**t, gamma the root of x = p + (1-p) x**r in
(0,1); gamma exists iff p < (r-1)/r, otherwise the walk hits almost surely.
"""

from __future__ import annotations

import functools
import sys
from fractions import Fraction

from .exactmath import RealInterval, binom, exp_neg_interval

_DEFAULT_TOL = Fraction(1, 10**15)


@functools.cache
def _f(n: int, r: int, t: int, p: Fraction) -> Fraction:
    if t <= 0:
        return Fraction(1)
    if n == 0:
        return Fraction(0)
    return p * _f(n - 1, r, t - 1, p) + (1 - p) * _f(n - 1, r, t + r - 1, p)


def f_finite(n: int, r: int, t: int, p) -> Fraction:
    """Exact probability that a length-n p-walk hits y = (r-1)x + t.

    t <= 0 means already absorbed (probability 1); an unreachable offset at
    horizon 0 gives 0.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if r < 2:
        raise ValueError("r must be >= 2")
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError("p must be in [0, 1]")
    if sys.getrecursionlimit() < 4 * n + 100:
        sys.setrecursionlimit(4 * n + 100)
    return _f(n, r, t, p)


def gamma_root(r: int, p, tol=_DEFAULT_TOL) -> RealInterval:
    """Bracket the fixed point gamma of x = p + (1-p) x**r in (0, 1).

    For p >= (r-1)/r there is no interior root (the map is tangent at 1 or
    steeper) and the hitting probability is 1; the degenerate interval [1, 1]
    is returned.
    """
    if r < 2:
        raise ValueError("r must be >= 2")
    p = Fraction(p)
    tol = Fraction(tol)
    if not 0 < p < 1:
        raise ValueError("gamma_root needs 0 < p < 1")
    if tol <= 0:
        raise ValueError("tol must be > 0")
    if p >= Fraction(r - 1, r):
        return RealInterval.point(1)

    def h(x: Fraction) -> Fraction:
        return p + (1 - p) * x**r - x

    # h > 0 on (0, gamma), h < 0 on (gamma, 1)
    lo, hi = Fraction(0), Fraction(1)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        v = h(mid)
        if v > 0:
            lo = mid
        elif v < 0:
            hi = mid
        else:
            return RealInterval.point(mid)
    return RealInterval(lo, hi)


def f_limit(r: int, t: int, p, tol=_DEFAULT_TOL) -> RealInterval:
    """gamma**t: the infinite-walk hitting probability."""
    if t < 0:
        raise ValueError("t must be >= 0")
    tol = Fraction(tol)
    inner = tol / (t + 1)
    return gamma_root(r, p, inner).power(t)


def alpha(r: int, tol=_DEFAULT_TOL) -> RealInterval:
    """The symmetric-walk fixed point: root of x = 1/2 + x**r / 2, r >= 3."""
    if r < 3:
        raise ValueError("alpha is defined for r >= 3")
    return gamma_root(r, Fraction(1, 2), tol)


def alpha_power(r: int, e: int, tol=_DEFAULT_TOL) -> RealInterval:
    """alpha_r**e with the final interval width at most tol."""
    if e < 0:
        raise ValueError("e must be >= 0")
    return alpha(r, Fraction(tol) / (e + 1)).power(e)


def prob_bound_alpha(n: int, k: int, r: int, t: int, tol=_DEFAULT_TOL) -> RealInterval:
    """The certified upper bound alpha_r**t * C(n, k) on the size of any
    r-wise t-intersecting k-family, valid for n >= 2k."""
    if n < 2 * k:
        raise ValueError("bound needs n >= 2k")
    if t < 0:
        raise ValueError("t must be >= 0")
    total = binom(n, k)
    inner = Fraction(tol) / (total + 1)
    return alpha_power(r, t, inner) * total


def chernoff_lower_tail(lam, a, tol=_DEFAULT_TOL) -> RealInterval:
    """Bracket exp(-a**2 / (2 lambda)), the lower-tail bound for a binomial
    with mean lambda."""
    lam = Fraction(lam)
    a = Fraction(a)
    if lam <= 0:
        raise ValueError("lambda must be > 0")
    if a < 0:
        raise ValueError("a must be >= 0")
    return exp_neg_interval(a * a / (2 * lam), tol)


__all__ = [
    "f_finite",
    "gamma_root",
    "f_limit",
    "alpha",
    "alpha_power",
    "prob_bound_alpha",
    "chernoff_lower_tail",
]
