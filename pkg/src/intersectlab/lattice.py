"""Monotone lattice paths of subsets and exact counts of paths hitting the
slanted boundary y = (r-1)x + t, all in integer arithmetic.

A subset F of [n] maps to the path taking an up-step at positions in F and a
right-step otherwise; the path touches the boundary iff some window prefix
[t+ri] of F carries at least t+(r-1)i elements.
"""

from __future__ import annotations

from fractions import Fraction

from .exactmath import binom


def path_of_set(m: int, n: int) -> str:
    """Step string of the path of F, 'U' at positions in F, 'R' otherwise."""
    if m < 0 or m >> n:
        raise ValueError(f"subset not within [{n}]")
    return "".join("U" if (m >> (e - 1)) & 1 else "R" for e in range(1, n + 1))


def set_of_path(path: str) -> tuple[int, int]:
    """Inverse of path_of_set: (mask, n)."""
    m = 0
    for pos, step in enumerate(path, start=1):
        if step == "U":
            m |= 1 << (pos - 1)
        elif step != "R":
            raise ValueError(f"bad step {step!r}")
    return m, len(path)


def hits_line(m: int, n: int, r: int, t: int) -> bool:
    """Window-prefix criterion for the path of F touching y = (r-1)x + t."""
    if r < 2 or t < 1:
        raise ValueError("need r >= 2, t >= 1")
    i = 0
    while t + r * i <= n:
        win = (1 << (t + r * i)) - 1
        if (m & win).bit_count() >= t + (r - 1) * i:
            return True
        i += 1
    return False


def hits_line_by_walk(m: int, n: int, r: int, t: int) -> bool:
    """Same predicate by walking the path; cross-check for hits_line."""
    x = y = 0
    if y == (r - 1) * x + t:
        return True
    for e in range(1, n + 1):
        if (m >> (e - 1)) & 1:
            y += 1
        else:
            x += 1
        if y == (r - 1) * x + t:
            return True
    return False


def count_touching_from(
    x0: int, y0: int, x1: int, y1: int, slope: int, intercept: int
) -> int:
    """Monotone paths from (x0, y0) to (x1, y1) touching y = slope*x +
    intercept at some lattice point (endpoints included).

    Counted as total minus never-touching, where never-touching paths come
    from a step DP with the line states absorbed.
    """
    if x1 < x0 or y1 < y0:
        raise ValueError("end point must dominate start point")
    steps = (x1 - x0) + (y1 - y0)
    total = binom(steps, y1 - y0)

    def on_line(x, y):
        return y == slope * x + intercept

    if on_line(x0, y0):
        return total
    # alive[y - y0] = paths reaching the current step's point at height y
    # without touching the line
    alive = [0] * (y1 - y0 + 1)
    alive[0] = 1
    for s in range(1, steps + 1):
        nxt = [0] * (y1 - y0 + 1)
        dy_lo = max(0, s - (x1 - x0))
        dy_hi = min(y1 - y0, s)
        for dy in range(dy_lo, dy_hi + 1):
            x, y = x0 + (s - dy), y0 + dy
            if on_line(x, y):
                continue
            acc = alive[dy]  # right-step
            if dy > 0:
                acc += alive[dy - 1]  # up-step
            nxt[dy] = acc
        alive = nxt
    return total - alive[y1 - y0]


def count_hitting_paths(n: int, k: int, r: int, t: int) -> int:
    """Exact number of paths from (0,0) to (n-k, k) touching y = (r-1)x + t;
    equals the number of k-subsets of [n] whose path hits."""
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if r < 2 or t < 1:
        raise ValueError("need r >= 2, t >= 1")
    return count_touching_from(0, 0, n - k, k, r - 1, t)


def g_uniform(n: int, i: int, r: int, t: int) -> Fraction:
    """Probability that a uniformly random path to (n-i, i) hits the line."""
    if not 0 <= i <= n:
        raise ValueError("need 0 <= i <= n")
    return Fraction(count_hitting_paths(n, i, r, t), binom(n, i))


def first_hit_counts(r: int, t: int, i_max: int) -> list[int]:
    """ell(t, i) for i = 0..i_max: paths from the origin to (i, (r-1)i + t)
    whose only line contact is the endpoint.  The last step is forced up, so
    this is the never-touching count into the point just below."""
    if r < 2 or t < 1:
        raise ValueError("need r >= 2, t >= 1")
    out = []
    for i in range(i_max + 1):
        top = (r - 1) * i + t
        never = (
            binom(i + top - 1, top - 1)
            - count_touching_from(0, 0, i, top - 1, r - 1, t)
        )
        out.append(never)
    return out


def reflection_count(n: int, k: int, r: int, t: int, i: int) -> int:
    """Closed form C(n-t, k-t-(r-1)i) for the paths from (i, t-i) to
    (n-k, k) touching y = x + (r-2)i + t.

    The slope-1 reflection argument needs r >= 3, and the endpoint must not
    lie above the auxiliary line (n >= 2k - t - (r-2)i; implied by the
    n >= 2k - t regime the bound is used in), otherwise not every reflected
    path corresponds to a touching one.
    """
    if r < 3:
        raise ValueError("reflection_count needs r >= 3")
    if not 0 <= i <= t:
        raise ValueError("need 0 <= i <= t")
    if n + t + (r - 2) * i < 2 * k:
        raise ValueError("endpoint above the reflection line: need n >= 2k-t-(r-2)i")
    return binom(n - t, k - t - (r - 1) * i)


def bound_key0(n: int, k: int, r: int, t: int) -> int:
    """Upper bound sum_{0<=i<=t} C(t,i) C(n-t, k-t-(r-1)i) on the size of an
    r-wise t-intersecting k-family, valid for r >= 3 and n >= 2k - t."""
    if r < 3:
        raise ValueError("bound needs r >= 3")
    if t < 1:
        raise ValueError("t must be >= 1")
    if n < 2 * k - t:
        raise ValueError("bound needs n >= 2k - t")
    return sum(binom(t, i) * binom(n - t, k - t - (r - 1) * i) for i in range(t + 1))


def bound_key1(n: int, k: int, r: int, t: int) -> int:
    """The i >= 1 tail of bound_key0 (bounds the non-star hit classes)."""
    if r < 3:
        raise ValueError("bound needs r >= 3")
    if t < 1:
        raise ValueError("t must be >= 1")
    if n < 2 * k - t:
        raise ValueError("bound needs n >= 2k - t")
    return sum(
        binom(t, i) * binom(n - t, k - t - (r - 1) * i) for i in range(1, t + 1)
    )


def bound_key2(n: int, k: int, r: int, t: int) -> int:
    """bound_key0 minus C(n-t-1, k-t): the sharpening for non-star families."""
    return bound_key0(n, k, r, t) - binom(n - t - 1, k - t)
