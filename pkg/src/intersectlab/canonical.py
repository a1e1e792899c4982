"""The named extremal constructions and their exact cardinalities.

`build_frankl` gives the family of k-sets leaving out at most i elements of
the window [t+ri]; i = 0 is the full t-star.  `build_hmf` gives the
Hilton-Milner style non-trivial construction with the k+1 complement sets.
Closed-form sizes are evaluated without any ground-set cap.
"""

from __future__ import annotations

from .exactmath import binom
from .families import Family, GROUND_CAP, all_k_subsets, mask_of

NONUNIFORM_CAP = 20


def _validate_window(n: int, r: int, t: int, i: int) -> None:
    if r < 2:
        raise ValueError("r must be >= 2")
    if t < 1:
        raise ValueError("t must be >= 1")
    if i < 0:
        raise ValueError("i must be >= 0")
    if t + r * i > n:
        raise ValueError(f"window [t+ri] = [{t + r * i}] exceeds the ground set [{n}]")


def build_full_star(n: int, k: int, t: int) -> Family:
    """All k-sets of [n] containing the fixed t-set [t]."""
    if not 1 <= t <= k <= n:
        raise ValueError("need 1 <= t <= k <= n")
    if n > GROUND_CAP:
        raise ValueError(f"explicit construction capped at n <= {GROUND_CAP}")
    core = mask_of(range(1, t + 1))
    members = [m for m in all_k_subsets(n, k) if m & core == core]
    return Family(n, tuple(members), k)


def build_frankl(n: int, k: int, r: int, t: int, i: int) -> Family:
    """The k-sets A of [n] with |A cap [t+ri]| >= t+(r-1)i.

    Any i >= 0 with t+ri <= n is accepted; the result may be empty when k is
    too small for the window (reported as such, never guessed away).
    """
    _validate_window(n, r, t, i)
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    if n > GROUND_CAP:
        raise ValueError(f"explicit construction capped at n <= {GROUND_CAP}")
    window = mask_of(range(1, t + r * i + 1))
    need = t + (r - 1) * i
    members = [m for m in all_k_subsets(n, k) if (m & window).bit_count() >= need]
    return Family(n, tuple(members), k)


def build_frankl_nonuniform(n: int, r: int, t: int, i: int) -> Family:
    """The subsets A of [n] (any size) with |A cap [t+ri]| >= t+(r-1)i."""
    _validate_window(n, r, t, i)
    if n > NONUNIFORM_CAP:
        raise ValueError(f"non-uniform construction capped at n <= {NONUNIFORM_CAP}")
    window = mask_of(range(1, t + r * i + 1))
    need = t + (r - 1) * i
    members = [m for m in range(1 << n) if (m & window).bit_count() >= need]
    return Family(n, tuple(members), None)


def size_frankl(n: int, k: int, r: int, t: int, i: int) -> int:
    """|build_frankl(n,k,r,t,i)| by closed form: choose the j <= i left-out
    window elements, then fill up outside the window."""
    _validate_window(n, r, t, i)
    w = t + r * i
    return sum(binom(w, j) * binom(n - w, k - w + j) for j in range(i + 1))


def size_frankl_nonuniform(n: int, r: int, t: int, i: int) -> int:
    _validate_window(n, r, t, i)
    w = t + r * i
    return sum(binom(w, j) for j in range(i + 1)) * 2 ** (n - w)


def max_frankl_size(n: int, k: int, r: int, t: int) -> tuple[int, int]:
    """(max over i of size_frankl, the least maximizing i)."""
    best, best_i = 0, 0
    i = 0
    while t + r * i <= n:
        s = size_frankl(n, k, r, t, i)
        if s > best:
            best, best_i = s, i
        if t + (r - 1) * i > k:
            break  # window requirement already exceeds k; later i are empty
        i += 1
    return best, best_i


def build_hmf(n: int, k: int, r: int, t: int) -> Family:
    """The non-trivial family: k-sets containing [t+r-2] that meet
    [t+r-1, k+1], together with the k+1 complements [k+1] - {j}, j <= t+r-2."""
    if r < 2 or t < 1:
        raise ValueError("need r >= 2 and t >= 1")
    if k < t + r - 1:
        raise ValueError("need k >= t+r-1 for a usable window [t+r-1, k+1]")
    if n < k + 1:
        raise ValueError("need n >= k+1")
    if n > GROUND_CAP:
        raise ValueError(f"explicit construction capped at n <= {GROUND_CAP}")
    head = mask_of(range(1, t + r - 1))
    window = mask_of(range(t + r - 1, k + 2))
    members = [
        m for m in all_k_subsets(n, k) if m & head == head and m & window
    ]
    kp1 = mask_of(range(1, k + 2))
    for j in range(1, t + r - 1):
        members.append(kp1 & ~(1 << (j - 1)))
    return Family(n, tuple(members), k)
