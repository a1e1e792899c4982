"""Named verification suites: each runs an exact desk-scale check of one of
the headline statements and returns (ok, detail).  The CLI `verify`
subcommand and the acceptance tests both drive these.

Every comparison is exact (integers, rationals) or certified (interval
endpoints); nothing is checked in floating point.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .canonical import size_frankl
from .exactmath import binom
from .families import Family, all_k_subsets, is_rwise_t_intersecting
from .lattice import count_hitting_paths, g_uniform, hits_line
from .search import max_nonuniform, max_uniform, verify_recursion
from .shadows import f91_bound, lower_shadow
from .shifting import (
    is_shifted,
    rwise_by_witness,
    shift_step,
    shift_to_fixpoint,
)
from .thresholds import crossover_n
from .walks import alpha_power, f_finite, gamma_root


def check_star_optimality_3w2():
    """For 2 <= k <= 5 and 2k < n <= 10 the optimum of the (3,2) problem is
    C(n-2,k-2) and every optimum is the full 2-star."""
    fails = []
    points = 0
    for k in range(2, 6):
        for n in range(2 * k + 1, 11):
            rep = max_uniform(n, k, 3, 2)
            points += 1
            want = binom(n - 2, k - 2)
            if rep.optimum != want:
                fails.append(f"m({n},{k},3,2)={rep.optimum}, want {want}")
            elif rep.all_optima_are_t_stars is not True:
                fails.append(f"({n},{k}): star flag {rep.all_optima_are_t_stars}")
            elif rep.optima_count != binom(n, 2):
                # all optima are 2-stars of full-star size, so they must be
                # exactly the C(n,2) full 2-stars
                fails.append(f"({n},{k}): {rep.optima_count} optima != C(n,2)")
    return not fails, f"{points} (n,k) points" + ("; " + "; ".join(fails) if fails else "")


def check_size_at_t1():
    """m(n,k,r,1) equals C(n-1,k-1) for n >= rk/(r-1) and C(n,k) below it."""
    fails = []
    points = 0
    for r in (2, 3, 4):
        for k in range(1, 5):
            for n in range(max(4, k), 11):
                rep = max_uniform(n, k, r, 1, enumerate_optima=False)
                want = binom(n - 1, k - 1) if (r - 1) * n >= r * k else binom(n, k)
                points += 1
                if rep.optimum != want:
                    fails.append(f"m({n},{k},{r},1)={rep.optimum}, want {want}")
    return not fails, f"{points} grid points" + ("; " + "; ".join(fails) if fails else "")


def _interval_chain_checks():
    """The closed-form inequality chains behind the two minimum-scale
    (r,t) = (4,3) and (4,4) case analyses, as certified comparisons."""
    fails = []
    tol = Fraction(1, 10**25)

    def lt(iv, bound, label):
        if not iv.surely_lt(bound):
            fails.append(label)

    # (4,3) case A: 3 a3^3 < 1; case B: a3^5 < 0.0902 and the k-ratio step
    lt(3 * alpha_power(3, 3, tol), 1, "3*a3^3 < 1")
    lt(alpha_power(3, 5, tol), Fraction(902, 10000), "a3^5 < 0.0902")
    for k in range(7, 25):
        if 5 * (2 * k - 1) > 13 * (k - 2):
            fails.append(f"(2k-1)/(k-2) <= 13/5 at k={k}")
        if Fraction(902, 10000) * 4 * Fraction(2 * k - 1, k - 2) >= 1:
            fails.append(f"0.0902*4*(2k-1)/(k-2) < 1 at k={k}")
        # ratio identity C(2k-3,k-3)/C(2k,k) = (k-2)/(4(2k-1))
        if binom(2 * k - 3, k - 3) * 4 * (2 * k - 1) != binom(2 * k, k) * (k - 2):
            fails.append(f"ratio identity at k={k}")
        n = 2 * k
        if binom(n - 4, k - 4) + binom(n - 4, k - 3) != binom(n - 3, k - 3):
            fails.append(f"pascal (4,3) at k={k}")

    # (4,4) case A: 4 a4^4 < 4/11 < 1
    a4_4 = alpha_power(4, 4, tol)
    if not a4_4.surely_le(Fraction(1, 11)):
        fails.append("a4^4 <= 1/11")
    lt(4 * a4_4, 1, "4*a4^4 < 1")
    # case B: 14 a4^6 < 14/11^(3/2) < 1, slice identities, and the add-up
    lt(14 * alpha_power(4, 6, tol), 1, "14*a4^6 < 1")
    if 14**2 >= 11**3:
        fails.append("14^2 < 11^3")
    for k in range(7, 25):
        n = 2 * k
        if binom(n - 8, k - 7) * (n - 6) * (n - 7) != binom(n - 6, k - 5) * (k - 5) * (
            k - 6
        ):
            fails.append(f"slice identity at k={k}")
        if 4 * (k - 5) * (k - 6) >= (n - 6) * (n - 7):
            fails.append(f"4(k-5)(k-6) < (n-6)(n-7) at k={k}")
        if (
            binom(n - 6, k - 6) + 2 * binom(n - 6, k - 5) + binom(n - 6, k - 4)
            != binom(n - 4, k - 4)
        ):
            fails.append(f"pascal (4,4)B at k={k}")
    # case C: the 3-wise-8 fallback and the per-slice constants
    lt(alpha_power(3, 8, tol) * Fraction(19**4, 8**4), 1, "a3^8 (19/8)^4 < 1")
    for k in range(11, 25):
        if 8 * (2 * k - 3) > 19 * (k - 3):
            fails.append(f"(2k-3)/(k-3) <= 19/8 at k={k}")
        n = 2 * k
        if (
            binom(n - 7, k - 4)
            + 3 * binom(n - 7, k - 5)
            + 3 * binom(n - 7, k - 6)
            + binom(n - 7, k - 7)
            != binom(n - 4, k - 4)
        ):
            fails.append(f"pascal (4,4)C at k={k}")
    lt(alpha_power(3, 3, tol), Fraction(24, 100), "a3^3 < 0.24")
    lt(18 * alpha_power(4, 5, tol), Fraction(18, 10), "18*a4^5 < 1.8")
    lt(34 * alpha_power(4, 9, tol), Fraction(6, 10), "34*a4^9 < 0.6")
    return fails


def check_min_scale_4w3():
    """m(14,7,4,3) = C(11,4) by shifted search with the cap raised, plus the
    closed-form inequality chains of the two case analyses."""
    rep = max_uniform(14, 7, 4, 3, cap=4000, enumerate_optima=False)
    fails = []
    if rep.optimum != binom(11, 4):
        fails.append(f"m(14,7,4,3)={rep.optimum}, want {binom(11, 4)}")
    small = max_uniform(10, 5, 4, 3, enumerate_optima=False)
    if small.optimum != binom(7, 2):
        fails.append(f"m(10,5,4,3)={small.optimum}, want {binom(7, 2)}")
    fails.extend(_interval_chain_checks())
    detail = (
        f"m(14,7,4,3)={rep.optimum}, nodes={rep.nodes_explored}; "
        f"m(10,5,4,3)={small.optimum}, nodes={small.nodes_explored}; "
        "case-analysis chains certified"
    )
    return not fails, detail + ("; " + "; ".join(fails) if fails else "")


def check_paths_dp():
    """DP hit counts equal brute-force subset enumeration, n <= 14."""
    params = [(r, t) for r in (3, 4, 5) for t in (1, 2, 3, 4)]
    fails = []
    for n in range(0, 15):
        per = {p: [0] * (n + 1) for p in params}
        for m in range(1 << n):
            k = m.bit_count()
            for p in params:
                if hits_line(m, n, p[0], p[1]):
                    per[p][k] += 1
        for (r, t), row in per.items():
            for k in range(n + 1):
                if count_hitting_paths(n, k, r, t) != row[k]:
                    fails.append(f"(n={n},k={k},r={r},t={t})")
    return not fails, "n <= 14, r in 3..5, t in 1..4, zero tolerance" + (
        "; " + "; ".join(fails[:5]) if fails else ""
    )


def check_g_monotone():
    """Exact rational monotonicity of the uniform hit probability: in the
    number of up steps, downward in n, and along the diagonal."""
    fails = []
    for r in (3, 4, 5):
        for t in (1, 2, 3, 4):
            for n in range(1, 21):
                gs = [g_uniform(n, i, r, t) for i in range(n + 1)]
                for i in range(n):
                    if gs[i] > gs[i + 1]:
                        fails.append(f"(i) n={n},i={i},r={r},t={t}")
                if n < 20:
                    for k in range(n + 1):
                        if g_uniform(n + 1, k, r, t) > g_uniform(n, k, r, t):
                            fails.append(f"(ii) n={n},k={k},r={r},t={t}")
            if t >= 2:
                for k in range(1, 13):
                    if g_uniform(2 * k, k, r, t) > g_uniform(2 * k + 2, k + 1, r, t):
                        fails.append(f"(iii) k={k},r={r},t={t}")
    return not fails, "grid n <= 20, diagonal k <= 12" + (
        "; " + "; ".join(fails[:5]) if fails else ""
    )


def check_alpha_bounds():
    """The symmetric fixed point: the r = 3 value brackets (sqrt(5)-1)/2 to
    1e-12, and 1/(2^r - r) < alpha_r^r <= 1/(2^r - r - 1) for r = 3..16."""
    fails = []
    iv = gamma_root(3, Fraction(1, 2), Fraction(1, 10**12))
    if iv.width > Fraction(1, 10**12):
        fails.append("width")
    # lo <= (sqrt5-1)/2 <= hi, exactly: (2x+1)^2 vs 5 on each endpoint
    if not ((2 * iv.lo + 1) ** 2 <= 5 and 5 <= (2 * iv.hi + 1) ** 2):
        fails.append("golden-ratio bracket")
    for r in range(3, 17):
        p = alpha_power(r, r, Fraction(1, 10**30))
        if not (p.surely_gt(Fraction(1, 2**r - r)) and p.surely_le(Fraction(1, 2**r - r - 1))):
            fails.append(f"r={r}")
    return not fails, "r = 3..16 certified" + ("; " + "; ".join(fails) if fails else "")


def check_walk_identity():
    """Total probability: f(n,r,t,1/2) = sum_k C(n,k) g(n,k,r,t) / 2^n."""
    fails = []
    for n in range(0, 17):
        for r in (3, 4):
            for t in (1, 2, 3):
                rhs = sum(count_hitting_paths(n, k, r, t) for k in range(n + 1))
                if f_finite(n, r, t, Fraction(1, 2)) != Fraction(rhs, 2**n):
                    fails.append(f"(n={n},r={r},t={t})")
    return not fails, "n <= 16, r in {3,4}, t <= 3, exact" + (
        "; " + "; ".join(fails) if fails else ""
    )


def check_a1_crossover():
    """(a) above ceil(((sqrt(4t+9)-1)/2) k) the star beats the leave-one-out
    family for 2 <= t <= 4, k <= 40 (the crossover statement needs t >= 2:
    at t = 1, k = 5, n = 7 the two sizes are equal); (b) the A_1-wins
    instance at eps = 1/20, t = 2, k = 80."""
    fails = []
    points = 0
    for t in range(2, 5):
        for k in range(t + 3, 41):
            n_lo = crossover_n(k, t)
            for n in range(max(n_lo, k + 1), 3 * k + 5):
                points += 1
                if size_frankl(n, k, 3, t, 1) >= binom(n - t, k - t):
                    fails.append(f"t={t},k={k},n={n}")
    n = int((Fraction(15616, 10000) - Fraction(1, 20)) * 80)
    if n != 120:
        fails.append(f"pinned n={n}, want 120")
    if not size_frankl(n, 80, 3, 2, 1) > binom(n - 2, 78):
        fails.append("A_1(120,80,3,2) > C(118,78)")
    return not fails, f"{points} star-wins points + 1 A_1-wins point, exact" + (
        "; " + "; ".join(fails[:5]) if fails else ""
    )


def check_nonuniform():
    """Up-set search values: m(5,3,2) = 8, m(4,2,1) = 8, and the non-trivial
    m*(5,3,1) = (t+r+1) 2^(n-t-r) = 10."""
    fails = []
    got = max_nonuniform(5, 3, 2).optimum
    if got != 8:
        fails.append(f"m(5,3,2)={got}")
    got = max_nonuniform(4, 2, 1).optimum
    if got != 8:
        fails.append(f"m(4,2,1)={got}")
    got = max_nonuniform(5, 3, 1, nontrivial=True).optimum
    if got != 10:
        fails.append(f"m*(5,3,1)={got}")
    return not fails, "exact up-set search" + ("; " + "; ".join(fails) if fails else "")


_SHADOW_GRID = [
    (8, 5, 3, 4),
    (9, 5, 3, 4),
    (9, 6, 3, 4),
    (9, 4, 3, 3),
    (9, 4, 4, 3),
    (8, 4, 3, 2),
    (9, 3, 3, 2),
    (8, 3, 2, 2),
    (9, 4, 3, 1),
    (9, 5, 4, 2),
]


def check_shadow_bounds():
    """Shadows of search witnesses obey the min-ratio lower bound for every
    0 < b <= t, and the factor-4 second-shadow bound at t = 4."""
    fails = []
    for (n, k, r, t) in _SHADOW_GRID:
        rep = max_uniform(n, k, r, t, enumerate_optima=False)
        w = rep.witness
        if len(w) == 0:
            continue
        for b in range(1, min(t, k - 1) + 1):
            sh = len(lower_shadow(w, b))
            bound = f91_bound(len(w), k, r, t, b)
            if sh < bound:
                fails.append(f"({n},{k},{r},{t}) b={b}: {sh} < {bound}")
        if r == 3 and t >= 4 and k - 1 >= 2:
            if not len(lower_shadow(w, 2)) > 4 * len(w):
                fails.append(f"({n},{k},{r},{t}): factor-4")
    return not fails, f"{len(_SHADOW_GRID)} witnesses, zero tolerance" + (
        "; " + "; ".join(fails) if fails else ""
    )


def _random_family(rng: random.Random) -> Family:
    n = rng.randint(3, 10)
    k = rng.randint(1, min(5, n))
    pool = all_k_subsets(n, k)
    m = rng.randint(1, min(6, len(pool)))
    return Family(n, tuple(rng.sample(pool, m)), k)


def check_shifting_suite(trials: int = 10**4):
    """Randomized sweep: a shift step preserves size and the intersecting
    property, the fixpoint is shifted, and on the fixpoint the prefix-witness
    criterion agrees with the direct predicate for r = 3."""
    rng = random.Random(20240811)
    fails = []
    for trial in range(trials):
        fam = _random_family(rng)
        n = fam.ground_n
        i = rng.randint(1, n - 1)
        j = rng.randint(i + 1, n)
        shifted_once = shift_step(fam, i, j)
        if len(shifted_once) != len(fam):
            fails.append(f"trial {trial}: size changed")
            break
        r = rng.choice((2, 3, 4))
        t = rng.randint(1, 3)
        if is_rwise_t_intersecting(fam, r, t) and not is_rwise_t_intersecting(
            shifted_once, r, t
        ):
            fails.append(f"trial {trial}: property lost under S_{i}{j}")
            break
        fix = shift_to_fixpoint(fam)
        if not is_shifted(fix):
            fails.append(f"trial {trial}: fixpoint not shifted")
            break
        for t3 in (1, 2):
            if is_rwise_t_intersecting(fix, 3, t3) != rwise_by_witness(fix, 3, t3):
                fails.append(f"trial {trial}: witness criterion mismatch t={t3}")
                break
        else:
            continue
        break
    return not fails, f"{trials} randomized families" + (
        "; " + "; ".join(fails) if fails else ""
    )


def check_recursion():
    """m(n,k,r,t) <= m(n-1,k,r,t) + m(n-1,k-1,r,t) on every feasible grid
    point with C(n,k) <= 120 (r in 2..4, t in 1..3, k <= 5, n <= 16)."""
    fails = []
    points = 0
    for r in (2, 3, 4):
        for t in (1, 2, 3):
            for k in range(t, 6):
                for n in range(k + 1, 17):
                    if binom(n, k) > 120 or (r - 1) * n <= r * k - t:
                        continue
                    points += 1
                    if not verify_recursion(n, k, r, t):
                        fails.append(f"({n},{k},{r},{t})")
    return not fails, f"{points} grid points" + ("; " + "; ".join(fails) if fails else "")


CRITERIA = [
    ("star-3w2", check_star_optimality_3w2),
    ("size-t1", check_size_at_t1),
    ("minscale-4w3", check_min_scale_4w3),
    ("paths-dp", check_paths_dp),
    ("g-monotone", check_g_monotone),
    ("alpha-bounds", check_alpha_bounds),
    ("walk-identity", check_walk_identity),
    ("a1-crossover", check_a1_crossover),
    ("nonuniform", check_nonuniform),
    ("shadow-bounds", check_shadow_bounds),
    ("shifting", check_shifting_suite),
    ("recursion", check_recursion),
]

SUITES = {name: [(name, fn)] for name, fn in CRITERIA}
SUITES["all"] = list(CRITERIA)


def run_suite(name: str, emit=print):
    """Run a named suite; returns the number of failures."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; know {sorted(SUITES)}")
    failures = 0
    results = []
    for crit, fn in SUITES[name]:
        ok, detail = fn()
        results.append({"criterion": crit, "ok": ok, "detail": detail})
        status = "PASS" if ok else "FAIL"
        emit(f"{status}  {crit}: {detail}")
        if not ok:
            failures += 1
    return failures, results
