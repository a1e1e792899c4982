import pytest

from intersectlab.canonical import (
    build_frankl,
    build_frankl_nonuniform,
    build_full_star,
    build_hmf,
    max_frankl_size,
    size_frankl,
    size_frankl_nonuniform,
)
from intersectlab.exactmath import binom
from intersectlab.families import (
    common_intersection,
    is_rwise_t_intersecting,
    is_t_star,
)
from intersectlab.shifting import is_shifted


def test_frankl_examples():
    f = build_frankl(5, 3, 3, 2, 0)
    assert f.member_sets() == ((1, 2, 3), (1, 2, 4), (1, 2, 5))
    # |A| >= 3 inside [4]: 9 of the 15 4-subsets of [6]
    a1 = build_frankl(6, 4, 3, 1, 1)
    assert len(a1) == 9
    assert build_frankl(4, 4, 2, 2, 1).member_sets() == ((1, 2, 3, 4),)


def test_size_frankl_closed_forms():
    assert size_frankl(10, 5, 3, 2, 1) == 5 * binom(5, 1) + binom(5, 0) == 26
    assert size_frankl(10, 5, 3, 2, 0) == binom(8, 3) == 56
    # i = 0 is always the star count, i = 1 the displayed two-term form
    for (n, k, r, t) in [(9, 4, 3, 1), (11, 5, 3, 2), (12, 6, 4, 3), (13, 5, 5, 2)]:
        assert size_frankl(n, k, r, t, 0) == binom(n - t, k - t)
        assert size_frankl(n, k, r, t, 1) == binom(n - t - r, k - t - r) + (
            t + r
        ) * binom(n - t - r, k - t - r + 1)


def test_frankl_construction_matches_closed_form():
    for n in range(3, 15):
        for k in range(0, min(n, 7) + 1):
            for r in (2, 3, 4):
                for t in (1, 2):
                    i = 0
                    while t + r * i <= n:
                        assert len(build_frankl(n, k, r, t, i)) == size_frankl(
                            n, k, r, t, i
                        ), (n, k, r, t, i)
                        i += 1


def test_frankl_families_are_intersecting_and_shifted():
    for n in range(4, 13):
        for k in (3, 4):
            for (r, t) in [(3, 1), (3, 2), (4, 2)]:
                i = 0
                while t + r * i <= n and t + (r - 1) * i <= k:
                    fam = build_frankl(n, k, r, t, i)
                    assert is_rwise_t_intersecting(fam, r, t), (n, k, r, t, i)
                    assert is_shifted(fam), (n, k, r, t, i)
                    i += 1


def test_star_is_frankl_i0():
    for (n, k, t) in [(5, 3, 2), (6, 3, 1), (7, 4, 3)]:
        star = build_full_star(n, k, t)
        assert star.members == build_frankl(n, k, 3, t, 0).members
        assert len(star) == binom(n - t, k - t)
    assert build_full_star(6, 3, 3).member_sets() == ((1, 2, 3),)
    assert len(build_full_star(6, 3, 1)) == 10


def test_frankl_empty_when_k_too_small():
    # oversized window demands are reported as emptiness, not rejected
    assert len(build_frankl(8, 3, 3, 2, 2)) == 0
    assert size_frankl(8, 3, 3, 2, 2) == 0
    with pytest.raises(ValueError):
        build_frankl(5, 3, 3, 2, 2)  # window exceeds ground set


def test_hmf():
    h = build_hmf(6, 3, 2, 1)
    assert len(h) == 10
    assert common_intersection(h) == 0
    assert is_rwise_t_intersecting(h, 2, 1)
    h2 = build_hmf(5, 4, 2, 2)
    comp = {frozenset({1, 2, 3, 4, 5}) - {j} for j in (1, 2)}
    got = {frozenset(s) for s in h2.member_sets()}
    assert comp <= got
    with pytest.raises(ValueError):
        build_hmf(8, 2, 2, 2)  # k = t+r-2 degenerate
    for (n, k, r, t) in [(8, 4, 2, 2), (9, 4, 3, 1), (10, 5, 3, 2), (9, 5, 4, 2)]:
        fam = build_hmf(n, k, r, t)
        assert is_rwise_t_intersecting(fam, r, t), (n, k, r, t)
        assert common_intersection(fam) == 0, (n, k, r, t)


def test_hmf_two_wise_on_grid():
    for n in range(6, 13):
        for k in range(3, 6):
            for t in (1, 2):
                if k < t + 1 or n < k + 1:
                    continue
                fam = build_hmf(n, k, 2, t)
                assert is_rwise_t_intersecting(fam, 2, t)
                assert common_intersection(fam) == 0


def test_nonuniform_frankl():
    fam = build_frankl_nonuniform(5, 3, 2, 1)
    assert len(fam) == size_frankl_nonuniform(5, 3, 2, 1)
    assert is_rwise_t_intersecting(fam, 3, 2)
    # the non-trivial maximum closed form (t+r+1) 2^(n-t-r)
    for n in (5, 6, 8):
        for (r, t) in [(3, 1), (3, 2), (4, 2)]:
            if t + r > n:
                continue
            assert size_frankl_nonuniform(n, r, t, 1) == (t + r + 1) * 2 ** (
                n - t - r
            )
            assert len(build_frankl_nonuniform(n, r, t, 1)) == size_frankl_nonuniform(
                n, r, t, 1
            )


def test_max_frankl_size():
    best, best_i = max_frankl_size(7, 3, 3, 2)
    assert best == 5 and best_i == 0
    best, best_i = max_frankl_size(6, 4, 3, 1)
    assert best == max(size_frankl(6, 4, 3, 1, i) for i in (0, 1))
