import random
from itertools import combinations

import pytest

from intersectlab.families import (
    Family,
    all_k_subsets,
    common_intersection,
    complement_family,
    drop_point,
    elements_of,
    family,
    from_text,
    is_rwise_t_intersecting,
    is_t_star,
    mask_of,
    restrict,
    restrict_point,
    restrict_super,
    to_text,
)


def rand_family(rng, n_max=10, k_max=5, m_max=6):
    n = rng.randint(2, n_max)
    k = rng.randint(1, min(k_max, n))
    pool = all_k_subsets(n, k)
    return Family(n, tuple(rng.sample(pool, rng.randint(1, min(m_max, len(pool))))), k)


def test_mask_roundtrip():
    assert elements_of(mask_of([3, 1, 5])) == (1, 3, 5)
    assert mask_of([]) == 0
    with pytest.raises(ValueError):
        mask_of([0])


def test_family_normalization_and_validation():
    f = family(5, [(2, 1), (1, 2), (3,)])
    assert len(f) == 2  # duplicates collapse
    assert f.uniform_k is None  # mixed sizes
    g = family(5, [(1, 2), (2, 3)])
    assert g.uniform_k == 2
    with pytest.raises(ValueError):
        family(3, [(4,)])
    with pytest.raises(ValueError):
        family(5, [(1, 2)], k=3)


def test_rwise_examples():
    f = family(5, [(1, 2, 3), (1, 2, 4), (1, 2, 5)])
    assert is_rwise_t_intersecting(f, 3, 2)
    g = family(4, [(1, 2), (3, 4)])
    assert not is_rwise_t_intersecting(g, 2, 1)
    h = family(4, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
    assert is_rwise_t_intersecting(h, 3, 1)


def test_rwise_monotone_in_r_and_t():
    rng = random.Random(5)
    for _ in range(300):
        fam = rand_family(rng)
        for r in (2, 3, 4):
            for t in (1, 2, 3):
                if is_rwise_t_intersecting(fam, r, t):
                    for tp in range(1, t + 1):
                        assert is_rwise_t_intersecting(fam, r, tp)
                    for rp in range(2, r + 1):
                        assert is_rwise_t_intersecting(fam, rp, t)


def test_common_intersection_and_star():
    f = family(4, [(1, 2, 3), (1, 2, 4)])
    assert elements_of(common_intersection(f)) == (1, 2)
    assert elements_of(common_intersection(family(2, [(1,), (2,)]))) == ()
    single = family(5, [(2, 5)])
    assert common_intersection(single) == mask_of((2, 5))
    with pytest.raises(ValueError):
        common_intersection(family(3, []))
    assert is_t_star(family(5, [(1, 2, 3), (1, 2, 4), (1, 2, 5)]), 2)
    assert not is_t_star(family(4, [(1, 2, 3), (1, 2, 4), (1, 3, 4)]), 2)
    assert is_t_star(family(3, [(1, 2, 3)]), 3)
    assert is_t_star(family(3, []), 1)  # vacuous; callers carry an empty flag


def test_restrict():
    f = family(4, [(1, 2, 3), (2, 3, 4)])
    r = restrict(f, mask_of([2]), mask_of([1, 2]))
    assert r.member_sets() == ((3, 4),)
    assert restrict(f, 0, 0).members == f.members
    assert len(restrict(family(3, [(1, 2, 3)]), 0, mask_of([1]))) == 0
    with pytest.raises(ValueError):
        restrict(f, mask_of([3]), mask_of([1, 2]))
    ri = restrict(f, mask_of([2]), mask_of([1, 2]), reindex=True)
    assert ri.ground_n == 2 and ri.member_sets() == ((1, 2),)


def test_point_restrictions_partition():
    rng = random.Random(9)
    for _ in range(100):
        fam = rand_family(rng)
        for i in range(1, fam.ground_n + 1):
            assert len(restrict_point(fam, i)) + len(drop_point(fam, i)) == len(fam)
    f = family(4, [(1, 2), (2, 3), (3, 4)])
    assert restrict_super(f, mask_of([2])).member_sets() == ((1,), (3,))


def test_serialization_roundtrip():
    rng = random.Random(13)
    for _ in range(50):
        fam = rand_family(rng)
        assert from_text(to_text(fam)).members == fam.members
    nonuni = family(4, [(1,), (1, 2), ()])
    back = from_text(to_text(nonuni))
    assert back.members == nonuni.members
    empty = family(6, [], k=3)
    assert from_text(to_text(empty)).members == ()
    assert "k=*" in to_text(nonuni) and "k=3" in to_text(empty)
    with pytest.raises(ValueError):
        from_text("garbage header\n1,2\n")


def test_nontrivial_families_are_swise_intersecting_exhaustive():
    # every 3-wise 1-intersecting non-star family over the 3-subsets of [5]
    # is 2-wise 2-intersecting (checked exhaustively on all subfamilies)
    pool = all_k_subsets(5, 3)
    for bits in range(1, 1 << len(pool)):
        members = tuple(pool[i] for i in range(len(pool)) if (bits >> i) & 1)
        fam = Family(5, members, 3)
        if not is_rwise_t_intersecting(fam, 3, 1) or is_t_star(fam, 1):
            continue
        assert is_rwise_t_intersecting(fam, 2, 2)


def test_nontrivial_maximal_families_are_swise_intersecting():
    # the same implication on maximal families at larger sizes: subfamilies
    # inherit both non-starness upward and the conclusion downward
    from intersectlab._pure import enumerate_maximal

    for (n, k, r, t) in [(7, 3, 3, 1), (8, 3, 3, 1), (7, 4, 3, 2), (6, 4, 4, 2)]:
        masks = all_k_subsets(n, k)
        maximal, _ = enumerate_maximal(masks, r, t, node_cap=10**6)
        for idxs in maximal:
            fam = Family(n, tuple(masks[i] for i in idxs), k)
            if is_t_star(fam, t):
                continue
            for s in range(2, r):
                assert is_rwise_t_intersecting(fam, s, t + r - s), (n, k, r, t, s)


def test_complement_family():
    f = family(4, [(1, 2), (3, 4)])
    assert complement_family(f).member_sets() == ((1, 2), (3, 4))
    g = family(4, [(1,)])
    assert complement_family(g).member_sets() == ((2, 3, 4),)
