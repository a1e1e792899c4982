import random
from fractions import Fraction

import pytest

from intersectlab.exactmath import (
    RealInterval,
    UndecidableComparison,
    binom,
    decide_lt,
    exp_neg_interval,
    fraction_to_decimal,
    nth_root_interval,
    parse_fraction,
    resolve_ceil,
    resolve_floor,
)


def test_binom_examples():
    assert binom(5, 2) == 10
    assert binom(4, 7) == 0  # k > n convention
    assert binom(8, 3) == 56
    assert binom(6, -1) == 0
    with pytest.raises(ValueError):
        binom(-1, 0)


def test_binom_pascal_and_symmetry():
    for n in range(1, 65):
        for k in range(1, n + 1):
            assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)
        for k in range(0, n + 1):
            assert binom(n, k) == binom(n, n - k)


def test_nth_root_perfect_square_is_exact():
    iv = nth_root_interval(Fraction(25), 2, Fraction(1, 10**6))
    assert iv.lo == iv.hi == 5


def test_nth_root_bracket_property():
    iv = nth_root_interval(Fraction(5), 2, Fraction(1, 10**9))
    assert iv.lo**2 <= 5 <= iv.hi**2
    assert iv.width <= Fraction(1, 10**9)
    # around 2.2360679...
    assert iv.contains(Fraction(22360679, 10**7))


def test_nth_root_identity():
    iv = nth_root_interval(Fraction(1), 7, Fraction(1, 1000))
    assert iv.contains(1)


def test_nth_root_rejects_bad_tol():
    with pytest.raises(ValueError):
        nth_root_interval(Fraction(2), 2, Fraction(0))


def test_nth_root_random_brackets():
    rng = random.Random(7)
    for _ in range(50):
        x = Fraction(rng.randint(0, 1000), rng.randint(1, 50))
        d = rng.randint(1, 5)
        iv = nth_root_interval(x, d, Fraction(1, 10**6))
        assert iv.lo**d <= x <= iv.hi**d


def test_rational_arithmetic_is_exact():
    rng = random.Random(11)
    for _ in range(200):
        a = Fraction(rng.randint(-99, 99), rng.randint(1, 99))
        b = Fraction(rng.randint(-99, 99), rng.randint(1, 99))
        assert (a + b) - b == a


def test_interval_arithmetic():
    a = RealInterval(Fraction(1, 2), Fraction(3, 4))
    b = RealInterval(Fraction(2), Fraction(3))
    s = a + b
    assert s.lo == Fraction(5, 2) and s.hi == Fraction(15, 4)
    p = a * b
    assert p.lo == 1 and p.hi == Fraction(9, 4)
    neg = a * -2
    assert neg.lo == Fraction(-3, 2) and neg.hi == -1
    assert a.power(2).lo == Fraction(1, 4)
    assert a.surely_lt(1) and b.surely_gt(a)
    with pytest.raises(ValueError):
        RealInterval(Fraction(1), Fraction(0))


def test_exp_neg_interval():
    assert exp_neg_interval(Fraction(0)).lo == 1
    iv = exp_neg_interval(Fraction(1), Fraction(1, 10**10))
    # e^-1 = 0.3678794411714...
    assert iv.contains(Fraction(36787944117, 10**11))
    assert iv.width <= Fraction(1, 10**10)
    assert iv.lo > 0


def test_decide_lt_and_floor():
    make = lambda tol: nth_root_interval(Fraction(2), 2, tol)
    assert decide_lt(make, Fraction(3, 2))
    assert not decide_lt(make, Fraction(7, 5))
    assert resolve_floor(make) == 1
    assert resolve_ceil(make) == 2
    # comparing an exact value against itself can never be decided
    exact = lambda tol: RealInterval(Fraction(1), Fraction(1) + min(tol, Fraction(1, 10)))
    with pytest.raises(UndecidableComparison):
        decide_lt(exact, Fraction(1))


def test_fraction_rendering():
    assert fraction_to_decimal(Fraction(1, 2), 3) == "0.500"
    assert fraction_to_decimal(Fraction(-1, 3), 6) == "-0.333333"
    assert fraction_to_decimal(Fraction(7), 0) == "7"
    assert parse_fraction("1/2") == Fraction(1, 2)
    assert parse_fraction("1e-3") == Fraction(1, 1000)
    assert parse_fraction("0.25") == Fraction(1, 4)
