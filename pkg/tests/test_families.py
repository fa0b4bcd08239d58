from fractions import Fraction

import pytest

from appell.families import (
    CATALOG_NAMES,
    bernoulli,
    bernoulli_moments,
    bernoulli_moments_recurrence,
    euler,
    euler_moments,
    euler_moments_recurrence,
    get_family,
    monomial,
    random_family,
    reflection_check,
)
from appell.poly import substitute, var

x = var("x")


def test_bernoulli_moment_values():
    assert [bernoulli_moments(n) for n in (0, 1, 2, 4, 6)] == \
        [1, Fraction(-1, 2), Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42)]


def test_euler_moment_values():
    assert [euler_moments(n) for n in range(4)] == [1, Fraction(-1, 2), 0, Fraction(1, 4)]


def test_series_moments_match_recurrences():
    assert [bernoulli_moments(n) for n in range(13)] == bernoulli_moments_recurrence(12)
    assert [euler_moments(n) for n in range(13)] == euler_moments_recurrence(12)


def test_vanishing_moments():
    for n in range(3, 13, 2):
        assert bernoulli_moments(n) == 0
    for n in range(2, 13, 2):
        assert euler_moments(n) == 0


def test_euler_difference_equation():
    e = euler()
    for n in range(11):
        assert e.poly(n) + substitute(e.poly(n), "x", x + 1) == 2 * x**n


def test_bernoulli_difference_equation():
    b = bernoulli()
    for n in range(1, 11):
        assert substitute(b.poly(n), "x", x + 1) - b.poly(n) == n * x ** (n - 1)


def test_monomial_family():
    m = monomial()
    for n in range(11):
        assert m.poly(n) == x**n
        assert m.order_poly(n) == x**n


def test_reflection():
    assert reflection_check(0) == (1, 1)
    assert reflection_check(1) == (-x - Fraction(1, 2), -x - Fraction(1, 2))
    for n in range(2, 9):
        lhs, rhs = reflection_check(n)
        assert lhs == rhs


def test_catalog_lookup():
    for name in CATALOG_NAMES:
        fam = get_family(name)
        assert fam.name == name and fam.moments(0) == 1
    assert get_family("random:3") is random_family(3)
    assert get_family("random:3:4").name == "random:3:4"
    for bad in ("nosuch", "random:", "random:a", "random:1:2:3"):
        with pytest.raises(KeyError):
            get_family(bad)


def test_random_families_are_reproducible_and_bounded():
    a = [random_family(11).moments(n) for n in range(20)]
    b = [get_family("random:11").moments(n) for n in range(20)]
    assert a == b and a[0] == 1
    assert all(abs(v.numerator) <= 9 * v.denominator for v in a)
    assert a != [random_family(12).moments(n) for n in range(20)]
    small = random_family(11, 2)
    assert all(abs(small.moments(n)) <= 2 for n in range(20))
    with pytest.raises(ValueError):
        random_family(1, 0)
