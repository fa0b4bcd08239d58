from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from appell.poly import var
from appell.series import (
    PowerSeries,
    SeriesError,
    egf_coefficient,
    exp_series,
    from_egf,
    series_exp,
    series_inverse,
    series_log,
    series_mul,
    series_pow_symbolic,
)

alpha, beta = var("alpha"), var("beta")
ORDER = 8

units = st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=ORDER, max_size=ORDER) \
    .map(lambda tail: PowerSeries([1] + tail))


def solve_inverse(coeffs):
    """Inverse by forward substitution on the lower-triangular Toeplitz system."""
    out = []
    for n in range(len(coeffs)):
        rhs = Fraction(1 if n == 0 else 0) - sum(coeffs[n - j] * out[j] for j in range(n))
        out.append(rhs / coeffs[0])
    return out


def test_inverse_of_bernoulli_denominator():
    f = PowerSeries([Fraction(1, factorial(j + 1)) for j in range(5)])
    inv = series_inverse(f)
    expected = solve_inverse([Fraction(1, factorial(j + 1)) for j in range(5)])
    assert [c.constant_value() for c in inv.coeffs] == expected
    assert expected == [1, Fraction(-1, 2), Fraction(1, 12), 0, Fraction(-1, 720)]


def test_exp_of_t_is_exponential():
    assert series_exp(PowerSeries([0, 1, 0, 0, 0])) == exp_series(4)


def test_log_of_exponential():
    assert series_log(exp_series(6)) == PowerSeries([0, 1, 0, 0, 0, 0, 0])


@settings(max_examples=60)
@given(units)
def test_log_exp_round_trip(f):
    assert series_exp(series_log(f)) == f


@settings(max_examples=60)
@given(units)
def test_inverse_times_self_is_one(f):
    assert series_mul(f, series_inverse(f)) == PowerSeries.one(ORDER)


@settings(max_examples=30)
@given(units)
def test_integer_powers_agree_with_products(f):
    acc = PowerSeries.one(ORDER)
    for k in range(6):
        assert series_pow_symbolic(f, k) == acc
        acc = series_mul(acc, f)


@settings(max_examples=20)
@given(units)
def test_symbolic_exponents_add(f):
    f = f.truncate(5)
    lhs = series_pow_symbolic(f, alpha + beta)
    rhs = series_mul(series_pow_symbolic(f, alpha), series_pow_symbolic(f, beta))
    assert lhs == rhs


def test_egf_round_trip():
    values = [1, 2, Fraction(-1, 3), 5]
    s = from_egf(values)
    assert [egf_coefficient(s, n) for n in range(4)] == values


def test_preconditions():
    with pytest.raises(SeriesError):
        series_inverse(PowerSeries([0, 1]))
    with pytest.raises(SeriesError):
        series_log(PowerSeries([2, 1]))
    with pytest.raises(SeriesError):
        series_exp(PowerSeries([1, 1]))
    with pytest.raises(SeriesError):
        egf_coefficient(exp_series(2), 3)
