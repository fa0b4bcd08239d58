"""The two kernels underneath: truncated power series and partial Bell polynomials.

Run: python3 demos/03_series_and_bell.py
"""

from fractions import Fraction
from math import factorial

from appell import (
    BellTable,
    PowerSeries,
    bell_oracle,
    bell_partial,
    bell_symbols,
    egf_coefficient,
    series_inverse,
    series_log,
    series_pow_symbolic,
    var,
)

# (e^t - 1)/t inverted gives the Bernoulli numbers as EGF coefficients.
denominator = PowerSeries([Fraction(1, factorial(j + 1)) for j in range(8)])
inv = series_inverse(denominator)
print("t/(e^t - 1):", [str(egf_coefficient(inv, n)) for n in range(8)])

# Powers go through exp(alpha * log F), so alpha may stay symbolic.
power = series_pow_symbolic(denominator.truncate(3), var("alpha"))
print("((e^t - 1)/t)^alpha:", [str(egf_coefficient(power, n)) for n in range(4)])
print("log(1 + t):", [str(c) for c in series_log(PowerSeries([1, 1, 0, 0, 0])).coeffs])

# Partial Bell polynomials: recurrence, set-partition oracle, and specialisations.
xs = bell_symbols(5)
for k in range(1, 6):
    print(f"B(5, {k}) =", bell_partial(5, k, xs))
print("oracle agrees:", all(bell_partial(5, k, xs) == bell_oracle(5, k, xs) for k in range(6)))
print("Stirling numbers of the second kind, row 6:", BellTable(6, [1] * 6).row(6))
