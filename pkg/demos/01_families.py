"""Appell families from moment sequences, and their order-alpha versions.

Run: python3 demos/01_families.py
"""

from fractions import Fraction
from math import factorial

from appell import BELL_ROUTE, SERIES_ROUTE, get_family, substitute
from appell.families import from_moments

# A family is fixed by its moments a_n, i.e. by F(t) = sum a_n t^n / n!.
# The catalog derives Bernoulli and Euler moments from series reciprocals.
bern = get_family("bernoulli")
print("Bernoulli moments:", [str(bern.moments(n)) for n in range(9)])
for n in range(4):
    print(f"  B_{n}(x) = {bern.poly(n)}")

# Any rule with a_0 = 1 defines a family.  Here a_n = n!, so F(t) = 1/(1 - t).
geom = from_moments("geometric", factorial)
print("\ngeometric family:", [str(geom.poly(n)) for n in range(4)])

# f_n^(alpha) comes from F(t)^alpha * exp(x t); alpha stays an indeterminate.
print("\nEuler polynomials of symbolic order:")
euler = get_family("euler")
for n in range(4):
    print(f"  E_{n}^(alpha)(x) = {euler.order_poly(n)}")

# Two independent constructions: partial Bell polynomials and series powers.
same = all(euler.order_poly(n, BELL_ROUTE) == euler.order_poly(n, SERIES_ROUTE) for n in range(9))
print("\nBell route equals series route for n <= 8:", same)

# Specialising alpha recovers familiar objects: order 0 gives x^n, order 1 the family.
p = bern.order_poly(3)
print("order 0:", substitute(p, "alpha", 0), "| order 1:", substitute(p, "alpha", 1))
print("order 2 at x = 1/2:", substitute(substitute(p, "alpha", 2), "x", Fraction(1, 2)))
