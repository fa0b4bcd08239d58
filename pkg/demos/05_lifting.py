"""Lifting a known identity to symbolic order with an identity schema.

A schema lists terms ``coeff * f_k(x + shift)`` on each side.  When
``sum U f_k(x+u) = sum V (x+v)^k`` holds in a family, the lifted identities
relate orders alpha and alpha - 1.  When a pure binomial identity
``sum U (x+u)^k = sum V (x+v)^k`` holds, it lifts at the same order.
The hypothesis is always checked first and reported separately.

Run: python3 demos/05_lifting.py
"""

from math import comb

from appell import IdentitySchema, Term, get_family
from appell.identities import (
    lift_p3_first,
    lift_p3_first_sides,
    lift_p3_second,
    lift_p_first,
    lift_p_second,
    simons_schema,
    xia_schema,
)

euler = get_family("euler")

# A catalog schema: the first Xia row for Euler polynomials.
lhs, rhs = lift_p3_first_sides(xia_schema(1), euler, 2)
print("lifted Xia row 1, n = 2:\n  lhs:", lhs, "\n  rhs:", rhs)

# A home-made schema from E_n(x) + E_n(x+1) = 2 x^n.
difference = IdentitySchema(
    "euler_difference",
    lambda n: [Term(1, n), Term(1, n, 1)],
    lambda n: [Term(2, n)],
)
for n in range(4):
    print("euler_difference", n, lift_p3_first(difference, euler, n).status,
          lift_p3_second(difference, euler, n).status)

# The same schema is not a property of Bernoulli polynomials: the hypothesis fails.
r = lift_p3_first(difference, get_family("bernoulli"), 2)
print("in the Bernoulli family:", r.status, "at the", r.stage, "stage")

# Same-order lifting of binomial identities.
print("simons:", [lift_p_second(simons_schema(), euler, n).status for n in range(5)])
vandermonde = IdentitySchema.from_rules(
    "binomial_shift",  # sum C(n,k) (x+1)^k = (x+2)^n
    U=lambda n, k: comb(n, k),
    V=lambda n, k: 1 if k == n else 0,
    u=lambda n, k: 1,
    v=lambda n, k: 2,
)
print("binomial_shift:", [lift_p_first(vandermonde, euler, n).status for n in range(5)])
