"""The umbral rule u^j -> f_j(x) and what it does to order-alpha polynomials.

Run: python3 demos/02_umbral.py
"""

from appell import get_family, substitute, umbral_eval, var
from appell.identities import check_lemma_umbral, lemma_umbral_2_at

u, x, alpha = var("u"), var("x"), var("alpha")
fam = get_family("bernoulli")

# Evaluating at the umbra: (u + 1)^2 becomes B_2(x) + 2 B_1(x) + 1.
print("(u+1)^2  ->", umbral_eval((u + 1) ** 2, fam))

# Feeding f_n^(alpha)(u) through the rule raises the order by one.
q = substitute(fam.order_poly(2), "x", u)
print("f_2^(alpha)(u) ->", umbral_eval(q, fam))
print("f_2^(alpha+1)(x) =", substitute(fam.order_poly(2), "alpha", alpha + 1))

# Both statements are checked symbolically in alpha.
for n in range(5):
    print(n, [r.status for r in check_lemma_umbral(fam, n)])

# Multiplying the second statement through by (alpha + 1) makes alpha = -1 harmless.
print("at alpha = -1:", [tuple(map(str, lemma_umbral_2_at(fam, n, -1))) for n in range(3)])

# x inside q would be ambiguous, so it is refused.
try:
    umbral_eval(u * x, fam)
except ValueError as exc:
    print("refused:", exc)
