"""Checking identities between Appell polynomials exactly.

Each checker builds both sides as polynomials in every free parameter and
compares them structurally, so a pass is a proof for the tested indices.

Run: python3 demos/04_identities.py
"""

from appell import get_family
from appell.identities import (
    check_abel,
    check_gould,
    check_munarini,
    check_remark_second_order,
    check_symmetric,
    check_xia,
    run_suite,
)

bern, euler = get_family("bernoulli"), get_family("euler")

r = check_symmetric(bern, 3, 2)
print(r.identity, dict(r.params), r.status)
print([r.status for r in check_abel(bern, 3)])
print([(r.identity, r.status) for r in check_xia("euler", 1, 3)])

# A few identities are checked in two forms: as they are usually printed and
# in a corrected form.  The printed forms fail, the corrected ones pass.
for r in check_xia("bernoulli", 3, 2):
    print(f"  {r.identity:22} {r.status}")
for r in check_gould(2, 1):
    print(f"  {r.identity:26} {r.status}")
for r in check_munarini(get_family("random:1"), 1):
    print(f"  {r.identity:26} {r.status}")

# A failing report carries both canonical sides for diagnosis.
bad = check_remark_second_order(bern, 0)
print(bad.status, "\n  lhs:", bad.lhs, "\n  rhs:", bad.rhs)

# Whole suites over a grid; output order is fixed regardless of parallelism.
reports = run_suite(["symmetric", "corollary_alpha", "abel"], ["bernoulli", "random:3"], max_n=3)
print(len(reports), "cases,", sum(r.passed for r in reports), "passed")
