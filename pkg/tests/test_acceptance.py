"""Acceptance criteria, each checked at zero tolerance.

Every criterion prints one ``PASS``/``FAIL`` line.  Run directly with
``python3 tests/test_acceptance.py`` for just the summary, or through pytest.
"""

from __future__ import annotations

import subprocess
import sys
import time
from collections import Counter
from fractions import Fraction

import pytest

from appell import cli, identities
from appell.bell import bell_oracle, bell_partial, bell_symbols
from appell.core import BELL_ROUTE, SERIES_ROUTE, appell_derivative_check
from appell.families import (
    CATALOG_NAMES,
    bernoulli_moments,
    bernoulli_moments_recurrence,
    euler_moments,
    euler_moments_recurrence,
    get_family,
)
from appell.identities import (
    DEFAULT_FAMILIES,
    CheckReport,
    lemma_umbral_2_at,
    lift_p3_first_sides,
    lift_p3_second_sides,
    run_suite,
    xia_schema,
    xia_sides,
)

ALL_FAMILIES = tuple(dict.fromkeys(CATALOG_NAMES + DEFAULT_FAMILIES))


def _line(number: int, ok: bool, title: str, detail: str) -> str:
    return f"criterion {number} {'PASS' if ok else 'FAIL'}: {title} ({detail})"


def criterion_1():
    start = time.perf_counter()
    reports = run_suite("all", DEFAULT_FAMILIES, max_n=6, max_m=6, jobs=1)
    elapsed = time.perf_counter() - start
    failed = [r for r in reports if not r.passed]
    ok = not failed and elapsed < 300
    detail = f"{len(reports) - len(failed)}/{len(reports)} cases in {elapsed:.1f}s"
    if failed:
        tally = Counter(r.identity + ("" if r.stage == "conclusion" else f"[{r.stage}]") for r in failed)
        detail += "; failing: " + ", ".join(f"{k} x{v}" for k, v in sorted(tally.items()))
    return ok, "full identity suite, n, m <= 6, seven families", detail


def _xia_scale(row: int, n: int) -> Fraction:
    # rows 3 and 4 are displayed after dividing by the right-hand factor
    return {1: Fraction(1), 2: Fraction(1), 3: Fraction(2 * n + 1, 2), 4: Fraction(n)}[row]


def _xia_mismatches(stage: str, max_n: int, printed_key: str) -> list:
    bad = []
    for row, kind in identities.XIA_KINDS.items():
        fam = get_family(kind)
        schema = xia_schema(row)
        for n in range(schema.min_n, max_n + 1):
            if stage == "first":
                lifted = lift_p3_first_sides(schema, fam, n)
            else:
                lifted = tuple(s.scale(1 / _xia_scale(row, n)) for s in lift_p3_second_sides(schema, fam, n))
            sides = xia_sides(kind, row, n)
            # rows 1 and 2 have no separate corrected form
            printed = sides[printed_key if printed_key in sides else "xia_second"]
            if tuple(map(str, lifted)) != tuple(map(str, printed)):
                bad.append((row, n))
    return bad


def criterion_4():
    first = _xia_mismatches("first", 5, "xia_alpha")
    second = _xia_mismatches("second", 4, "xia_second")
    corrected = _xia_mismatches("second", 4, "xia_second_corrected")
    ok = not first and not second
    detail = (f"first stage mismatches {first or 'none'}; second stage mismatches {second or 'none'}; "
              f"with the sign -(x - alpha - 1) in rows 3-4: {corrected or 'none'}")
    return ok, "lifting reproduces the four Xia displays", detail


def criterion_2():
    bad = [(name, n) for name in ALL_FAMILIES for n in range(11)
           if get_family(name).order_poly(n, BELL_ROUTE) != get_family(name).order_poly(n, SERIES_ROUTE)]
    return not bad, "Bell route equals series route, n <= 10", f"mismatches: {bad or 'none'}"


def criterion_3():
    b_ok = [bernoulli_moments(n) for n in range(13)] == bernoulli_moments_recurrence(12)
    e_ok = [euler_moments(n) for n in range(13)] == euler_moments_recurrence(12)
    spot = bernoulli_moments(4) == Fraction(-1, 30) and euler_moments(3) == Fraction(1, 4)
    return b_ok and e_ok and spot, "series moments equal recurrence moments, n <= 12", \
        f"bernoulli {b_ok}, euler {e_ok}, B_4 and a_3 spot values {spot}"


def criterion_5():
    bad = []
    for name in ALL_FAMILIES:
        for n in range(9):
            lhs, rhs = lemma_umbral_2_at(get_family(name), n, -1)
            if lhs != 0 or rhs != 0:
                bad.append((name, n))
    return not bad, "cleared second umbral identity at alpha = -1 is 0 = 0, n <= 8", f"nonzero: {bad or 'none'}"


def criterion_6():
    bad = []
    for name in ALL_FAMILIES:
        fam = get_family(name)
        for n in range(13):
            for p in range(n + 1):
                lhs, rhs = appell_derivative_check(fam, n, p)
                if lhs != rhs:
                    bad.append((name, n, p))
    return not bad, "D^p f_n = (n)_p f_(n-p), n <= 12", f"mismatches: {bad or 'none'}"


def criterion_7():
    xs = bell_symbols(8)
    bad = [(n, k) for n in range(9) for k in range(n + 1) if bell_partial(n, k, xs) != bell_oracle(n, k, xs)]
    return not bad, "Bell recurrence equals set-partition oracle, n <= 8", f"mismatches: {bad or 'none'}"


def _cli_bytes() -> tuple:
    cmd = [sys.executable, "-m", "appell", "check", "--suite", "all", "--format", "json"]
    runs = [subprocess.run(cmd, capture_output=True, check=False) for _ in range(2)]
    return runs[0].stdout == runs[1].stdout and bool(runs[0].stdout), [r.returncode for r in runs]


def _exit_codes() -> tuple:
    """Exit codes for a clean run, the same run with one injected failure, and a usage error."""
    argv = ["check", "--suite", "symmetric", "--max-n", "2", "--family", "monomial", "--output", "/dev/null"]
    clean = cli.main(argv)
    real = identities.check_symmetric

    def broken(fam, n, m):
        r = real(fam, n, m)
        return CheckReport(r.identity, r.family, r.params, "fail", "0", "1") if (n, m) == (2, 2) else r

    identities.check_symmetric = broken
    try:
        injected = cli.main(argv)
    finally:
        identities.check_symmetric = real
    usage = subprocess.run([sys.executable, "-m", "appell", "check", "--suite", "symmetric", "--family", "nosuch"],
                           capture_output=True, check=False).returncode
    return clean, injected, usage


def criterion_8():
    same, codes = _cli_bytes()
    exits = _exit_codes()
    ok = same and exits == (0, 1, 2)
    return ok, "deterministic output and exit-code contract", \
        f"identical bytes {same} (exit codes {codes}); clean/injected/usage exits {exits}"


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
            5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, title, detail = CRITERIA[number]()
    with capsys.disabled():
        print("\n" + _line(number, ok, title, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for number, fn in sorted(CRITERIA.items()):
        ok, title, detail = fn()
        results.append(ok)
        print(_line(number, ok, title, detail), flush=True)
    sys.exit(0 if all(results) else 1)
