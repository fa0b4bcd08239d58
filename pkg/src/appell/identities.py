"""Exact checkers for identities between Appell polynomials.

Every checker builds both sides as :class:`~appell.poly.MultiPoly` values in
symbolic ``x``, ``y``, ``alpha`` (and ``beta``, ``gamma``, ``lambda``, ``q`` where
they occur) and compares them structurally.  ``*_sides`` functions return the
raw sides; ``check_*`` functions wrap them into :class:`CheckReport` objects.

Order-alpha polynomials are written ``F(k, order)(point)`` in comments, meaning
``f_k^(order)`` evaluated at ``point``.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable, Optional, Sequence, Union

from .core import AppellFamily, umbral_eval
from .families import get_family
from .poly import MultiPoly, binomial_symbolic, const, derivative, substitute, var

__all__ = [
    "CheckReport",
    "Term",
    "IdentitySchema",
    "SUITES",
    "DEFAULT_FAMILIES",
    "check_symmetric",
    "check_symmetric_deriv",
    "check_lemma_umbral",
    "check_remark_second_order",
    "check_corollary_alpha",
    "check_abel",
    "check_xia",
    "check_ljunggren",
    "check_munarini",
    "check_simons",
    "check_gould",
    "lift_p3_first",
    "lift_p3_second",
    "lift_p_first",
    "lift_p_second",
    "run_suite",
    "suite_passed",
]

X, Y = var("x"), var("y")
ALPHA, BETA, GAMMA, LAMBDA, Q, U = (var(n) for n in ("alpha", "beta", "gamma", "lambda", "q", "u"))
ZERO, ONE = const(0), const(1)

Value = Union[MultiPoly, int, Fraction]


@dataclass(frozen=True)
class CheckReport:
    identity: str
    family: str
    params: tuple
    status: str
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    stage: str = "conclusion"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        out = {"identity": self.identity, "params": dict(self.params),
               "family": self.family, "status": self.status}
        if not self.passed:
            out["lhs"] = self.lhs
            out["rhs"] = self.rhs
            if self.stage != "conclusion":
                out["stage"] = self.stage
        return out


def _report(identity: str, family: str, params: dict, lhs: MultiPoly, rhs: MultiPoly,
            stage: str = "conclusion") -> CheckReport:
    if lhs == rhs:
        return CheckReport(identity, family, tuple(params.items()), "pass", stage=stage)
    return CheckReport(identity, family, tuple(params.items()), "fail", str(lhs), str(rhs), stage)


def _total(terms: Iterable[MultiPoly]) -> MultiPoly:
    acc = ZERO
    for t in terms:
        acc = acc + t
    return acc


def _f(fam: AppellFamily, n: int, order: Optional[Value] = None, point: Value = X) -> MultiPoly:
    """``F(n, order)(point)``; ``order=None`` keeps ``alpha`` symbolic, ``n < 0`` gives 0."""
    return fam.shifted(n, order, point - X)


def _mono(n: int, point: Value) -> MultiPoly:
    """``point**n``, with the vanishing convention for ``n < 0``."""
    if n < 0:
        return ZERO
    if not isinstance(point, MultiPoly):
        point = const(point)
    return point ** n


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


# Symmetric identity and its derivative form


def symmetric_sides(fam: AppellFamily, n: int, m: int) -> tuple:
    lhs = _total(comb(n, k) * Y ** (n - k) * _f(fam, m + k, 1) for k in range(n + 1))
    rhs = _total(comb(m, k) * (-Y) ** (m - k) * _f(fam, n + k, 1, X + Y) for k in range(m + 1))
    return lhs, rhs


def check_symmetric(fam: AppellFamily, n: int, m: int) -> CheckReport:
    lhs, rhs = symmetric_sides(fam, n, m)
    return _report("symmetric", fam.name, {"n": n, "m": m}, lhs, rhs)


def _check_p(n: int, m: int, p: int) -> None:
    if not 0 <= p <= min(n, m):
        raise ValueError(f"p={p} must satisfy 0 <= p <= min(n, m) = {min(n, m)}")


def symmetric_deriv_sides(fam: AppellFamily, n: int, m: int, p: int) -> tuple:
    _check_p(n, m, p)
    lhs = _total(comb(n, k) * comb(m + k, p) * Y ** (n - k) * _f(fam, m - p + k, 1)
                 for k in range(n + 1))
    rhs = _total(comb(m, k) * comb(n + k, p) * (-Y) ** (m - k) * _f(fam, n - p + k, 1, X + Y)
                 for k in range(m + 1))
    return lhs, rhs


def check_symmetric_deriv(fam: AppellFamily, n: int, m: int, p: int) -> CheckReport:
    """Also confirms each side is ``D_x^p / p!`` of the corresponding symmetric side."""
    lhs, rhs = symmetric_deriv_sides(fam, n, m, p)
    params = {"n": n, "m": m, "p": p}
    base_l, base_r = symmetric_sides(fam, n, m)
    scale = Fraction(1, factorial(p))
    dl = derivative(base_l, "x", p).scale(scale)
    dr = derivative(base_r, "x", p).scale(scale)
    if dl != lhs:
        return _report("symmetric_deriv", fam.name, params, dl, lhs, stage="derivative")
    if dr != rhs:
        return _report("symmetric_deriv", fam.name, params, dr, rhs, stage="derivative")
    return _report("symmetric_deriv", fam.name, params, lhs, rhs)


# Umbral identities, their second-order extension, and the alpha form of the symmetric identity


def _order_in_u(fam: AppellFamily, n: int) -> MultiPoly:
    """``F(n, alpha)(u)``."""
    return substitute(fam.order_poly(n), "x", U)


def lemma_umbral_sides(fam: AppellFamily, n: int) -> tuple:
    """Pairs for ``f_n^(a)(A+x) = f_n^(a+1)(x)`` and the ``(a+1)``-cleared second identity."""
    fu = _order_in_u(fam, n)
    first = (umbral_eval(fu, fam), _f(fam, n, ALPHA + 1))
    second = ((ALPHA + 1) * umbral_eval(U * fu, fam),
              _f(fam, n + 1, ALPHA + 1) + ALPHA * X * _f(fam, n, ALPHA + 1))
    return first, second


def lemma_umbral_2_at(fam: AppellFamily, n: int, alpha: Value) -> tuple:
    """The cleared second identity with ``alpha`` specialised."""
    _, (lhs, rhs) = lemma_umbral_sides(fam, n)
    return substitute(lhs, "alpha", alpha), substitute(rhs, "alpha", alpha)


def check_lemma_umbral(fam: AppellFamily, n: int) -> list:
    first, second = lemma_umbral_sides(fam, n)
    return [_report("lemma_umbral_1", fam.name, {"n": n}, *first),
            _report("lemma_umbral_2", fam.name, {"n": n}, *second)]


def remark_second_order_sides(fam: AppellFamily, n: int) -> tuple:
    lhs = (ALPHA + 2) * (ALPHA + 1) * umbral_eval(U * U * _order_in_u(fam, n), fam)
    a1, a2 = ALPHA + 1, ALPHA + 2
    rhs = (_f(fam, n + 2, a2) - 2 * X * _f(fam, n + 1, a2) + X * X * _f(fam, n, a2)
           + 2 * a2 * X * _f(fam, n + 1, a1) + a2 * (ALPHA - 1) * X * X * _f(fam, n, a1))
    return lhs, rhs


def check_remark_second_order(fam: AppellFamily, n: int) -> CheckReport:
    return _report("remark_second_order", fam.name, {"n": n}, *remark_second_order_sides(fam, n))


def corollary_alpha_sides(fam: AppellFamily, n: int, m: int, p: int) -> tuple:
    _check_p(n, m, p)
    lhs = _total(comb(n, k) * comb(m + k, p) * Y ** (n - k) * _f(fam, m - p + 1 + k)
                 for k in range(n + 1))
    rhs = _total(comb(m, k) * comb(n + k, p) * (-Y) ** (m - k)
                 * (_f(fam, n - p + 1 + k, None, X + Y) - Y * _f(fam, n - p + k, None, X + Y))
                 for k in range(m + 1))
    return lhs, rhs


def check_corollary_alpha(fam: AppellFamily, n: int, m: int, p: int) -> CheckReport:
    return _report("corollary_alpha", fam.name, {"n": n, "m": m, "p": p},
                   *corollary_alpha_sides(fam, n, m, p))


# Abel


def abel_base_sides(n: int) -> tuple:
    lhs = (X + Y) ** n
    rhs = _total(comb(n, k) * (_mono(k, X - k * Q) + k * Q * _mono(k - 1, X - k * Q))
                 * (Y + k * Q) ** (n - k) for k in range(n + 1))
    return lhs, rhs


def abel_sides(fam: AppellFamily, n: int) -> tuple:
    lhs = _f(fam, n, ALPHA + BETA, X + Y)
    rhs = _total(comb(n, k) * (_f(fam, k, None, X - k * Q) + k * Q * _f(fam, k - 1, None, X - k * Q))
                 * _f(fam, n - k, BETA, Y + k * Q) for k in range(n + 1))
    return lhs, rhs


def check_abel(fam: AppellFamily, n: int, fam_b: Optional[AppellFamily] = None) -> list:
    if fam_b is not None and fam_b is not fam:
        raise ValueError("the Abel identity relates two orders of one family")
    return [_report("abel_base", fam.name, {"n": n}, *abel_base_sides(n)),
            _report("abel", fam.name, {"n": n}, *abel_sides(fam, n))]


# Xia's identities: base form, alpha-generalisation, second stage

XIA_KINDS = {1: "euler", 2: "euler", 3: "bernoulli", 4: "bernoulli"}


def _xia_row(row: int, n: int) -> tuple:
    """``(lhs index/coefficient pairs, rhs coefficient, rhs index)`` and the rhs sign."""
    if row in (1, 3):
        left = [(comb(2 * n + 1, 2 * k), 2 * k) for k in range(n + 1)]
        top = 2 * n + 1 if row == 1 else 2 * n
    else:
        left = [(comb(2 * n, 2 * k - 1), 2 * k - 1) for k in range(1, n + 1)]
        top = 2 * n if row == 2 else 2 * n - 1
    if row in (1, 2):
        return left, Fraction(1), top, -1
    return left, (Fraction(2 * n + 1, 2) if row == 3 else Fraction(n)), top, 1


def xia_sides(kind: str, row: int, n: int) -> dict:
    """Sides of the base, alpha and second-stage identities for one row.

    Rows 1, 2 are Euler, rows 3, 4 Bernoulli.  Rows 2 and 4 need ``n >= 1``.
    """
    if XIA_KINDS.get(row) != kind:
        raise ValueError(f"row {row} belongs to the {XIA_KINDS.get(row, 'no')} family, not {kind!r}")
    if row in (2, 4) and n < 1:
        raise ValueError(f"row {row} needs n >= 1")
    fam = get_family(kind)
    left, c, top, sign = _xia_row(row, n)
    xm1 = X - 1
    base = (_total(b * _f(fam, j, 1) for b, j in left),
            c * (_mono(top, X) + sign * _mono(top, xm1)))
    alpha = (_total(b * _f(fam, j) for b, j in left),
             c * (_f(fam, top, ALPHA - 1) + sign * _f(fam, top, ALPHA - 1, xm1)))
    # second stage; rows 3 and 4 are printed with the sum divided by c
    a1 = ALPHA + 1
    lhs2 = (ALPHA / c) * _total(b * _f(fam, j + 1, a1) for b, j in left)
    head = a1 * _f(fam, top + 1) - X * _f(fam, top)
    out = {"xia_base": base, "xia_alpha": alpha}
    if row in (1, 2):
        out["xia_second"] = (lhs2, head - a1 * _f(fam, top + 1, None, xm1)
                             + (X - ALPHA - 1) * _f(fam, top, None, xm1))
    else:
        tail = head + a1 * _f(fam, top + 1, None, xm1)
        # as printed: -(x + alpha - 1); the lifting gives -(x - alpha - 1)
        out["xia_second"] = (lhs2, tail - (X + ALPHA - 1) * _f(fam, top, None, xm1))
        out["xia_second_corrected"] = (lhs2, tail - (X - ALPHA - 1) * _f(fam, top, None, xm1))
    return out


def check_xia(kind: str, row: int, n: int) -> list:
    sides = xia_sides(kind, row, n)
    return [_report(name, kind, {"row": row, "n": n}, *pair) for name, pair in sides.items()]


# Ljunggren, Munarini, Simons


def ljunggren_sides(fam: AppellFamily, n: int) -> dict:
    left = [comb(n, k) * binomial_symbolic(LAMBDA, k) * Y ** k for k in range(n + 1)]
    right = [comb(n, k) * binomial_symbolic(LAMBDA + k, k) * Y ** k for k in range(n + 1)]
    return {
        "ljunggren_base": (_total(c * (X + Y) ** (n - k) for k, c in enumerate(left)),
                           _total(c * X ** (n - k) for k, c in enumerate(right))),
        "ljunggren_first": (_total(c * _f(fam, n - k, None, X + Y) for k, c in enumerate(left)),
                            _total(c * _f(fam, n - k) for k, c in enumerate(right))),
        "ljunggren_second": (_total(c * (_f(fam, n + 1 - k, None, X + Y) - Y * _f(fam, n - k, None, X + Y))
                                    for k, c in enumerate(left)),
                             _total(c * _f(fam, n + 1 - k) for k, c in enumerate(right))),
    }


def _munarini_coeffs(n: int, corrected: bool) -> tuple:
    if corrected:
        left = [binomial_symbolic(GAMMA, n - k) * binomial_symbolic(BETA - GAMMA + n, k) * Y ** k
                for k in range(n + 1)]
    else:
        left = [binomial_symbolic(GAMMA, k) * binomial_symbolic(BETA - GAMMA + n, n - k) * Y ** k
                for k in range(n + 1)]
    right = [binomial_symbolic(GAMMA, n - k) * binomial_symbolic(BETA + k, k) * Y ** k
             for k in range(n + 1)]
    return left, right


def munarini_sides(fam: AppellFamily, n: int, corrected: bool = False) -> dict:
    """Munarini's identity and its two liftings.

    As printed, the left binomials are ``C(gamma, k) C(beta-gamma+n, n-k)``, which
    already fails at ``n = 1``; ``corrected=True`` uses
    ``C(gamma, n-k) C(beta-gamma+n, k)``.
    """
    left, right = _munarini_coeffs(n, corrected)
    tag = "munarini_corrected" if corrected else "munarini"
    return {
        f"{tag}_base": (_total(c * (X + Y) ** (n - k) for k, c in enumerate(left)),
                        _total(c * X ** (n - k) for k, c in enumerate(right))),
        f"{tag}_first": (_total(c * _f(fam, n - k, None, X + Y) for k, c in enumerate(left)),
                         _total(c * _f(fam, n - k) for k, c in enumerate(right))),
        f"{tag}_second": (_total(c * (_f(fam, n + 1 - k, None, X + Y) - Y * _f(fam, n - k, None, X + Y))
                                 for k, c in enumerate(left)),
                          _total(c * _f(fam, n + 1 - k) for k, c in enumerate(right))),
    }


def _simons_coeff(n: int, k: int) -> int:
    return factorial(n + k) // (factorial(n - k) * factorial(k) ** 2)


def simons_sides(fam: AppellFamily, n: int) -> dict:
    sign = [(-1) ** (n + k) * _simons_coeff(n, k) for k in range(n + 1)]
    plain = [_simons_coeff(n, k) for k in range(n + 1)]
    return {
        "simons_base": (_total(c * (X + 1) ** k for k, c in enumerate(sign)),
                        _total(c * X ** k for k, c in enumerate(plain))),
        "simons_first": (_total(c * _f(fam, k, None, X + 1) for k, c in enumerate(sign)),
                         _total(c * _f(fam, k) for k, c in enumerate(plain))),
        "simons_second": (_total(c * (_f(fam, k + 1, None, X + 1) - _f(fam, k, None, X + 1))
                                 for k, c in enumerate(sign)),
                          _total(c * _f(fam, k + 1) for k, c in enumerate(plain))),
    }


def _check_dict(fam_name: str, params: dict, sides: dict) -> list:
    return [_report(name, fam_name, params, *pair) for name, pair in sides.items()]


def check_ljunggren(fam: AppellFamily, n: int) -> list:
    return _check_dict(fam.name, {"n": n}, ljunggren_sides(fam, n))


def check_munarini(fam: AppellFamily, n: int) -> list:
    """Printed form followed by the corrected form."""
    return (_check_dict(fam.name, {"n": n}, munarini_sides(fam, n))
            + _check_dict(fam.name, {"n": n}, munarini_sides(fam, n, corrected=True)))


def check_simons(fam: AppellFamily, n: int) -> list:
    return _check_dict(fam.name, {"n": n}, simons_sides(fam, n))


# Gould's identity for Bernoulli polynomials


def _gould_left(n: int, m: int, corrected: bool) -> list:
    if corrected:
        return [comb(n, k) * _binom(m, n - k) * (-1) ** k for k in range(n + 1)]
    return [comb(n, k) * comb(m, k) * (-1) ** k for k in range(n + 1)]


def gould_sides(n: int, m: int, corrected: bool = False) -> dict:
    """Gould's Bernoulli identity, its reflection form and two alpha-liftings.

    As printed the left weights are ``C(n,k) C(m,k) (-1)^k``, which only holds
    for ``m = n`` (or ``n = 0``); ``corrected=True`` uses ``C(n,k) C(m,n-k) (-1)^k``.
    """
    fam = get_family("bernoulli")
    left = _gould_left(n, m, corrected)
    right = [comb(n, k) * comb(m + k, k) for k in range(n + 1)]
    a1 = ALPHA + 1
    tag = "gould_corrected" if corrected else "gould"
    return {
        f"{tag}_base": (_total(c * _f(fam, k, 1) for k, c in enumerate(left)),
                        _total(c * _f(fam, n - k, 1, -X) for k, c in enumerate(right))),
        f"{tag}_reflection": (_total(c * _f(fam, k, 1) for k, c in enumerate(left)),
                              _total(c * (-1) ** (n - k) * _f(fam, n - k, 1, X + 1)
                                     for k, c in enumerate(right))),
        f"{tag}_first": (_total(c * _f(fam, k) for k, c in enumerate(left)),
                         _total(c * (-1) ** (n - k) * _f(fam, n - k, None, X + 1)
                                for k, c in enumerate(right))),
        f"{tag}_second": (_total(c * _f(fam, k + 1, a1) for k, c in enumerate(left)),
                          _total(c * (-1) ** (n - k) * (_f(fam, n + 1 - k, a1, X + 1) - _f(fam, n - k, a1, X + 1))
                                 for k, c in enumerate(right))),
    }


def check_gould(n: int, m: int, kind: str = "bernoulli") -> list:
    """Printed form followed by the corrected form."""
    if kind != "bernoulli":
        raise ValueError("Gould's identity is stated for Bernoulli polynomials only")
    params = {"n": n, "m": m}
    return (_check_dict("bernoulli", params, gould_sides(n, m))
            + _check_dict("bernoulli", params, gould_sides(n, m, corrected=True)))


# Lifting schemas


@dataclass(frozen=True)
class Term:
    """``coeff * f_index(x + shift)`` inside a schema sum."""

    coeff: MultiPoly
    index: int
    shift: MultiPoly = ZERO

    def __post_init__(self):
        for name in ("coeff", "shift"):
            value = getattr(self, name)
            if not isinstance(value, MultiPoly):
                object.__setattr__(self, name, const(value))


@dataclass(frozen=True)
class IdentitySchema:
    """Two finite sums of shifted Appell terms, indexed by ``n``.

    For the alpha/alpha-1 lifting the hypothesis is
    ``sum lhs coeff*f_k(x+shift) = sum rhs coeff*(x+shift)**k`` in the given family;
    for the same-order lifting it is the pure binomial identity
    ``sum lhs coeff*(x+shift)**k = sum rhs coeff*(x+shift)**k``.
    Coefficients and shifts must not involve ``x`` or ``alpha``.
    """

    name: str
    lhs: Callable[[int], Sequence[Term]]
    rhs: Callable[[int], Sequence[Term]]
    max_n: int = 6
    min_n: int = 0
    families: Optional[tuple] = None
    params: tuple = field(default=())

    @classmethod
    def from_rules(cls, name: str, U: Callable, V: Callable, u: Callable, v: Callable,
                   **kwargs) -> "IdentitySchema":
        """Schema ``sum_k U(n,k) f_k(x+u(n,k)) ~ sum_k V(n,k) (x+v(n,k))**k``."""
        return cls(name,
                   lambda n: [Term(U(n, k), k, u(n, k)) for k in range(n + 1)],
                   lambda n: [Term(V(n, k), k, v(n, k)) for k in range(n + 1)],
                   **kwargs)

    def applies_to(self, fam: AppellFamily) -> bool:
        return self.families is None or fam.name in self.families


def _sum_terms(terms: Sequence[Term], build: Callable[[Term], MultiPoly]) -> MultiPoly:
    return _total(t.coeff * build(t) for t in terms if t.coeff)


def _schema_params(schema: IdentitySchema, n: int) -> dict:
    return {"schema": schema.name, **dict(schema.params), "n": n}


def hypothesis_p3_sides(schema: IdentitySchema, fam: AppellFamily, n: int) -> tuple:
    return (_sum_terms(schema.lhs(n), lambda t: _f(fam, t.index, 1, X + t.shift)),
            _sum_terms(schema.rhs(n), lambda t: _mono(t.index, X + t.shift)))


def lift_p3_first_sides(schema: IdentitySchema, fam: AppellFamily, n: int) -> tuple:
    """``sum U F(k, a)(x+u_k)`` and ``sum V F(k, a-1)(x+v_k)``."""
    return (_sum_terms(schema.lhs(n), lambda t: _f(fam, t.index, None, X + t.shift)),
            _sum_terms(schema.rhs(n), lambda t: _f(fam, t.index, ALPHA - 1, X + t.shift)))


def lift_p3_second_sides(schema: IdentitySchema, fam: AppellFamily, n: int) -> tuple:
    a1 = ALPHA + 1

    def left(t):
        p = X + t.shift
        return _f(fam, t.index + 1, a1, p) - t.shift * _f(fam, t.index, a1, p)

    def right(t):
        p = X + t.shift
        return a1 * _f(fam, t.index + 1, None, p) - (X + a1 * t.shift) * _f(fam, t.index, None, p)

    return ALPHA * _sum_terms(schema.lhs(n), left), _sum_terms(schema.rhs(n), right)


def _lift(identity: str, hypothesis: Callable, conclusion: Callable,
          schema: IdentitySchema, fam: AppellFamily, n: int) -> CheckReport:
    params = _schema_params(schema, n)
    hl, hr = hypothesis(schema, fam, n)
    if hl != hr:
        return _report(identity, fam.name, params, hl, hr, stage="hypothesis")
    return _report(identity, fam.name, params, *conclusion(schema, fam, n))


def lift_p3_first(schema: IdentitySchema, fam: AppellFamily, n: int) -> CheckReport:
    return _lift("lift_p3_first", hypothesis_p3_sides, lift_p3_first_sides, schema, fam, n)


def lift_p3_second(schema: IdentitySchema, fam: AppellFamily, n: int) -> CheckReport:
    return _lift("lift_p3_second", hypothesis_p3_sides, lift_p3_second_sides, schema, fam, n)


def hypothesis_p_sides(schema: IdentitySchema, fam: AppellFamily, n: int) -> tuple:
    return (_sum_terms(schema.lhs(n), lambda t: _mono(t.index, X + t.shift)),
            _sum_terms(schema.rhs(n), lambda t: _mono(t.index, X + t.shift)))


def lift_p_first_sides(schema: IdentitySchema, fam: AppellFamily, n: int) -> tuple:
    def build(t):
        return _f(fam, t.index, None, X + t.shift)

    return _sum_terms(schema.lhs(n), build), _sum_terms(schema.rhs(n), build)


def lift_p_second_sides(schema: IdentitySchema, fam: AppellFamily, n: int) -> tuple:
    def build(t):
        p = X + t.shift
        return _f(fam, t.index + 1, None, p) - t.shift * _f(fam, t.index, None, p)

    return _sum_terms(schema.lhs(n), build), _sum_terms(schema.rhs(n), build)


def lift_p_first(schema: IdentitySchema, fam: AppellFamily, n: int) -> CheckReport:
    return _lift("lift_p_first", hypothesis_p_sides, lift_p_first_sides, schema, fam, n)


def lift_p_second(schema: IdentitySchema, fam: AppellFamily, n: int) -> CheckReport:
    return _lift("lift_p_second", hypothesis_p_sides, lift_p_second_sides, schema, fam, n)


# Schema catalog


def identity_schema() -> IdentitySchema:
    """``f_n(x) = x**n``: only true for the monomial family."""
    one = lambda n, k: 1 if k == n else 0  # noqa: E731
    nil = lambda n, k: 0  # noqa: E731
    return IdentitySchema.from_rules("identity", one, one, nil, nil, families=("monomial",))


def zero_schema() -> IdentitySchema:
    return IdentitySchema("zero", lambda n: [], lambda n: [])


def expansion_schema(fam: AppellFamily) -> IdentitySchema:
    """``f_n(x) = sum_k C(n,k) a_(n-k) x**k`` for the given family."""
    a = fam.moments
    return IdentitySchema.from_rules(
        "expansion",
        lambda n, k: 1 if k == n else 0,
        lambda n, k: comb(n, k) * a(n - k),
        lambda n, k: 0, lambda n, k: 0,
        families=(fam.name,))


def xia_schema(row: int) -> IdentitySchema:
    """Row ``row`` of Xia's identities as an alpha/alpha-1 schema."""

    def lhs(n):
        left, _, _, _ = _xia_row(row, n)
        return [Term(b, j) for b, j in left]

    def rhs(n):
        _, c, top, sign = _xia_row(row, n)
        return [Term(c, top), Term(sign * c, top, -1)]

    return IdentitySchema(f"xia{row}", lhs, rhs, min_n=1 if row in (2, 4) else 0,
                          families=(XIA_KINDS[row],))


def abel_schema(fam: AppellFamily) -> IdentitySchema:
    """``f_n(x + y)`` against Abel's expansion in ``x``, with ``y`` and ``q`` as parameters."""

    def lhs(n):
        return [Term(1, n, Y)]

    def rhs(n):
        out = []
        for j in range(n + 1):
            i = n - j
            point = Y - i * Q
            coeff = comb(n, j) * (_f(fam, i, 1, point) + i * Q * _f(fam, i - 1, 1, point))
            out.append(Term(coeff, j, i * Q))
        return out

    return IdentitySchema("abel", lhs, rhs, families=(fam.name,))


def gould_schema(m: int, corrected: bool = False) -> IdentitySchema:
    """Difference of both sides of Gould's identity (reflection form) against zero."""

    def lhs(n):
        left = [Term(c, k) for k, c in enumerate(_gould_left(n, m, corrected))]
        right = [Term(-comb(n, k) * comb(m + k, k) * (-1) ** (n - k), n - k, 1) for k in range(n + 1)]
        return left + right

    return IdentitySchema("gould_corrected" if corrected else "gould", lhs, lambda n: [],
                          families=("bernoulli",), params=(("m", m),))


def ljunggren_schema() -> IdentitySchema:
    return IdentitySchema(
        "ljunggren",
        lambda n: [Term(comb(n, k) * binomial_symbolic(LAMBDA, k) * Y ** k, n - k, Y) for k in range(n + 1)],
        lambda n: [Term(comb(n, k) * binomial_symbolic(LAMBDA + k, k) * Y ** k, n - k) for k in range(n + 1)])


def munarini_schema(corrected: bool = False) -> IdentitySchema:
    def lhs(n):
        return [Term(c, n - k, Y) for k, c in enumerate(_munarini_coeffs(n, corrected)[0])]

    def rhs(n):
        return [Term(c, n - k) for k, c in enumerate(_munarini_coeffs(n, corrected)[1])]

    return IdentitySchema("munarini_corrected" if corrected else "munarini", lhs, rhs)


def simons_schema() -> IdentitySchema:
    return IdentitySchema(
        "simons",
        lambda n: [Term((-1) ** (n + k) * _simons_coeff(n, k), k, 1) for k in range(n + 1)],
        lambda n: [Term(_simons_coeff(n, k), k) for k in range(n + 1)])


def lift_p3_catalog(fam: AppellFamily, max_m: int = 0) -> list:
    """Alpha/alpha-1 schemas whose hypothesis holds in ``fam``."""
    schemas = [identity_schema(), zero_schema(), expansion_schema(fam), abel_schema(fam)]
    schemas += [xia_schema(row) for row in (1, 2, 3, 4)]
    schemas += [gould_schema(m, c) for c in (False, True) for m in range(max_m + 1)]
    return [s for s in schemas if s.applies_to(fam)]


def lift_p_catalog() -> list:
    return [ljunggren_schema(), munarini_schema(), munarini_schema(corrected=True), simons_schema()]


# Suites

SUITES = (
    "symmetric", "symmetric_deriv", "lemma_umbral", "remark_second_order", "corollary_alpha",
    "abel", "xia", "ljunggren", "munarini", "simons", "gould", "lift_p3", "lift_p",
)

DEFAULT_FAMILIES = ("bernoulli", "euler", "monomial", "exponential", "random:1", "random:2", "random:3")


def _family_reports(fam_name: str, suites: Sequence[str], max_n: int, max_m: int,
                    max_p: Optional[int]) -> list:
    fam = get_family(fam_name)
    out: list = []
    ns = range(max_n + 1)
    nm = [(n, m) for n in ns for m in range(max_m + 1)]

    def ps(n, m):
        top = min(n, m) if max_p is None else min(n, m, max_p)
        return range(top + 1)

    for suite in suites:
        if suite == "symmetric":
            out += [check_symmetric(fam, n, m) for n, m in nm]
        elif suite == "symmetric_deriv":
            out += [check_symmetric_deriv(fam, n, m, p) for n, m in nm for p in ps(n, m)]
        elif suite == "lemma_umbral":
            for n in ns:
                out += check_lemma_umbral(fam, n)
        elif suite == "remark_second_order":
            out += [check_remark_second_order(fam, n) for n in ns]
        elif suite == "corollary_alpha":
            out += [check_corollary_alpha(fam, n, m, p) for n, m in nm for p in ps(n, m)]
        elif suite == "abel":
            for n in ns:
                out += check_abel(fam, n)
        elif suite == "xia":
            for row, kind in XIA_KINDS.items():
                if kind == fam_name:
                    for n in ns:
                        if n >= 1 or row in (1, 3):
                            out += check_xia(kind, row, n)
        elif suite in ("ljunggren", "munarini", "simons"):
            checker = {"ljunggren": check_ljunggren, "munarini": check_munarini,
                       "simons": check_simons}[suite]
            for n in ns:
                out += checker(fam, n)
        elif suite == "gould":
            if fam_name == "bernoulli":
                for n, m in nm:
                    out += check_gould(n, m)
        elif suite == "lift_p3":
            for schema in lift_p3_catalog(fam, max_m):
                for n in range(schema.min_n, max_n + 1):
                    out.append(lift_p3_first(schema, fam, n))
                    out.append(lift_p3_second(schema, fam, n))
        elif suite == "lift_p":
            for schema in lift_p_catalog():
                for n in range(schema.min_n, max_n + 1):
                    out.append(lift_p_first(schema, fam, n))
                    out.append(lift_p_second(schema, fam, n))
        else:
            raise ValueError(f"unknown suite {suite!r}")
    return out


def resolve_suites(selection: Union[str, Sequence[str]]) -> tuple:
    names = [selection] if isinstance(selection, str) else list(selection)
    if "all" in names:
        return SUITES
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return tuple(s for s in SUITES if s in names)


def run_suite(suite: Union[str, Sequence[str]] = "all", families: Sequence[str] = DEFAULT_FAMILIES,
              max_n: int = 4, max_m: Optional[int] = None, max_p: Optional[int] = None,
              jobs: Optional[int] = None) -> list:
    """Run the selected checkers over the grid; reports come back in a fixed order.

    Families are independent, so with ``jobs > 1`` they are processed in worker
    processes; results are reassembled in the configured family order.
    ``jobs`` defaults to the ``APPELL_JOBS`` environment variable (else 1).
    """
    if max_m is None:
        max_m = max_n
    if min(max_n, max_m, 0 if max_p is None else max_p) < 0:
        raise ValueError("ranges must be non-negative")
    suites = resolve_suites(suite)
    for name in families:
        get_family(name)
    if jobs is None:
        jobs = int(os.environ.get("APPELL_JOBS", "1") or 1)
    args = [(name, suites, max_n, max_m, max_p) for name in families]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, len(args))) as pool:
            chunks = list(pool.map(_family_reports, *zip(*args)))
    else:
        chunks = [_family_reports(*a) for a in args]
    return [r for chunk in chunks for r in chunk]


def suite_passed(reports: Iterable[CheckReport]) -> bool:
    return all(r.passed for r in reports)
