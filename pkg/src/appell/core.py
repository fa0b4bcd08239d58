"""Appell families, their order-alpha generalisations and the umbral operator.

An Appell family is fixed by its moment sequence ``a_n`` (``a_0 = 1``), that is by
``F(t) = sum a_n t^n/n!``.  Then ``f_n(x) = sum_k C(n, k) a_k x^(n-k)``, and the
order-alpha family is generated by ``F(t)**alpha * exp(x t)``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial, perm
from typing import Callable, Union

from .bell import BellTable
from .poly import (
    DEFAULT_REGISTRY,
    MultiPoly,
    Registry,
    Scalar,
    derivative,
    falling_factorial,
    substitute,
)
from .series import PowerSeries, egf_coefficient, exp_series, series_mul, series_pow_symbolic

__all__ = [
    "MomentSequence",
    "AppellFamily",
    "poly",
    "order_poly",
    "binomial_type_coeffs",
    "umbral_eval",
    "appell_derivative_check",
    "BELL_ROUTE",
    "SERIES_ROUTE",
]

BELL_ROUTE = "bell-route"
SERIES_ROUTE = "series-route"


class MomentSequence:
    """Memoised moments ``a_n`` of an Appell family.

    ``gen(n)`` must be deterministic.  The cache is guarded by a lock so the
    sequence behaves as a pure function when queried from several threads.
    """

    def __init__(self, name: str, gen: Callable[[int], Scalar]):
        self.name = name
        self._gen = gen
        self._cache: dict = {}
        self._lock = threading.Lock()
        a0 = self(0)
        if a0 != 1:
            raise ValueError(f"moment sequence {name!r} has a_0 = {a0}, expected 1")

    def __call__(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("moment index must be non-negative")
        try:
            return self._cache[n]
        except KeyError:
            pass
        with self._lock:
            if n not in self._cache:
                self._cache[n] = Fraction(self._gen(n))
            return self._cache[n]

    def __getitem__(self, n: int) -> Fraction:
        return self(n)

    def prefix(self, n: int) -> list:
        """``[a_0, ..., a_n]``."""
        return [self(j) for j in range(n + 1)]

    def __repr__(self) -> str:
        return f"MomentSequence({self.name!r})"


class AppellFamily:
    """Appell polynomials ``f_n(x) = (A + x)**n`` for the umbra ``A**n = a_n``.

    Polynomials are cached per family; the caches only ever grow and every
    entry is a pure function of the moments.
    """

    def __init__(self, moments: MomentSequence, registry: Registry = DEFAULT_REGISTRY,
                 x: str = "x", alpha: str = "alpha"):
        self.moments = moments
        self.registry = registry
        self.x = x
        self.alpha = alpha
        self._poly: dict = {}
        self._order: dict = {}
        self._gcoeff: dict = {}
        self._shifted: dict = {}
        self._power_series = None
        self._bell = None
        self._lock = threading.RLock()

    @property
    def name(self) -> str:
        return self.moments.name

    def __repr__(self) -> str:
        return f"AppellFamily({self.name!r})"

    def generating_series(self, order: int) -> PowerSeries:
        """``F(t)`` truncated after ``t**order``."""
        return PowerSeries([Fraction(self.moments(n), factorial(n)) for n in range(order + 1)], self.registry)

    def poly(self, n: int) -> MultiPoly:
        with self._lock:
            cached = self._poly.get(n)
            if cached is None:
                x = MultiPoly.variable(self.x, self.registry)
                terms = {}
                i = self.registry.index(self.x)
                for k in range(n + 1):
                    c = comb(n, k) * self.moments(k)
                    if c:
                        terms[(0,) * i + (n - k,)] = c
                cached = self._poly[n] = MultiPoly(terms, x.registry)
            return cached

    def binomial_type_coeffs(self, n: int) -> MultiPoly:
        """``g_n(alpha) = sum_k B(n, k)(a_1, a_2, ...) * (alpha)_k``."""
        with self._lock:
            cached = self._gcoeff.get(n)
            if cached is None:
                table = self._bell_table(n)
                alpha = MultiPoly.variable(self.alpha, self.registry)
                acc = MultiPoly.constant(0, self.registry)
                for k in range(n + 1):
                    b = table(n, k)
                    if b:
                        acc = acc + falling_factorial(alpha, k).scale(b)
                cached = self._gcoeff[n] = acc
            return cached

    def _bell_table(self, n: int) -> BellTable:
        if self._bell is None or self._bell.n_max < n:
            size = max(n, 2 * self._bell.n_max if self._bell else 8)
            self._bell = BellTable(size, [self.moments(j) for j in range(1, size + 1)])
        return self._bell

    def _alpha_power_series(self, order: int) -> PowerSeries:
        if self._power_series is None or self._power_series.order < order:
            size = max(order, 2 * self._power_series.order if self._power_series else 8)
            alpha = MultiPoly.variable(self.alpha, self.registry)
            self._power_series = series_pow_symbolic(self.generating_series(size), alpha)
        return self._power_series

    def order_poly(self, n: int, mode: str = BELL_ROUTE) -> MultiPoly:
        """``f_n^(alpha)(x)`` with ``alpha`` symbolic."""
        with self._lock:
            key = (n, mode)
            cached = self._order.get(key)
            if cached is not None:
                return cached
            if mode == BELL_ROUTE:
                i = self.registry.index(self.x)
                acc = MultiPoly.constant(0, self.registry)
                for k in range(n + 1):
                    g = self.binomial_type_coeffs(k)
                    if g:
                        acc = acc + g * MultiPoly({(0,) * i + (n - k,): comb(n, k)}, self.registry)
            elif mode == SERIES_ROUTE:
                fa = self._alpha_power_series(n).truncate(n)
                ext = exp_series(n, MultiPoly.variable(self.x, self.registry))
                acc = egf_coefficient(series_mul(fa, ext), n)
            else:
                raise ValueError(f"unknown order_poly mode {mode!r}")
            self._order[key] = acc
            return acc

    def shifted(self, n: int, order: Union[MultiPoly, Scalar, None] = None,
                shift: Union[MultiPoly, Scalar] = 0) -> MultiPoly:
        """``f_n^(order)(x + shift)``.

        ``order=None`` means the symbolic ``alpha`` itself.  Negative ``n`` gives 0,
        which is how the vanishing ``k * f_{k-1}`` terms at ``k = 0`` are handled.
        """
        if n < 0:
            return MultiPoly.constant(0, self.registry)
        if order is not None and not isinstance(order, MultiPoly):
            order = MultiPoly.constant(order, self.registry)
        if not isinstance(shift, MultiPoly):
            shift = MultiPoly.constant(shift, self.registry)
        key = (n, order, shift)
        with self._lock:
            cached = self._shifted.get(key)
            if cached is not None:
                return cached
        p = self.order_poly(n)
        if order is not None:
            p = substitute(p, self.alpha, order)
        if shift:
            p = substitute(p, self.x, MultiPoly.variable(self.x, self.registry) + shift)
        with self._lock:
            self._shifted[key] = p
        return p


def poly(fam: AppellFamily, n: int) -> MultiPoly:
    """``f_n(x)``: monic of degree ``n``."""
    return fam.poly(n)


def order_poly(fam: AppellFamily, n: int, mode: str = BELL_ROUTE) -> MultiPoly:
    """``f_n^(alpha)(x)`` by the Bell-polynomial route or by ``F**alpha * exp(xt)``."""
    return fam.order_poly(n, mode)


def binomial_type_coeffs(fam: AppellFamily, n: int) -> MultiPoly:
    return fam.binomial_type_coeffs(n)


def umbral_eval(q: MultiPoly, fam: AppellFamily, var: str = "u") -> MultiPoly:
    """Apply the linear rule ``u**j -> f_j(x)``, i.e. evaluate at ``u = A + x``.

    Coefficients of the powers of ``u`` may contain other parameters (``alpha``,
    ``y`` ...), but not ``x``: in ``q`` the variable ``x`` would be ambiguous.
    """
    if q.involves(fam.x):
        raise ValueError(f"umbral_eval: expression {q} already contains {fam.x!r}")
    if var not in q.registry:
        raise ValueError(f"umbral indeterminate {var!r} not in registry")
    result = MultiPoly.constant(0, q.registry.join(fam.registry))
    for j, coeff in sorted(q.collect(var).items()):
        result = result + coeff * fam.poly(j)
    return result


def appell_derivative_check(fam: AppellFamily, n: int, p: int) -> tuple:
    """Both sides of ``D_x^p f_n = (n)_p f_{n-p}``; ``(0, 0)`` when ``p > n``."""
    if p > n:
        zero = MultiPoly.constant(0, fam.registry)
        return zero, zero
    lhs = derivative(fam.poly(n), fam.x, p)
    rhs = fam.poly(n - p).scale(perm(n, p))
    return lhs, rhs

