"""Catalog of concrete Appell families.

Bernoulli and Euler moments are read off series reciprocals rather than
tables: ``t/(e^t - 1) = 1 / sum t^j/(j+1)!`` and ``2/(e^t + 1) = 1 / ((1 + e^t)/2)``.
Independent recurrences for both are kept here for cross-validation.
"""

from __future__ import annotations

import random
import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .core import AppellFamily, MomentSequence
from .poly import substitute, var
from .series import PowerSeries, egf_coefficient, exp_series, series_inverse

__all__ = [
    "bernoulli",
    "euler",
    "monomial",
    "exponential",
    "random_family",
    "from_moments",
    "get_family",
    "CATALOG_NAMES",
    "bernoulli_moments",
    "euler_moments",
    "bernoulli_moments_recurrence",
    "euler_moments_recurrence",
    "reflection_check",
]

CATALOG_NAMES = ("bernoulli", "euler", "monomial", "exponential")
DEFAULT_RANDOM_BOUND = 9


class _ReciprocalMoments:
    """EGF coefficients of ``1/g(t)``, recomputed at doubled order on demand."""

    def __init__(self, build_denominator):
        self._build = build_denominator
        self._values: list = []
        self._lock = threading.Lock()

    def __call__(self, n: int) -> Fraction:
        with self._lock:
            if n >= len(self._values):
                order = max(n, 2 * len(self._values), 8)
                inv = series_inverse(self._build(order))
                self._values = [egf_coefficient(inv, j).constant_value() for j in range(order + 1)]
            return self._values[n]


def _bernoulli_denominator(order: int) -> PowerSeries:
    # (e^t - 1)/t
    return PowerSeries([Fraction(1, factorial(j + 1)) for j in range(order + 1)])


def _euler_denominator(order: int) -> PowerSeries:
    # (1 + e^t)/2
    e = exp_series(order)
    return PowerSeries([(c + (1 if j == 0 else 0)) / 2 for j, c in enumerate(e.coeffs)])


_bernoulli_gen = _ReciprocalMoments(_bernoulli_denominator)
_euler_gen = _ReciprocalMoments(_euler_denominator)


def bernoulli_moments(n: int) -> Fraction:
    """Bernoulli numbers with ``B_1 = -1/2``."""
    return _bernoulli_gen(n)


def euler_moments(n: int) -> Fraction:
    """``E_n(0)``, the moments of ``2/(e^t + 1)``."""
    return _euler_gen(n)


def bernoulli_moments_recurrence(n_max: int) -> list:
    """Bernoulli numbers from ``sum_{k=0}^{n} C(n+1, k) B_k = 0`` (n >= 1)."""
    b = [Fraction(1)]
    for n in range(1, n_max + 1):
        b.append(-sum(comb(n + 1, k) * b[k] for k in range(n)) / (n + 1))
    return b


def euler_moments_recurrence(n_max: int) -> list:
    """``E_n(0)`` from ``(e^t + 1) * G(t) = 2``: ``2 e_n + sum_{k<n} C(n, k) e_k = 0``."""
    e = [Fraction(1)]
    for n in range(1, n_max + 1):
        e.append(-sum(comb(n, k) * e[k] for k in range(n)) / 2)
    return e


def from_moments(name: str, gen) -> AppellFamily:
    return AppellFamily(MomentSequence(name, gen))


def _random_moment(seed: int, bound: int, n: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    rng = random.Random(f"appell-random:{seed}:{bound}:{n}")
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


@lru_cache(maxsize=None)
def bernoulli() -> AppellFamily:
    return from_moments("bernoulli", bernoulli_moments)


@lru_cache(maxsize=None)
def euler() -> AppellFamily:
    return from_moments("euler", euler_moments)


@lru_cache(maxsize=None)
def monomial() -> AppellFamily:
    """``F = 1``, so ``f_n = x**n``."""
    return from_moments("monomial", lambda n: 1 if n == 0 else 0)


@lru_cache(maxsize=None)
def exponential() -> AppellFamily:
    """``F = e^t``, so ``f_n(x) = (x + 1)**n``."""
    return from_moments("exponential", lambda n: 1)


@lru_cache(maxsize=None)
def random_family(seed: int, bound: int = DEFAULT_RANDOM_BOUND) -> AppellFamily:
    """Moments drawn from rationals ``p/q`` with ``|p| <= bound``, ``1 <= q <= bound``.

    Each moment is seeded from ``(seed, bound, n)``, so values do not depend on
    query order.
    """
    if bound < 1:
        raise ValueError("random family bound must be positive")
    name = f"random:{seed}" if bound == DEFAULT_RANDOM_BOUND else f"random:{seed}:{bound}"
    return from_moments(name, lambda n: _random_moment(seed, bound, n))


def get_family(name: str) -> AppellFamily:
    """Resolve a catalog name: ``bernoulli``, ``euler``, ``monomial``,
    ``exponential`` or ``random:<seed>[:<bound>]``."""
    simple = {"bernoulli": bernoulli, "euler": euler, "monomial": monomial, "exponential": exponential}
    if name in simple:
        return simple[name]()
    if name.startswith("random:"):
        parts = name.split(":")[1:]
        try:
            values = [int(p) for p in parts]
        except ValueError:
            values = []
        if len(values) in (1, 2):
            return random_family(*values)
    raise KeyError(f"unknown family {name!r}")


def reflection_check(n: int) -> tuple:
    """``(B_n(-x), (-1)**n * B_n(x + 1))``."""
    x = var("x")
    b = bernoulli().poly(n)
    return substitute(b, "x", -x), substitute(b, "x", x + 1).scale((-1) ** n)

