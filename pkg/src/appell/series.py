"""Truncated formal power series in ``t`` with polynomial coefficients.

Coefficients are stored in ordinary form: ``coeffs[n]`` is the coefficient of
``t**n``.  Use :func:`egf_coefficient` to read exponential-generating-function
values ``n! * [t**n]``.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence, Union

from .poly import DEFAULT_REGISTRY, MultiPoly, Registry, Scalar

__all__ = [
    "PowerSeries",
    "SeriesError",
    "series_mul",
    "series_inverse",
    "series_log",
    "series_exp",
    "series_pow_symbolic",
    "egf_coefficient",
    "exp_series",
    "from_egf",
]


class SeriesError(ValueError):
    """Raised for order mismatches, singular series and domain violations."""


Coeff = Union[MultiPoly, Scalar]


class PowerSeries:
    """Power series truncated after ``t**order``."""

    __slots__ = ("coeffs", "registry")

    def __init__(self, coeffs: Sequence[Coeff], registry: Registry = None):
        if not coeffs:
            raise SeriesError("a power series needs at least one coefficient")
        if registry is None:
            registry = DEFAULT_REGISTRY
            for c in coeffs:
                if isinstance(c, MultiPoly):
                    registry = registry.join(c.registry)
        self.registry = registry
        self.coeffs = tuple(
            c.with_registry(registry) if isinstance(c, MultiPoly) else MultiPoly.constant(c, registry)
            for c in coeffs
        )

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int, registry: Registry = DEFAULT_REGISTRY) -> "PowerSeries":
        return cls([1] + [0] * order, registry)

    def __getitem__(self, n: int) -> MultiPoly:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "PowerSeries([" + ", ".join(str(c) for c in self.coeffs) + "])"

    def _check(self, other: "PowerSeries") -> Registry:
        if self.order != other.order:
            raise SeriesError(f"truncation orders differ: {self.order} vs {other.order}")
        return self.registry.join(other.registry)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        reg = self._check(other)
        return PowerSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], reg)

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        reg = self._check(other)
        return PowerSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], reg)

    def __neg__(self) -> "PowerSeries":
        return PowerSeries([-c for c in self.coeffs], self.registry)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction, MultiPoly)):
            return PowerSeries([c * other for c in self.coeffs], self.registry)
        return NotImplemented

    __rmul__ = __mul__

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1], self.registry)

    def derivative(self) -> "PowerSeries":
        """d/dt; the result has order one less (but at least 0)."""
        if self.order == 0:
            return PowerSeries([0], self.registry)
        return PowerSeries([c * n for n, c in enumerate(self.coeffs) if n], self.registry)


def series_mul(f: PowerSeries, g: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the common order."""
    reg = f._check(g)
    a, b = f.coeffs, g.coeffs
    out = []
    for n in range(len(a)):
        acc = MultiPoly.constant(0, reg)
        for k in range(n + 1):
            if a[k] and b[n - k]:
                acc = acc + a[k] * b[n - k]
        out.append(acc)
    return PowerSeries(out, reg)


def _unit_constant(f: PowerSeries, what: str) -> Fraction:
    c0 = f.coeffs[0]
    if not c0.is_constant():
        raise SeriesError(f"{what}: constant term {c0} is not a rational number")
    return c0.constant_value()


def series_inverse(f: PowerSeries) -> PowerSeries:
    """Reciprocal series; the constant term must be a nonzero rational."""
    c0 = _unit_constant(f, "series_inverse")
    if not c0:
        raise SeriesError("series_inverse: zero constant term (singular series)")
    inv0 = 1 / c0
    a = f.coeffs
    g = [MultiPoly.constant(inv0, f.registry)]
    for n in range(1, len(a)):
        acc = MultiPoly.constant(0, f.registry)
        for k in range(1, n + 1):
            if a[k] and g[n - k]:
                acc = acc + a[k] * g[n - k]
        g.append(acc.scale(-inv0))
    return PowerSeries(g, f.registry)


def series_log(f: PowerSeries) -> PowerSeries:
    """Logarithm of a series with constant term 1, from ``f * (log f)' = f'``."""
    if _unit_constant(f, "series_log") != 1:
        raise SeriesError("series_log: constant term must be 1")
    a = f.coeffs
    h = [MultiPoly.constant(0, f.registry)]
    for n in range(1, len(a)):
        # n*h_n = n*a_n - sum_{k=1}^{n-1} k*h_k*a_{n-k}
        acc = a[n].scale(n)
        for k in range(1, n):
            if h[k] and a[n - k]:
                acc = acc - (h[k] * a[n - k]).scale(k)
        h.append(acc.scale(Fraction(1, n)))
    return PowerSeries(h, f.registry)


def series_exp(f: PowerSeries) -> PowerSeries:
    """Exponential of a series with zero constant term, from ``g' = f' g``."""
    if f.coeffs[0]:
        raise SeriesError("series_exp: constant term must be 0")
    a = f.coeffs
    g = [MultiPoly.constant(1, f.registry)]
    for n in range(1, len(a)):
        acc = MultiPoly.constant(0, f.registry)
        for k in range(1, n + 1):
            if a[k] and g[n - k]:
                acc = acc + (a[k] * g[n - k]).scale(k)
        g.append(acc.scale(Fraction(1, n)))
    return PowerSeries(g, f.registry)


def series_pow_symbolic(f: PowerSeries, exponent: Coeff) -> PowerSeries:
    """``f**exponent`` as ``exp(exponent * log f)``; ``exponent`` may be symbolic."""
    if _unit_constant(f, "series_pow_symbolic") != 1:
        raise SeriesError("series_pow_symbolic: constant term must be 1")
    return series_exp(series_log(f) * exponent)


def egf_coefficient(f: PowerSeries, n: int) -> MultiPoly:
    """``n! * [t**n] f``."""
    if n < 0 or n > f.order:
        raise SeriesError(f"index {n} outside truncation order {f.order}")
    return f.coeffs[n].scale(factorial(n))


def exp_series(order: int, scale: Coeff = 1, registry: Registry = DEFAULT_REGISTRY) -> PowerSeries:
    """``exp(scale * t)``; ``scale`` may be a polynomial such as ``x``."""
    if not isinstance(scale, MultiPoly):
        scale = MultiPoly.constant(scale, registry)
    coeffs = [MultiPoly.constant(1, scale.registry)]
    for n in range(1, order + 1):
        coeffs.append((coeffs[-1] * scale).scale(Fraction(1, n)))
    return PowerSeries(coeffs, scale.registry)


def from_egf(values: Sequence[Coeff], registry: Registry = DEFAULT_REGISTRY) -> PowerSeries:
    """Series whose EGF coefficients are ``values``."""
    return PowerSeries([Fraction(1, factorial(n)) * (v if isinstance(v, MultiPoly) else Fraction(v))
                        for n, v in enumerate(values)], registry)
