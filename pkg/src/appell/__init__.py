"""Exact Appell polynomials of arbitrary order and a checker for umbral identities."""

from .bell import BellTable, bell_oracle, bell_partial, bell_symbols
from .core import (
    BELL_ROUTE,
    SERIES_ROUTE,
    AppellFamily,
    MomentSequence,
    appell_derivative_check,
    binomial_type_coeffs,
    order_poly,
    poly,
    umbral_eval,
)
from .families import bernoulli, euler, exponential, get_family, monomial, random_family
from .identities import CheckReport, IdentitySchema, Term, run_suite
from .poly import (
    DEFAULT_REGISTRY,
    MultiPoly,
    Registry,
    binomial_symbolic,
    derivative,
    falling_factorial,
    parse,
    substitute,
    substitute_many,
    var,
)
from .series import (
    PowerSeries,
    egf_coefficient,
    series_exp,
    series_inverse,
    series_log,
    series_mul,
    series_pow_symbolic,
)

__version__ = "0.1.0"
