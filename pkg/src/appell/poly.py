"""Exact rational arithmetic and sparse multivariate polynomials.

A :class:`MultiPoly` is a map from exponent vectors to :class:`fractions.Fraction`
coefficients over an ordered :class:`Registry` of indeterminate names.  Exponent
vectors are stored with trailing zeros stripped, so a polynomial written over a
registry is also a valid polynomial over any extension of that registry.

Values are immutable and always kept in canonical form (no zero coefficients,
reduced fractions), so equality is structural.

    >>> x, y = var("x"), var("y")
    >>> str((x + y) * (x - y))
    'x^2 - y^2'
    >>> str(substitute(x**2, "x", x + y))
    'x^2 + 2*x*y + y^2'
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping, Union

__all__ = [
    "Registry",
    "RegistryError",
    "DEFAULT_REGISTRY",
    "MultiPoly",
    "Scalar",
    "var",
    "const",
    "add",
    "mul",
    "substitute",
    "substitute_many",
    "derivative",
    "falling_factorial",
    "binomial_symbolic",
    "parse",
]

Scalar = Union[int, Fraction]
Monomial = tuple


class RegistryError(ValueError):
    """Raised when polynomials over incompatible registries are combined."""


class Registry:
    """Ordered, immutable list of indeterminate names.

    Registries are interned: constructing the same name tuple twice returns the
    same object.
    """

    _interned: dict = {}
    __slots__ = ("names", "_index")

    def __new__(cls, names: Iterable[str]):
        names = tuple(names)
        found = cls._interned.get(names)
        if found is not None:
            return found
        if len(set(names)) != len(names):
            raise RegistryError(f"duplicate indeterminate names in {names}")
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise RegistryError(f"invalid indeterminate name {name!r}")
        self = super().__new__(cls)
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}
        cls._interned[names] = self
        return self

    def __reduce__(self):
        return (Registry, (self.names,))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __repr__(self) -> str:
        return f"Registry({self.names!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise RegistryError(f"unknown indeterminate {name!r}") from None

    def extend(self, *names: str) -> "Registry":
        """Return a registry with ``names`` appended (existing names are skipped)."""
        return Registry(self.names + tuple(n for n in names if n not in self._index))

    def is_prefix_of(self, other: "Registry") -> bool:
        return other.names[: len(self.names)] == self.names

    def join(self, other: "Registry") -> "Registry":
        if self is other:
            return self
        if self.is_prefix_of(other):
            return other
        if other.is_prefix_of(self):
            return self
        raise RegistryError(f"registry mismatch: {self.names} vs {other.names}")


DEFAULT_REGISTRY = Registry(("x", "y", "alpha", "lambda", "beta", "gamma", "q", "t", "u"))


def _trim(mono: Iterable[int]) -> Monomial:
    mono = tuple(mono)
    end = len(mono)
    while end and mono[end - 1] == 0:
        end -= 1
    return mono[:end]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    return tuple(i + j for i, j in zip(a, b)) + a[len(b):]


class MultiPoly:
    """Sparse polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "registry", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] = (), registry: Registry = DEFAULT_REGISTRY):
        clean = {}
        for mono, c in dict(terms).items():
            if c:
                mono = _trim(mono)
                if len(mono) > len(registry):
                    raise RegistryError("exponent vector longer than registry")
                c = Fraction(c) + clean.get(mono, 0)
                if c:
                    clean[mono] = c
                else:
                    clean.pop(mono, None)
        self._terms = clean
        self.registry = registry
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, registry: Registry) -> "MultiPoly":
        # terms must already be canonical
        self = object.__new__(cls)
        self._terms = terms
        self.registry = registry
        self._hash = None
        return self

    # construction helpers

    @classmethod
    def constant(cls, c: Scalar, registry: Registry = DEFAULT_REGISTRY) -> "MultiPoly":
        c = Fraction(c)
        return cls._raw({(): c} if c else {}, registry)

    @classmethod
    def variable(cls, name: str, registry: Registry = DEFAULT_REGISTRY) -> "MultiPoly":
        i = registry.index(name)
        return cls._raw({(0,) * i + (1,): Fraction(1)}, registry)

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other, self.registry)
        return NotImplemented

    # inspection

    def terms(self) -> dict:
        """Copy of the ``{exponent tuple: Fraction}`` map."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def constant_value(self) -> Fraction:
        """Return the value of a constant polynomial; raise if it is not constant."""
        if not self.is_constant():
            raise ValueError(f"polynomial {self} is not constant")
        return self._terms.get((), Fraction(0))

    def coefficient(self, mono: Iterable[int]) -> Fraction:
        return self._terms.get(_trim(mono), Fraction(0))

    def degree(self, name: str) -> int:
        """Degree in one indeterminate; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        i = self.registry.index(name)
        return max((m[i] if i < len(m) else 0) for m in self._terms)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def variables(self) -> tuple:
        used = set()
        for m in self._terms:
            used.update(i for i, e in enumerate(m) if e)
        return tuple(self.registry.names[i] for i in sorted(used))

    def involves(self, name: str) -> bool:
        if name not in self.registry:
            return False
        i = self.registry.index(name)
        return any(i < len(m) and m[i] for m in self._terms)

    def collect(self, name: str) -> dict:
        """Split into ``{exponent of name: coefficient polynomial free of name}``."""
        i = self.registry.index(name)
        parts: dict = {}
        for m, c in self._terms.items():
            e = m[i] if i < len(m) else 0
            rest = _trim(m[:i] + (0,) + m[i + 1:]) if e else m
            parts.setdefault(e, {})[rest] = c
        return {e: MultiPoly._raw(t, self.registry) for e, t in parts.items()}

    def with_registry(self, registry: Registry) -> "MultiPoly":
        """Reinterpret over an extension of the current registry."""
        if not self.registry.is_prefix_of(registry):
            raise RegistryError(f"{registry.names} does not extend {self.registry.names}")
        return MultiPoly._raw(self._terms, registry)

    # arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        reg = self.registry.join(other.registry)
        if len(self._terms) < len(other._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s += c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return MultiPoly._raw(out, reg)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw({m: -c for m, c in self._terms.items()}, self.registry)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c: Scalar) -> "MultiPoly":
        c = Fraction(c)
        if not c:
            return MultiPoly._raw({}, self.registry)
        return MultiPoly._raw({m: v * c for m, v in self._terms.items()}, self.registry)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        reg = self.registry.join(other.registry)
        a, b = self._terms, other._terms
        if not a or not b:
            return MultiPoly._raw({}, reg)
        if len(b) == 1:
            ((mb, cb),) = b.items()
            return MultiPoly._raw({_mono_mul(m, mb): c * cb for m, c in a.items()}, reg)
        if len(a) == 1:
            ((ma, ca),) = a.items()
            return MultiPoly._raw({_mono_mul(ma, m): ca * c for m, c in b.items()}, reg)
        out: dict = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = _mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        return MultiPoly._raw({m: c for m, c in out.items() if c}, reg)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, MultiPoly):
            other = other.constant_value()
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division of a polynomial by zero")
        return self.scale(1 / Fraction(other))

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = MultiPoly.constant(1, self.registry)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # comparison

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # text form

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order (highest first)."""
        n = len(self.registry)

        def key(item):
            m = item[0]
            return (sum(m), m + (0,) * (n - len(m)))

        return sorted(self._terms.items(), key=key, reverse=True)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = self.registry.names
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e:
                    factors.append(f"{names[i]}^{e}")
            mono = "*".join(factors)
            if not mono:
                text = str(c)
            elif c == 1:
                text = mono
            elif c == -1:
                text = "-" + mono
            else:
                text = f"{c}*{mono}"
            parts.append(text)
        out = parts[0]
        for text in parts[1:]:
            out += " - " + text[1:] if text.startswith("-") else " + " + text
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({str(self)!r})"


def var(name: str, registry: Registry = DEFAULT_REGISTRY) -> MultiPoly:
    return MultiPoly.variable(name, registry)


def const(c: Scalar, registry: Registry = DEFAULT_REGISTRY) -> MultiPoly:
    return MultiPoly.constant(c, registry)


def add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def substitute(p: MultiPoly, name: str, value: Union[MultiPoly, Scalar]) -> MultiPoly:
    """Replace the indeterminate ``name`` by ``value`` and expand."""
    return substitute_many(p, {name: value})


def substitute_many(p: MultiPoly, values: Mapping[str, Union[MultiPoly, Scalar]]) -> MultiPoly:
    """Simultaneously replace several indeterminates."""
    reg = p.registry
    subs = {}
    for name, value in values.items():
        i = reg.index(name)
        if not isinstance(value, MultiPoly):
            value = MultiPoly.constant(value, reg)
        reg = reg.join(value.registry)
        subs[i] = value
    if not subs:
        return p
    powers: dict = {i: [MultiPoly.constant(1, reg)] for i in subs}

    def power(i, e):
        cache = powers[i]
        while len(cache) <= e:
            cache.append(cache[-1] * subs[i])
        return cache[e]

    # group terms by the exponents being replaced to share the expansion work
    groups: dict = {}
    for m, c in p.items():
        key = tuple(m[i] if i < len(m) else 0 for i in subs)
        rest = list(m)
        for i in subs:
            if i < len(rest):
                rest[i] = 0
        groups.setdefault(key, {})[_trim(rest)] = c
    result = MultiPoly.constant(0, reg)
    for key, rest in groups.items():
        factor = MultiPoly._raw(rest, reg)
        for i, e in zip(subs, key):
            if e:
                factor = factor * power(i, e)
        result = result + factor
    return result


def derivative(p: MultiPoly, name: str, times: int = 1) -> MultiPoly:
    """Iterated partial derivative with respect to ``name``."""
    if times < 0:
        raise ValueError("derivative order must be non-negative")
    i = p.registry.index(name)
    if times == 0:
        return p
    out = {}
    for m, c in p.items():
        e = m[i] if i < len(m) else 0
        if e < times:
            continue
        mono = list(m)
        mono[i] = e - times
        coeff = c
        for j in range(times):
            coeff *= e - j
        out[_trim(mono)] = coeff
    return MultiPoly._raw(out, p.registry)


def falling_factorial(base: Union[MultiPoly, Scalar], k: int) -> MultiPoly:
    """``base*(base-1)*...*(base-k+1)``; the empty product 1 when ``k == 0``."""
    if k < 0:
        raise ValueError("falling factorial length must be non-negative")
    if not isinstance(base, MultiPoly):
        base = MultiPoly.constant(base)
    result = MultiPoly.constant(1, base.registry)
    for j in range(k):
        result = result * (base - j)
    return result


def binomial_symbolic(top: Union[MultiPoly, Scalar], k: int) -> MultiPoly:
    """Binomial coefficient with polynomial upper argument; zero for ``k < 0``."""
    if k < 0:
        reg = top.registry if isinstance(top, MultiPoly) else DEFAULT_REGISTRY
        return MultiPoly.constant(0, reg)
    return falling_factorial(top, k).scale(Fraction(1, factorial(k)))


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def parse(text: str, registry: Registry = DEFAULT_REGISTRY) -> MultiPoly:
    """Parse polynomial text such as ``"3/4*x^2*y - alpha + 1/6"``.

    Accepts the canonical output of ``str(MultiPoly)`` plus parentheses.
    Division is only allowed by constants.
    """
    tokens = []
    for num, name, op in _TOKEN.findall(text):
        if num:
            tokens.append(("num", int(num)))
        elif name:
            tokens.append(("name", name))
        elif op.strip():
            tokens.append(("op", op))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        pos += 1
        return tokens[pos - 1]

    def error(msg):
        raise ValueError(f"cannot parse polynomial {text!r}: {msg}")

    def expr():
        result = term()
        while peek() in (("op", "+"), ("op", "-")):
            _, op = take()
            rhs = term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term():
        result = unary()
        while peek() in (("op", "*"), ("op", "/")):
            _, op = take()
            rhs = unary()
            if op == "*":
                result = result * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    error("division by a non-constant or zero")
                result = result / rhs.constant_value()
        return result

    def unary():
        if peek() == ("op", "-"):
            take()
            return -unary()
        if peek() == ("op", "+"):
            take()
            return unary()
        return power()

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            kind, e = take() if pos < len(tokens) else (None, None)
            if kind != "num":
                error("exponent must be a non-negative integer")
            base = base ** e
        return base

    def atom():
        kind, value = take() if pos < len(tokens) else (None, None)
        if kind == "num":
            return MultiPoly.constant(value, registry)
        if kind == "name":
            if value not in registry:
                error(f"unknown indeterminate {value!r}")
            return MultiPoly.variable(value, registry)
        if (kind, value) == ("op", "("):
            inner = expr()
            if peek() != ("op", ")"):
                error("unbalanced parentheses")
            take()
            return inner
        error(f"unexpected token {value!r}")

    if not tokens:
        error("empty input")
    result = expr()
    if pos != len(tokens):
        error(f"trailing input at token {tokens[pos][1]!r}")
    return result
