"""Partial Bell polynomials ``B(n, k)``.

The production path is the convolution recurrence

    B(n, k) = sum_{j=1}^{n-k+1} C(n-1, j-1) * x_j * B(n-j, k-1)

with ``B(0, 0) = 1``.  :func:`bell_oracle` recomputes the same values by
enumerating set partitions and is only meant for cross-checking.
"""

from __future__ import annotations

from math import comb
from typing import Iterator, Sequence

from .poly import MultiPoly, Registry

__all__ = [
    "BellTable",
    "bell_partial",
    "bell_oracle",
    "bell_symbols",
    "set_partitions",
]

ORACLE_LIMIT = 10


class BellTable:
    """Triangular table of ``B(n, k)`` for ``0 <= k <= n <= n_max``.

    ``args`` is the prefix ``(x_1, ..., x_m)`` of the argument sequence; entries
    may be integers, fractions or polynomials.  Row ``n`` reads at most ``x_n``.
    """

    def __init__(self, n_max: int, args: Sequence):
        if n_max < 0:
            raise ValueError("n_max must be non-negative")
        if len(args) < n_max:
            raise ValueError(f"B(n, k) with n <= {n_max} needs {n_max} arguments, got {len(args)}")
        self.n_max = n_max
        self.args = tuple(args)
        zero = self.args[0] * 0 if self.args else 0
        one = zero + 1
        rows = [[one]]
        for n in range(1, n_max + 1):
            row = [zero]
            for k in range(1, n + 1):
                acc = zero
                for j in range(1, n - k + 2):
                    prev = rows[n - j][k - 1] if k - 1 <= n - j else zero
                    if prev:
                        acc = acc + self.args[j - 1] * prev * comb(n - 1, j - 1)
                row.append(acc)
            rows.append(row)
        self._rows = rows
        self._zero = zero

    def __call__(self, n: int, k: int):
        if n < 0 or k < 0:
            raise ValueError("B(n, k) needs non-negative indices")
        if n > self.n_max:
            raise ValueError(f"n={n} exceeds table bound {self.n_max}")
        if k > n:
            return self._zero
        return self._rows[n][k]

    def row(self, n: int) -> list:
        return list(self._rows[n])


def bell_partial(n: int, k: int, args: Sequence):
    """Partial Bell polynomial ``B(n, k)`` evaluated at ``args``.

    >>> bell_partial(3, 2, [1, 1, 1])
    3
    """
    if k > n:
        zero = args[0] * 0 if len(args) else 0
        return zero
    if k == 0:
        zero = args[0] * 0 if len(args) else 0
        return zero + 1 if n == 0 else zero
    if len(args) < n - k + 1:
        raise ValueError(f"B({n}, {k}) reads x_1..x_{n - k + 1}; got {len(args)} arguments")
    padded = list(args[:n])
    while len(padded) < n:
        # entries beyond n-k+1 are never read
        padded.append(padded[0] * 0 if padded else 0)
    return BellTable(n, padded)(n, k)


def bell_symbols(n: int, prefix: str = "x") -> tuple:
    """Symbolic arguments ``x1..xn`` over their own registry."""
    reg = Registry(tuple(f"{prefix}{j}" for j in range(1, n + 1)))
    return tuple(MultiPoly.variable(name, reg) for name in reg.names)


def set_partitions(n: int) -> Iterator[list]:
    """All set partitions of ``{1..n}``, each a list of blocks."""
    if n == 0:
        yield []
        return
    for smaller in set_partitions(n - 1):
        for i in range(len(smaller)):
            yield smaller[:i] + [smaller[i] + [n]] + smaller[i + 1:]
        yield smaller + [[n]]


def bell_oracle(n: int, k: int, args: Sequence):
    """``B(n, k)`` by direct enumeration of set partitions (exponential time)."""
    if n > ORACLE_LIMIT:
        raise ValueError(f"bell_oracle is limited to n <= {ORACLE_LIMIT}")
    zero = args[0] * 0 if len(args) else 0
    total = zero
    for blocks in set_partitions(n):
        if len(blocks) != k:
            continue
        term = zero + 1
        for block in blocks:
            term = term * args[len(block) - 1]
        total = total + term
    return total
