"""Partial Bell polynomials evaluated at numeric argument sequences.

The working route is the triangular recurrence

    B(n, k) = sum_{i=1}^{n-k+1} C(n-1, i-1) * x_i * B(n-i, k-1)

with ``B(0, 0) = 1``.  :func:`bell_gf_coefficient` extracts the same value
from the power series ``(sum x_mu t^mu / mu!)^k / k!`` and is kept as an
independent check.

Argument sequences are 1-indexed in the mathematics and 0-indexed here:
``xs[0]`` is ``x_1``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from airypoly.exactnum import binomial, double_factorial

__all__ = [
    "BellTable",
    "bell_gf_coefficient",
    "bell_partial",
    "bell_special",
    "default_table",
    "delta_b",
    "special_argument",
]

DEFAULT_MAX_N = 64


def _check_indices(n: int, k: int, xs: Sequence) -> None:
    if n < 0 or k < 0:
        raise ValueError(f"Bell indices must be non-negative, got ({n}, {k})")
    if 1 <= k <= n and len(xs) < n - k + 1:
        raise ValueError(f"B({n},{k}) needs {n - k + 1} arguments, got {len(xs)}")


def bell_partial(n: int, k: int, xs: Sequence):
    """Partial Bell polynomial ``B(n, k)`` at ``xs`` via the triangular recurrence.

    Works for any ring elements supporting ``+`` and ``*`` (Fractions give
    exact results; floats and mpmath numbers are accepted too).
    """
    _check_indices(n, k, xs)
    if k > n:
        return 0
    if k == 0:
        return 1 if n == 0 else 0
    # row[j] holds B(j, kk) for the current degree kk
    prev = [1] + [0] * n
    for kk in range(1, k + 1):
        cur = [0] * (n + 1)
        for j in range(kk, n - (k - kk) + 1):
            acc = 0
            for i in range(1, j - kk + 2):
                b = prev[j - i]
                if b:
                    acc += binomial(j - 1, i - 1) * xs[i - 1] * b
            cur[j] = acc
        prev = cur
    return prev[n]


def bell_gf_coefficient(n: int, k: int, xs: Sequence) -> Fraction:
    """``B(n, k)`` as ``n! [t^n] (sum_mu x_mu t^mu / mu!)^k / k!``.

    Truncated power series are raised to the ``k``-th power by repeated
    exact multiplication.  Exists as an oracle for :func:`bell_partial`.
    """
    _check_indices(n, k, xs)
    if k > n:
        return Fraction(0)
    if k == 0:
        return Fraction(1 if n == 0 else 0)
    base = [Fraction(0)] * (n + 1)
    for mu in range(1, n - k + 2):
        base[mu] = Fraction(xs[mu - 1]) / factorial(mu)
    power = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(k):
        nxt = [Fraction(0)] * (n + 1)
        for i, a in enumerate(power):
            if a:
                for j in range(1, n + 1 - i):
                    if base[j]:
                        nxt[i + j] += a * base[j]
        power = nxt
    return power[n] * factorial(n) / factorial(k)


def special_argument(length: int) -> list[int]:
    """The sequence ``x_i = (2i - 5)!!`` for ``i = 1..length``: -1, 1, 1, 3, 15, ..."""
    return [double_factorial(2 * i - 5) for i in range(1, length + 1)]


class BellTable:
    """Triangle of ``B(nu, k)`` at ``x_i = (2i-5)!!`` for ``0 <= k <= nu <= max_n``.

    Built once by the recurrence, read-only afterwards.
    """

    def __init__(self, max_n: int = DEFAULT_MAX_N):
        if max_n < 0:
            raise ValueError("max_n must be non-negative")
        self.max_n = max_n
        xs = special_argument(max_n + 1)
        # columns by degree: col[k][nu] = B(nu, k)
        rows = [[0] * (max_n + 1) for _ in range(max_n + 1)]
        rows[0][0] = 1
        for nu in range(1, max_n + 1):
            for k in range(1, nu + 1):
                rows[nu][k] = sum(
                    binomial(nu - 1, i - 1) * xs[i - 1] * rows[nu - i][k - 1]
                    for i in range(1, nu - k + 2)
                )
        self._rows = tuple(tuple(r[: nu + 1]) for nu, r in enumerate(rows))

    def __getitem__(self, index: tuple[int, int]) -> int:
        n, k = index
        if not (0 <= n <= self.max_n) or k < 0:
            raise IndexError(f"({n}, {k}) outside Bell table of size {self.max_n}")
        if k > n:
            return 0
        return self._rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        return self._rows[n]

    def delta(self, n: int, k: int) -> int:
        if n < 1 or not 0 <= k <= n:
            raise IndexError(f"delta_b({n}, {k}) outside 1 <= n, 0 <= k <= n")
        return self[n, k] - 2 * n * self[n - 1, k]


@lru_cache(maxsize=None)
def default_table(max_n: int = DEFAULT_MAX_N) -> BellTable:
    return BellTable(max_n)


def _table_for(n: int) -> BellTable:
    size = DEFAULT_MAX_N
    while size < n:
        size *= 2
    return default_table(size)


def bell_special(n: int, k: int) -> int:
    """``B(n, k)`` at the double-factorial sequence ``x_i = (2i-5)!!``."""
    if not 0 <= k <= n:
        raise IndexError(f"bell_special({n}, {k}) outside 0 <= k <= n")
    return _table_for(n)[n, k]


def delta_b(n: int, k: int) -> int:
    """``B(n, k) - 2n B(n-1, k)`` at the double-factorial sequence."""
    if n < 1 or not 0 <= k <= n:
        raise IndexError(f"delta_b({n}, {k}) outside 1 <= n, 0 <= k <= n")
    return _table_for(n).delta(n, k)
