"""Exact arithmetic kernel.

Python ``int`` is the arbitrary-precision integer and
:class:`fractions.Fraction` the exact rational; both are immutable and
always canonical (a Fraction keeps ``den > 0`` and ``gcd(num, den) == 1``).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational

__all__ = [
    "Fraction",
    "PoleError",
    "as_fraction",
    "binomial",
    "double_factorial",
    "gamma_quotient",
    "gamma_ratio",
]


class PoleError(ZeroDivisionError):
    """A gamma quotient hit a pole of the gamma function."""


def as_fraction(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: they would silently import binary rounding.
    """
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact rationals; use Fraction or 'p/q'")
    if isinstance(x, (Rational, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def double_factorial(k: int) -> int:
    """Odd double factorial ``1*3*5*...*k`` with ``(-1)!! = 1`` and ``(-3)!! = -1``.

    Only odd ``k >= -3`` is defined; anything else signals an index bug.
    """
    if k % 2 == 0 or k < -3:
        raise ValueError(f"double_factorial is defined for odd k >= -3, got {k}")
    if k == -3:
        return -1
    result = 1
    for factor in range(3, k + 1, 2):
        result *= factor
    return result


def binomial(n: int, k: int) -> int:
    """Binomial coefficient; 0 when ``k`` lies outside ``[0, n]``."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def gamma_quotient(x, y) -> Fraction:
    """Exact ``Gamma(x) / Gamma(y)`` for rationals with ``x - y`` an integer.

    Evaluated as a rising product (or its reciprocal), so negative
    non-integer arguments need no reflection formula.
    """
    x = as_fraction(x)
    y = as_fraction(y)
    diff = x - y
    if diff.denominator != 1:
        raise ValueError(f"Gamma({x})/Gamma({y}): arguments must differ by an integer")
    steps = int(diff)
    result = Fraction(1)
    if steps >= 0:
        for t in range(steps):
            factor = y + t
            if factor == 0:
                raise PoleError(f"Gamma({x})/Gamma({y}) has a pole factor at {factor}")
            result *= factor
    else:
        for t in range(-steps):
            factor = x + t
            if factor == 0:
                raise PoleError(f"Gamma({x})/Gamma({y}) has a pole factor at {factor}")
            result /= factor
    return result


def gamma_ratio(a, p) -> Fraction:
    """``Gamma(a + p) / Gamma(a - p)`` as the rising product of ``2p`` factors.

    ``p`` may be a half-integer (``2p`` must be a non-negative integer), which
    covers ratios such as ``Gamma(8/3)/Gamma(5/3)`` centred at ``a = 13/6``.
    """
    a = as_fraction(a)
    p = as_fraction(p)
    span = 2 * p
    if span < 0 or span.denominator != 1:
        raise ValueError(f"gamma_ratio needs 2p a non-negative integer, got p={p}")
    result = Fraction(1)
    start = a - p
    for t in range(int(span)):
        factor = start + t
        if factor == 0:
            raise PoleError(f"Gamma({a + p})/Gamma({a - p}) has a pole factor at 0")
        result *= factor
    return result
