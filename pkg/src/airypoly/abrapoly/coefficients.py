"""Finite binomial/gamma sums feeding the closed forms of P_{2m+1}, Q_{2m+1}.

All values are exact Fractions.  Every gamma quotient has arguments in
thirds, so it is a finite rising product (see
:func:`airypoly.exactnum.gamma_quotient`).
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache

from airypoly.abrapoly.staircase import staircase
from airypoly.bellcore import delta_b
from airypoly.exactnum import binomial as C
from airypoly.exactnum import gamma_quotient as G

__all__ = [
    "CoeffKind",
    "InnerLimit",
    "a_coeff",
    "ad_coeffs",
    "c_coeff",
    "cbold_13",
    "cbold_23",
    "d0_coeff",
    "d2_coeff",
]

_1_3 = Fraction(1, 3)
_2_3 = Fraction(2, 3)
_4_3 = Fraction(4, 3)
_5_3 = Fraction(5, 3)
_8_3 = Fraction(8, 3)
_11_3 = Fraction(11, 3)


class CoeffKind(enum.Enum):
    C1_0 = "C1_0"
    C2_0 = "C2_0"
    C2_2 = "C2_2"
    C3_0 = "C3_0"
    C3_2 = "C3_2"
    C4_0 = "C4_0"
    C4_2 = "C4_2"


def _c1_0(m, p, i):
    return C(2 * m, i) * C(m + p - i, 2 * p + 1) * G(_5_3 - m + p + i, _2_3 - m - p + i) - C(
        2 * m, m + p + 1 + i
    ) * C(i + 2 * p + 1, 2 * p + 1) * G(_8_3 + 2 * p + i, _5_3 + i)


def _c2_0(m, p, i):
    return C(2 * m, i) * C(m - 1 + p - i, 2 * p) * G(_2_3 - m + p + i, _2_3 - m - p + i) + C(
        2 * m, m + p + 1 + i
    ) * C(i + 2 * p, 2 * p) * G(_8_3 + 2 * p + i, _8_3 + i)


def _c2_2(m, p, i):
    return _2_3 * C(2 * m, m + p + 1 + i) * C(i + 2 * p + 1, 2 * p + 1) * G(_8_3 + 2 * p + i, _5_3 + i)


def _c3_0(m, p, i):
    return C(2 * m + 1, i) * C(m + p - 1 - i, 2 * p) * G(_4_3 + m + p - i, _4_3 + m - p - i)


def _c3_2(m, p, i):
    return _1_3 * C(2 * m + 1, i) * C(m + p - i, 2 * p + 1) * G(_4_3 + m + p - i, _1_3 + m - p - i) + C(
        2 * m + 1, i + m + p + 2
    ) * C(i + 2 * p + 2, 2 * p + 2) * G(_11_3 + 2 * p + i, _5_3 + i)


def _c4_0(m, p, i):
    return C(2 * m + 1, i) * C(m + p - i, 2 * p + 1) * G(_4_3 + m + p - i, _1_3 + m - p - i)


def _c4_2(m, p, i):
    return C(2 * m + 1, i + m + p + 2) * C(i + 2 * p + 3, 2 * p + 3) * G(_11_3 + 2 * p + i, _2_3 + i)


_SUMMANDS = {
    CoeffKind.C1_0: _c1_0,
    CoeffKind.C2_0: _c2_0,
    CoeffKind.C2_2: _c2_2,
    CoeffKind.C3_0: _c3_0,
    CoeffKind.C3_2: _c3_2,
    CoeffKind.C4_0: _c4_0,
    CoeffKind.C4_2: _c4_2,
}


@lru_cache(maxsize=None)
def c_coeff(kind: CoeffKind, m: int, p: int) -> Fraction:
    """Sum over ``i = 0..m-1-p`` of the summand selected by ``kind``.

    The range is empty (value 0) when ``p >= m``.
    """
    kind = CoeffKind(kind)
    if m < 0 or p < 0:
        raise IndexError(f"{kind.value}({m}, {p}): indices must be non-negative")
    term = _SUMMANDS[kind]
    return sum((term(m, p, i) for i in range(m - p)), Fraction(0))


def _c(tag: str, m: int, p: int) -> Fraction:
    return c_coeff(CoeffKind[tag], m, p)


# -- assembler coefficients ------------------------------------------------


def a_coeff(m: int, j: int) -> Fraction:
    """``3^{2m} C1_0(m, m-1-j) + (4^j + C(2j+1, j)) 3^{2j+1} dB(2m, 2j+1)``."""
    if not 0 <= j <= m - 1:
        raise IndexError(f"A({m}, {j}) needs 0 <= j <= m-1")
    return 3 ** (2 * m) * _c("C1_0", m, m - 1 - j) + (4**j + C(2 * j + 1, j)) * 3 ** (2 * j + 1) * delta_b(
        2 * m, 2 * j + 1
    )


def d0_coeff(m: int, q: int) -> Fraction:
    if not 0 <= q <= m - 1:
        raise IndexError(f"D0({m}, {q}) needs 0 <= q <= m-1")
    return sum(
        (
            3 ** (2 * j) * (_c("C1_0", j, j - q) * delta_b(2 * m, 2 * j) + 3 * _c("C3_2", j, j - q) * delta_b(2 * m, 2 * j + 1))
            for j in range(q, m)
        ),
        Fraction(0),
    )


def d2_coeff(m: int, q: int) -> Fraction:
    if not 0 <= q <= m - 1:
        raise IndexError(f"D2({m}, {q}) needs 0 <= q <= m-1")
    return sum(
        (3 ** (2 * j + 1) * _c("C3_0", j, j - q) * delta_b(2 * m, 2 * j + 1) for j in range(q, m)),
        Fraction(0),
    )


def ad_coeffs(m: int, q: int) -> tuple[Fraction, Fraction, Fraction]:
    """``(A(m, q), D0(m, q), D2(m, q))``."""
    return a_coeff(m, q), d0_coeff(m, q), d2_coeff(m, q)


# -- simplified closed-form coefficients -------------------------------------


class InnerLimit(enum.Enum):
    """Upper limit of the inner j-sum in the Q coefficient.

    ``PRINTED`` uses ``Mcal(m) - 2 - q`` as typeset; ``CORRECTED`` uses
    ``Mcal(m+1) - 2 - q``.  The two differ only when ``m % 3 == 0``, and
    only the corrected limit reproduces the recurrence there.
    """

    CORRECTED = "corrected"
    PRINTED = "printed"


def cbold_13(m: int, q: int) -> Fraction:
    """Coefficient of ``z^eps (z^3/9)^q`` in ``P_{2m+1}`` (simplified form)."""
    st = staircase(m)
    M, Mc = st.M, st.Mcal
    if not 0 <= q <= Mc - 1:
        raise IndexError(f"C_1/3({m}, {q}) needs 0 <= q <= {Mc - 1}")
    two_2m = Fraction(1, 4**m)
    head = Fraction(3 ** (2 * Mc + 1)) * two_2m * (
        _c("C1_0", m, Mc - q) + m * (1 + Fraction(2 * m, 3)) * _c("C3_0", m - 1, Mc - q)
    )
    inner = Fraction(0)
    for j in range(Mc - q):
        base = 2 * M + 2 * q + 2 * j
        inner += 3 ** (2 * j) * (
            _c("C3_0", M + q + j, j) * delta_b(2 * m, base + 1)
            + 3 * _c("C1_0", M + 1 + q + j, j) * delta_b(2 * m, base + 2)
            + 9 * _c("C3_2", M + 1 + q + j, j) * delta_b(2 * m, base + 3)
        )
    tail = 3 ** (2 * q) * (
        (Fraction(2) ** (2 * q - 2 * Mc - 2) + two_2m * C(2 * M + 1 + 2 * q, M + q)) * delta_b(2 * m, 2 * M + 1 + 2 * q)
        + two_2m * inner
    )
    return head + tail


def cbold_23(m: int, q: int, inner_limit: InnerLimit | str = InnerLimit.CORRECTED) -> Fraction:
    """Coefficient of ``z^eps(m+1) (z^3/9)^q`` in ``Q_{2m+1}`` (simplified form)."""
    inner_limit = InnerLimit(inner_limit)
    st1 = staircase(m + 1)
    M1, Mc1 = st1.M, st1.Mcal
    if not 0 <= q <= Mc1 - 2:
        raise IndexError(f"C_2/3({m}, {q}) needs 0 <= q <= {Mc1 - 2}")
    two_2m = Fraction(1, 4**m)
    head = Fraction(3 ** (2 * Mc1)) * two_2m * (_c("C2_0", m, Mc1 - q) + _c("C2_2", m, Mc1 - 1 - q))
    mid = Fraction(6 ** (2 * q), 4**Mc1) * (
        delta_b(2 * m, 2 * M1 + 2 * q) - (2 + 3 * M1 + 3 * q) * delta_b(2 * m, 2 * M1 + 1 + 2 * q)
    )
    top = (Mc1 if inner_limit is InnerLimit.CORRECTED else staircase(m).Mcal) - 2 - q
    inner = Fraction(0)
    for j in range(top + 1):
        mm = j + M1 + 1 + q
        base = 2 * M1 + 2 * q + 2 * j
        inner += 3 ** (2 * j) * (
            (_c("C2_0", mm, j + 1) + _c("C2_2", mm, j)) * delta_b(2 * m, base + 2)
            - 3 * (_c("C4_0", mm, j + 1) + _c("C4_2", mm, j)) * delta_b(2 * m, base + 3)
        )
    return head + mid + Fraction(3 ** (2 * q + 2)) * two_2m * inner
