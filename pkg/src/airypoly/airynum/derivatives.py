"""Numeric derivatives of Ai and Ai' by three independent routes.

* polynomial: ``d^n Ai = P_n Ai + Q_n Ai'`` with exact P_n, Q_n;
* Bessel/Bell: the K_{2/3} expansion with Delta-B coefficients;
* chain rule: ``d^n Ai' = -(z d^n K + n d^{n-1} K) / (pi sqrt 3)`` with the
  z-derivatives of ``K_{2/3}(zeta(z))`` from Faa di Bruno.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Literal

from airypoly.abrapoly.closed import sigma_13, sigma_23
from airypoly.abrapoly.recurrence import pq_recurrence
from airypoly.airynum._context import DomainError, context, finish
from airypoly.airynum.airy import airy_eval
from airypoly.airynum.bessel import KPair, _kderiv, k_pair, zeta_deriv
from airypoly.bellcore import bell_partial, delta_b
from airypoly.exactnum import binomial

__all__ = [
    "GenfunResult",
    "SigmaReport",
    "dn_aiprime_bessel",
    "dn_aiprime_faa",
    "dn_airy",
    "genfun_check",
    "sigma_check",
]

MAX_POLY_ORDER = 60
DEFAULT_WORK_DPS = 30
# plain binary64 evaluation of the Bell sum is only trusted up to this order
BINARY64_MAX_N = 14
FAA_CROSSCHECK_MAX_N = 6

Which = Literal["ai", "aip"]


def _poly_value(poly, x):
    acc = 0 * x
    for c in reversed(poly.coeffs):
        acc = acc * x + c
    return acc


def dn_airy(n: int, z, which: Which = "ai", dps: int | None = None):
    """``d^n Ai(z)`` (``which="ai"``) or ``d^n Ai'(z)`` (``which="aip"``) via the exact polynomials."""
    if which not in ("ai", "aip"):
        raise ValueError(f"which must be 'ai' or 'aip', got {which!r}")
    if not 0 <= n <= MAX_POLY_ORDER:
        raise ValueError(f"derivative order must be in 0..{MAX_POLY_ORDER}, got {n}")
    idx = n if which == "ai" else n + 1
    row = pq_recurrence(idx)[idx]
    ctx = context(dps)
    av = airy_eval(z, dps=dps)
    x = ctx.mpf(av.z)
    return finish(ctx, _poly_value(row.P, x) * av.ai + _poly_value(row.Q, x) * av.aip, dps)


def _zeta_of(ctx, z):
    if z <= 0:
        raise DomainError(f"the Bessel route requires z > 0, got {z}")
    z = ctx.mpf(z)
    return z, 2 * z * ctx.sqrt(z) / 3


def _bessel_bracket(kp: KPair, n: int, sign: int):
    """Bracket of the Delta-B expansion and the largest single term in it."""
    ctx = kp.ctx
    half = 3 * kp.zeta / 2
    two3 = Fraction(2, 3)

    def ksum(k):
        return sum(binomial(k, i) * kp.order(two3 + 2 * i - k) for i in range(k + 1))

    terms = [sign * half**n * ksum(n)]
    terms += [(-half) ** k * delta_b(n, k) * ksum(k) for k in range(n) if delta_b(n, k)]
    total = ctx.fsum(terms)
    return total, max(abs(t) for t in terms)


def dn_aiprime_bessel(
    n: int,
    z,
    dps: int | None = None,
    work_dps: int | None = DEFAULT_WORK_DPS,
    bellfree_sign: Literal["corrected", "printed"] = "corrected",
    crosscheck: bool = True,
):
    """``d^n Ai'(z)`` from the Bessel/Bell expansion, ``n >= 1``, ``z > 0``.

    The sum cancels heavily for small ``z`` (condition number near 2e9 at
    ``z = 0.5, n = 10``), so it is evaluated at ``work_dps`` digits and
    rounded afterwards.  ``work_dps=None`` evaluates in plain binary64.

    For ``n <= 6`` the chain-rule route is evaluated alongside and a
    ``RuntimeWarning`` is issued if the two disagree.
    """
    if n < 1:
        raise ValueError(f"dn_aiprime_bessel needs n >= 1, got {n}")
    if bellfree_sign not in ("corrected", "printed"):
        raise ValueError(f"unknown bellfree_sign {bellfree_sign!r}")
    if work_dps is None:
        if dps is not None:
            raise ValueError("work_dps=None is binary64 only; pass dps=None")
        if n > BINARY64_MAX_N:
            warnings.warn(f"binary64 Bell sum at n={n} > {BINARY64_MAX_N} loses accuracy", RuntimeWarning, stacklevel=2)
        wd = None
    else:
        wd = max(work_dps, dps or 0)
    ctx = context(wd)
    zz, zeta = _zeta_of(ctx, z)
    kp = k_pair(zeta, wd)
    sign = 1 if bellfree_sign == "corrected" else (-1) ** n
    bracket, biggest = _bessel_bracket(kp, n, sign)
    pref = (-1) ** (n + 1) / (ctx.pi * ctx.sqrt(3) * 2**n * zz ** (n - 1))
    value = pref * bracket
    eps = 2.0**-52 if wd is None else 10.0 ** (-wd)
    if bracket and float(biggest / abs(bracket)) * eps > 1e-9:
        warnings.warn(
            f"Bell sum at n={n}, z={float(zz)} cancels beyond the working precision", RuntimeWarning, stacklevel=2
        )
    if crosscheck and n <= FAA_CROSSCHECK_MAX_N and bellfree_sign == "corrected":
        other = _faa(ctx, kp, zz, n, wd)
        if abs(other - value) > 1e-8 * max(abs(value), 1e-300):
            warnings.warn(f"chain-rule cross-check disagrees at n={n}, z={float(zz)}", RuntimeWarning, stacklevel=2)
    return finish(ctx, value, dps)


def _faa(ctx, kp: KPair, z, n: int, wd):
    xs = [zeta_deriv(i, z, wd) for i in range(1, n + 1)]
    two3 = Fraction(2, 3)

    def dk_dz(order):
        # d^order K_{2/3}(zeta(z)) / dz^order
        if order == 0:
            return kp.k23
        return ctx.fsum(_kderiv(kp, k, two3) * bell_partial(order, k, xs) for k in range(1, order + 1))

    return -(z * dk_dz(n) + n * dk_dz(n - 1)) / (ctx.pi * ctx.sqrt(3))


def dn_aiprime_faa(n: int, z, dps: int | None = None, work_dps: int | None = DEFAULT_WORK_DPS):
    """``d^n Ai'(z)`` by the chain rule through ``K_{2/3}(zeta(z))``, ``n >= 1``, ``z > 0``."""
    if n < 1:
        raise ValueError(f"dn_aiprime_faa needs n >= 1, got {n}")
    wd = None if work_dps is None and dps is None else max(work_dps or 0, dps or 0)
    ctx = context(wd)
    zz, zeta = _zeta_of(ctx, z)
    return finish(ctx, _faa(ctx, k_pair(zeta, wd), zz, n, wd), dps)


@dataclass(frozen=True)
class GenfunResult:
    z: float
    t: float
    N: int
    lhsP: float
    lhsQ: float
    rhsP: float
    rhsQ: float

    @property
    def deviation(self) -> float:
        return max(abs(self.lhsP - self.rhsP), abs(self.lhsQ - self.rhsQ))


def genfun_check(z, t, N: int = 30) -> GenfunResult:
    """Both sides of the generating functions for P_n and Q_n.

        pi [Bi'(z) Ai(z+t) - Ai'(z) Bi(z+t)] = sum_n t^n/n! P_n(z)
        pi [Ai(z) Bi(z+t) - Bi(z) Ai(z+t)]   = sum_n t^n/n! Q_n(z)

    The right sides keep the terms ``n = 0..N-1``.
    """
    if not 1 <= N <= MAX_POLY_ORDER:
        raise ValueError(f"N must be in 1..{MAX_POLY_ORDER}, got {N}")
    a = airy_eval(z)
    b = airy_eval(z + t)
    lhsP = math.pi * (a.bip * b.ai - a.aip * b.bi)
    lhsQ = math.pi * (a.ai * b.bi - a.bi * b.ai)
    rows = pq_recurrence(N - 1)
    rhsP = math.fsum(t**n / factorial(n) * rows[n].P(z) for n in range(N))
    rhsQ = math.fsum(t**n / factorial(n) * rows[n].Q(z) for n in range(N))
    return GenfunResult(float(z), float(t), N, lhsP, lhsQ, rhsP, rhsQ)


@dataclass
class SigmaReport:
    m: int
    z: float
    P_quotient: float
    P_exact: float
    Q_quotient: float
    Q_exact: float
    derivative: float
    derivative_ref: float
    deviations: dict[str, float] = field(default_factory=dict)

    @property
    def max_deviation(self) -> float:
        return max(self.deviations.values())

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "z": self.z,
            "P_quotient": self.P_quotient,
            "P_exact": self.P_exact,
            "Q_quotient": self.Q_quotient,
            "Q_exact": self.Q_exact,
            "derivative": self.derivative,
            "derivative_ref": self.derivative_ref,
            "deviations": dict(self.deviations),
        }


def _rel(a, b) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def sigma_check(m: int, z) -> SigmaReport:
    """Assemble ``sigma_1/3``, ``sigma_2/3`` numerically and compare with the exact rows.

    Exact sigma coefficients are evaluated at floating ``w = (zeta/2)^2``; the
    quotients are compared against ``P_{2m+1}(z)``, ``Q_{2m+1}(z)`` and the
    assembled derivative ``d^{2m} Ai'`` (using K values) against :func:`dn_airy`.
    """
    if m < 1:
        raise ValueError(f"sigma_check needs m >= 1, got {m}")
    if z <= 0:
        raise DomainError(f"sigma_check requires z > 0, got {z}")
    z = float(z)
    zeta = 2 * z**1.5 / 3
    w = (zeta / 2) ** 2
    s13 = math.fsum(float(c) * w**k for k, c in sigma_13(m).items())
    s23 = math.fsum(float(c) * w**k for k, c in sigma_23(m).items())
    half = 1.5 * zeta
    p_q = s13 / (3 * 4**m * half ** (4 * (m - 1) / 3))
    q_q = s23 / (4**m * half ** (4 * m / 3))
    row = pq_recurrence(2 * m + 1)[2 * m + 1]
    p_ex, q_ex = float(row.P(Fraction(z))), float(row.Q(Fraction(z)))
    kp = k_pair(zeta)
    ai_k = math.sqrt(z / 3) * kp.k13 / math.pi
    aip_k = -z * kp.k23 / (math.pi * math.sqrt(3))
    deriv = p_q * ai_k + q_q * aip_k
    ref = dn_airy(2 * m, z, "aip")
    return SigmaReport(
        m,
        z,
        p_q,
        p_ex,
        q_q,
        q_ex,
        deriv,
        ref,
        {"P": _rel(p_q, p_ex), "Q": _rel(q_q, q_ex), "derivative": _rel(deriv, ref)},
    )
