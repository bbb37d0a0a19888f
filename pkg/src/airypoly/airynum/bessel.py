"""K_nu for orders in thirds, obtained from the Airy functions.

    Ai(z)  =  (1/pi) sqrt(z/3) K_{1/3}(zeta)
    Ai'(z) = -(1/pi) (z/sqrt 3) K_{2/3}(zeta),      zeta = (2/3) z^{3/2}

Other orders follow from parity ``K_{-nu} = K_nu`` and the upward recurrence
``K_{nu+1} = K_{nu-1} + (2 nu / zeta) K_nu``, which is stable for K.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from airypoly.airynum._context import DomainError, context, finish
from airypoly.airynum.airy import AIRY_DOMAIN, airy_eval
from airypoly.exactnum import binomial, double_factorial

__all__ = [
    "KPair",
    "ZetaMap",
    "bessel_k",
    "k_pair",
    "kderiv",
    "order_in_thirds",
    "zeta_deriv",
]

MAX_STABLE_ORDER = 25
ZETA_MAX = 2.0 / 3.0 * AIRY_DOMAIN**1.5


@dataclass(frozen=True)
class ZetaMap:
    z: float
    zeta: float

    @classmethod
    def from_z(cls, z) -> "ZetaMap":
        if z <= 0:
            raise DomainError(f"zeta map needs z > 0, got {z}")
        return cls(z, 2 * z**1.5 / 3)

    @classmethod
    def from_zeta(cls, zeta) -> "ZetaMap":
        if zeta <= 0:
            raise DomainError(f"zeta must be positive, got {zeta}")
        return cls((1.5 * zeta) ** (2.0 / 3.0), zeta)


def order_in_thirds(nu) -> Fraction:
    """Parse an order that must be a non-integer multiple of 1/3."""
    if isinstance(nu, float):
        frac = Fraction(nu).limit_denominator(3)
        if abs(float(frac) - nu) > 1e-12:
            raise ValueError(f"order {nu} is not a multiple of 1/3")
    else:
        frac = Fraction(nu)
    if frac.denominator != 3:
        raise ValueError(f"order {frac} is not reachable from K_1/3, K_2/3")
    return frac


@dataclass(frozen=True)
class KPair:
    """``K_{1/3}(zeta)`` and ``K_{2/3}(zeta)`` evaluated in one context."""

    zeta: object
    k13: object
    k23: object
    ctx: object

    def order(self, nu) -> object:
        nu = abs(order_in_thirds(nu))
        if nu > MAX_STABLE_ORDER:
            warnings.warn(f"upward recurrence over {float(nu):.1f} orders may lose accuracy", RuntimeWarning, stacklevel=3)
        frac = nu - int(nu)
        # (K_{frac-1}, K_frac), with K_{-1/3} = K_{1/3} and K_{-2/3} = K_{2/3}
        prev, cur = (self.k23, self.k13) if frac == Fraction(1, 3) else (self.k13, self.k23)
        mu = frac
        ctx = self.ctx
        two_over = 2 / self.zeta
        while mu < nu:
            prev, cur = cur, prev + ctx.mpf(mu.numerator) / mu.denominator * two_over * cur
            mu += 1
        return cur

    def ladder(self, orders) -> dict[Fraction, object]:
        return {Fraction(nu): self.order(nu) for nu in orders}


def k_pair(zeta, dps: int | None = None) -> KPair:
    """Evaluate ``K_{1/3}``, ``K_{2/3}`` at ``zeta`` by inverting the Airy relations."""
    if zeta <= 0:
        raise DomainError(f"K_nu(zeta) requires zeta > 0, got {zeta}")
    if zeta > ZETA_MAX:
        raise DomainError(f"zeta={zeta} maps outside the Airy series domain |z| <= {AIRY_DOMAIN}")
    ctx = context(dps)
    zeta = ctx.mpf(zeta)
    z = ctx.cbrt((3 * zeta / 2) ** 2)
    av = airy_eval(z, dps=dps)
    k13 = ctx.pi * av.ai / ctx.sqrt(z / 3)
    k23 = -ctx.pi * ctx.sqrt(3) * av.aip / z
    return KPair(zeta, k13, k23, ctx)


def bessel_k(nu, zeta, dps: int | None = None):
    """``K_nu(zeta)`` for ``nu`` in ``{+-1/3, +-2/3} + Z`` and ``zeta > 0``."""
    nu = order_in_thirds(nu)
    kp = k_pair(zeta, dps)
    return finish(kp.ctx, kp.order(nu), dps)


def _kderiv(kp: KPair, n: int, nu: Fraction):
    total = sum(binomial(n, i) * kp.order(nu + 2 * i - n) for i in range(n + 1))
    return (-1) ** n * total / 2**n


def kderiv(n: int, nu, zeta, dps: int | None = None):
    """``d^n K_nu / d zeta^n = ((-1)^n / 2^n) sum_i C(n, i) K_{nu+2i-n}``."""
    if n < 0:
        raise ValueError(f"derivative order must be non-negative, got {n}")
    nu = order_in_thirds(nu)
    kp = k_pair(zeta, dps)
    return finish(kp.ctx, _kderiv(kp, n, nu), dps)


def zeta_deriv(kappa: int, z, dps: int | None = None):
    """``d^kappa zeta / dz^kappa = 2 (-2)^{-kappa} (2 kappa - 5)!! (3 zeta / 2)^{1 - 2 kappa / 3}``."""
    if kappa < 1:
        raise ValueError(f"kappa must be >= 1, got {kappa}")
    if z <= 0:
        raise DomainError(f"zeta_deriv requires z > 0, got {z}")
    ctx = context(dps)
    z = ctx.mpf(z)
    w = z * ctx.sqrt(z)  # 3 zeta / 2
    value = 2 * ctx.mpf(-2) ** (-kappa) * double_factorial(2 * kappa - 5) * w ** (1 - ctx.mpf(2 * kappa) / 3)
    return finish(ctx, value, dps)
