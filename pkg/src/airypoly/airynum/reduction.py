"""Exact reduction of K_eta (eta in thirds) to the pair K_{1/3}, K_{2/3}.

Coefficients are finite Laurent polynomials in ``u = 2/zeta`` with exact
rational coefficients, stored as ``{exponent: Fraction}``.  Raising the
order by ``2 mu`` in one step:

    K_eta = K_{eta+2mu} * sum_p C(mu-1+p, 2p) G(eta+mu+p)/G(eta+mu-p) u^{2p}
          - K_{eta+2mu-1} * sum_p C(mu+p, 2p+1) G(eta+mu+1+p)/G(eta+mu-p) u^{2p+1}

for ``p = 0..mu-1`` (G the gamma function).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from airypoly.abrapoly.closed import ClosedForm, compare_terms
from airypoly.abrapoly.recurrence import pq_recurrence
from airypoly.bellcore import delta_b
from airypoly.exactnum import as_fraction, binomial, gamma_quotient

__all__ = [
    "LaurentPair",
    "UnsupportedTargetError",
    "k_as_pair",
    "pq_from_bessel",
    "reduce_order",
    "reduce_order_raw",
]

Laurent = dict[int, Fraction]

_THIRD = Fraction(1, 3)
_TWO_THIRDS = Fraction(2, 3)


class UnsupportedTargetError(ValueError):
    """The raised order cannot be normalised to the (K_1/3, K_2/3) pair."""


def _clean(series) -> Laurent:
    return {e: Fraction(c) for e, c in sorted(series.items()) if c}


def _mul(a: Laurent, b: Laurent) -> Laurent:
    out: dict[int, Fraction] = defaultdict(Fraction)
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] += ca * cb
    return _clean(out)


def _add(a: Laurent, b: Laurent, sign: int = 1) -> Laurent:
    out: dict[int, Fraction] = defaultdict(Fraction, a)
    for e, c in b.items():
        out[e] += sign * c
    return _clean(out)


def _eval_laurent(series: Laurent, u):
    return sum((c.numerator * u**e / c.denominator for e, c in series.items()), 0 * u)


@dataclass(frozen=True)
class LaurentPair:
    """``K = cK13(u) K_{1/3} + cK23(u) K_{2/3}`` with ``u = 2/zeta``."""

    cK13: Laurent = field(default_factory=dict)
    cK23: Laurent = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "cK13", _clean(self.cK13))
        object.__setattr__(self, "cK23", _clean(self.cK23))

    def __add__(self, other: "LaurentPair") -> "LaurentPair":
        return LaurentPair(_add(self.cK13, other.cK13), _add(self.cK23, other.cK23))

    def __sub__(self, other: "LaurentPair") -> "LaurentPair":
        return LaurentPair(_add(self.cK13, other.cK13, -1), _add(self.cK23, other.cK23, -1))

    def times(self, series: Laurent) -> "LaurentPair":
        return LaurentPair(_mul(self.cK13, series), _mul(self.cK23, series))

    def scale(self, c) -> "LaurentPair":
        return self.times({0: Fraction(c)})

    def evaluate(self, k13, k23, zeta):
        """Numeric value given ``K_{1/3}(zeta)``, ``K_{2/3}(zeta)``."""
        u = 2 / zeta
        return _eval_laurent(self.cK13, u) * k13 + _eval_laurent(self.cK23, u) * k23


K13 = LaurentPair({0: Fraction(1)}, {})
K23 = LaurentPair({}, {0: Fraction(1)})


def reduce_order_raw(eta, mu: int) -> tuple[Laurent, Laurent]:
    """``(cA, cB)`` with ``K_eta = cA(u) K_{eta+2mu} - cB(u) K_{eta+2mu-1}``."""
    eta = as_fraction(eta)
    if mu <= 0:
        raise ValueError(f"mu must be positive, got {mu}")
    cA: dict[int, Fraction] = {}
    cB: dict[int, Fraction] = {}
    centre = eta + mu
    for p in range(mu):
        cA[2 * p] = binomial(mu - 1 + p, 2 * p) * gamma_quotient(centre + p, centre - p)
        cB[2 * p + 1] = binomial(mu + p, 2 * p + 1) * gamma_quotient(centre + 1 + p, centre - p)
    return _clean(cA), _clean(cB)


def _base(nu: Fraction) -> LaurentPair:
    """``K_nu`` for ``nu`` in ``{+-1/3, +-2/3, -4/3, -5/3}`` in terms of the pair."""
    a = abs(nu)
    if a == _THIRD:
        return K13
    if a == _TWO_THIRDS:
        return K23
    if nu == Fraction(-5, 3):
        # K_{-5/3} = K_{1/3} + (2/3) u K_{2/3}
        return LaurentPair({0: Fraction(1)}, {1: _TWO_THIRDS})
    if nu == Fraction(-4, 3):
        # K_{-4/3} = K_{2/3} + (1/3) u K_{1/3}
        return LaurentPair({1: _THIRD}, {0: Fraction(1)})
    raise UnsupportedTargetError(f"K_{nu} is not a base order")


def reduce_order(eta, mu: int) -> LaurentPair:
    """Raise ``K_eta`` by ``2 mu`` and normalise to ``(K_{1/3}, K_{2/3})``.

    The target ``eta + 2 mu`` must be one of ``1/3, 2/3, -1/3, -2/3``.
    """
    eta = as_fraction(eta)
    target = eta + 2 * mu
    if abs(target) not in (_THIRD, _TWO_THIRDS):
        raise UnsupportedTargetError(f"eta + 2mu = {target} is not reducible to K_1/3, K_2/3")
    cA, cB = reduce_order_raw(eta, mu)
    return _base(target).times(cA) - _base(target - 1).times(cB)


def k_as_pair(nu) -> LaurentPair:
    """Any ``K_nu`` with ``nu`` a non-integer multiple of 1/3, exactly in the pair."""
    nu = as_fraction(nu)
    if nu.denominator != 3:
        raise UnsupportedTargetError(f"order {nu} is not a non-integer multiple of 1/3")
    if abs(nu) in (_THIRD, _TWO_THIRDS):
        return _base(nu)
    if nu > 0:
        nu = -nu
    # smallest mu landing in [-2/3, 2/3]
    mu = 1
    while abs(nu + 2 * mu) not in (_THIRD, _TWO_THIRDS):
        mu += 1
    return reduce_order(nu, mu)


def _bessel_sum(k: int) -> LaurentPair:
    """``sum_i C(k, i) K_{2/3+2i-k}`` in the pair."""
    total = LaurentPair()
    for i in range(k + 1):
        total = total + k_as_pair(_TWO_THIRDS + 2 * i - k).scale(binomial(k, i))
    return total


BellFreeSign = Literal["corrected", "printed"]


def pq_from_bessel(n: int, bellfree_sign: BellFreeSign = "corrected") -> tuple[ClosedForm, ClosedForm]:
    """Exact ``(P_{n+1}, Q_{n+1})`` from the Bessel/Bell expansion of ``d^n Ai'``.

    The bracket is ``s (3 zeta/2)^n S_n + sum_{k<n} (-3 zeta/2)^k dB(n,k) S_k``
    with ``S_k`` from :func:`_bessel_sum`.  The sign ``s`` of the Bell-free
    term is ``+1`` when carried through from ``(-3 zeta)^n d^n K``; the
    ``"printed"`` variant uses ``(-1)^n`` instead, which agrees only for even n.
    """
    if n < 1:
        raise ValueError(f"pq_from_bessel needs n >= 1, got {n}")
    if bellfree_sign not in ("corrected", "printed"):
        raise ValueError(f"unknown bellfree_sign {bellfree_sign!r}")
    # (3 zeta / 2) = 3 / u
    lead = 1 if bellfree_sign == "corrected" else (-1) ** n
    bracket = _bessel_sum(n).times({-n: Fraction(lead * 3**n)})
    for k in range(n):
        db = delta_b(n, k)
        if db:
            bracket = bracket + _bessel_sum(k).times({-k: Fraction(db * (-3) ** k)})
    # d^n Ai' = (-1)^{n+1} / (2^n z^{n-1}) [L13 Ai z^{-1/2} - L23 Ai' z^{-1}],
    # with u^e = 3^e z^{-3e/2}
    sign = (-1) ** (n + 1)
    p_terms: dict[int, Fraction] = defaultdict(Fraction)
    q_terms: dict[int, Fraction] = defaultdict(Fraction)
    for target, series, offset, s in ((p_terms, bracket.cK13, 1, sign), (q_terms, bracket.cK23, 2, -sign)):
        for e, c in series.items():
            twice = -3 * e - offset - 2 * (n - 1)
            if twice % 2:
                raise ArithmeticError(f"half-integer power z^({twice}/2) survives at n={n}")
            target[twice // 2] += s * c * Fraction(3) ** e / 2**n
    ref = pq_recurrence(n + 1)[n + 1]
    tag = "bessel" if bellfree_sign == "corrected" else "bessel,printed-sign"
    p_terms = _clean(p_terms)
    q_terms = _clean(q_terms)
    return (
        ClosedForm(f"P_{n + 1}[{tag}]", n + 1, p_terms, ref.P, compare_terms(f"P_{n + 1}[{tag}]", p_terms, ref.P)),
        ClosedForm(f"Q_{n + 1}[{tag}]", n + 1, q_terms, ref.Q, compare_terms(f"Q_{n + 1}[{tag}]", q_terms, ref.Q)),
    )
