"""Floating-point evaluation of Airy and Bessel functions and numeric identity checks."""

from airypoly.airynum._context import DomainError
from airypoly.airynum.airy import AIRY_DOMAIN, AiryValues, airy_eval
from airypoly.airynum.bessel import KPair, ZetaMap, bessel_k, k_pair, kderiv, order_in_thirds, zeta_deriv
from airypoly.airynum.derivatives import (
    GenfunResult,
    SigmaReport,
    dn_aiprime_bessel,
    dn_aiprime_faa,
    dn_airy,
    genfun_check,
    sigma_check,
)
from airypoly.airynum.reduction import (
    LaurentPair,
    UnsupportedTargetError,
    k_as_pair,
    pq_from_bessel,
    reduce_order,
    reduce_order_raw,
)

__all__ = [
    "AIRY_DOMAIN",
    "AiryValues",
    "DomainError",
    "GenfunResult",
    "KPair",
    "LaurentPair",
    "SigmaReport",
    "UnsupportedTargetError",
    "ZetaMap",
    "airy_eval",
    "bessel_k",
    "dn_aiprime_bessel",
    "dn_aiprime_faa",
    "dn_airy",
    "genfun_check",
    "k_as_pair",
    "k_pair",
    "kderiv",
    "order_in_thirds",
    "pq_from_bessel",
    "reduce_order",
    "reduce_order_raw",
    "sigma_check",
    "zeta_deriv",
]
