"""Exact construction of the Airy derivative polynomials P_n(z), Q_n(z)."""

from airypoly.abrapoly.closed import ClosedForm, Discrepancy, p_closed, pq_sigma, q_closed, sigma_13, sigma_23
from airypoly.abrapoly.coefficients import (
    CoeffKind,
    InnerLimit,
    a_coeff,
    ad_coeffs,
    c_coeff,
    cbold_13,
    cbold_23,
    d0_coeff,
    d2_coeff,
)
from airypoly.abrapoly.polynomial import IntPolynomial, NonIntegerCoefficientError
from airypoly.abrapoly.recurrence import PolyPair, even_from_odd, pq_diffdiff, pq_recurrence, step_diffdiff
from airypoly.abrapoly.staircase import StaircaseIndices, staircase
from airypoly.abrapoly.verify import CheckResult, CrossReport, staircase_checks, table1_check, verify_cross

__all__ = [
    "CheckResult",
    "ClosedForm",
    "CoeffKind",
    "CrossReport",
    "Discrepancy",
    "InnerLimit",
    "IntPolynomial",
    "NonIntegerCoefficientError",
    "PolyPair",
    "StaircaseIndices",
    "a_coeff",
    "ad_coeffs",
    "c_coeff",
    "cbold_13",
    "cbold_23",
    "d0_coeff",
    "d2_coeff",
    "even_from_odd",
    "p_closed",
    "pq_diffdiff",
    "pq_recurrence",
    "pq_sigma",
    "q_closed",
    "sigma_13",
    "sigma_23",
    "staircase",
    "staircase_checks",
    "step_diffdiff",
    "table1_check",
    "verify_cross",
]
