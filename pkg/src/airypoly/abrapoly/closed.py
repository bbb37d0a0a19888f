"""Closed-form assembly of P_{2m+1} and Q_{2m+1}.

Three exact assemblies are provided, each compared against the recurrence:

* ``simplified``: ``m^2 z^{m-1} + z^eps * sum_q C_1/3(m, q) (z^3/9)^q`` for P,
  and the analogous ``z^m + C(m,3)(3m+1) z^{m-3} + ...`` for Q;
* ``staircase``: P from the unsimplified A/D coefficients;
* ``sigma``: both polynomials read off the Bessel-sum numerators
  ``sigma_1/3(m; zeta)`` and ``sigma_2/3(m; zeta)``, expanded as Laurent
  polynomials in ``w = (zeta/2)^2 = z^3/9``.

Disagreement with the recurrence never raises; it is reported as a list
of :class:`Discrepancy` entries.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from airypoly.abrapoly.coefficients import (
    CoeffKind,
    InnerLimit,
    a_coeff,
    c_coeff,
    cbold_13,
    cbold_23,
    d0_coeff,
    d2_coeff,
)
from airypoly.abrapoly.polynomial import IntPolynomial, NonIntegerCoefficientError
from airypoly.abrapoly.recurrence import pq_recurrence
from airypoly.abrapoly.staircase import staircase
from airypoly.bellcore import delta_b
from airypoly.exactnum import binomial as C
from airypoly.exactnum import double_factorial

__all__ = [
    "ClosedForm",
    "Discrepancy",
    "compare_terms",
    "p_closed",
    "pq_sigma",
    "q_closed",
    "sigma_13",
    "sigma_23",
]

PForm = Literal["simplified", "staircase", "sigma"]
QForm = Literal["simplified", "sigma"]


@dataclass(frozen=True)
class Discrepancy:
    """One coefficient where a construction disagrees with a reference."""

    location: str
    exponent: int
    computed: Fraction
    reference: Fraction
    kind: str = "mismatch"

    def to_dict(self) -> dict:
        return {
            "location": self.location,
            "exponent": self.exponent,
            "computed": str(self.computed),
            "reference": str(self.reference),
            "kind": self.kind,
        }


@dataclass(frozen=True)
class ClosedForm:
    """Result of a closed-form assembly with its comparison against the recurrence."""

    label: str
    n: int
    terms: dict[int, Fraction]
    reference: IntPolynomial
    diagnostics: tuple[Discrepancy, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.diagnostics

    @property
    def polynomial(self) -> IntPolynomial:
        """The assembled polynomial; raises if any coefficient is not an integer."""
        return IntPolynomial.from_rational_terms(self.terms)


def compare_terms(label: str, terms: dict[int, Fraction], reference: IntPolynomial) -> tuple[Discrepancy, ...]:
    out = []
    exps = sorted(set(terms) | {e for e, _ in reference.terms()})
    for e in exps:
        got = Fraction(terms.get(e, 0))
        want = Fraction(reference.coeff(e)) if e >= 0 else Fraction(0)
        if got.denominator != 1:
            out.append(Discrepancy(label, e, got, want, "non-integer"))
        elif got != want:
            out.append(Discrepancy(label, e, got, want))
    return tuple(out)


def _finish(label: str, n: int, which: str, terms, strict: bool) -> ClosedForm:
    terms = {e: Fraction(c) for e, c in sorted(terms.items()) if c}
    ref_pair = pq_recurrence(n)[n]
    ref = ref_pair.P if which == "P" else ref_pair.Q
    result = ClosedForm(label, n, terms, ref, compare_terms(label, terms, ref))
    if strict:
        bad = [d for d in result.diagnostics if d.kind == "non-integer"]
        if bad:
            raise NonIntegerCoefficientError(f"{label}: coefficient of z^{bad[0].exponent} is {bad[0].computed}")
    return result


# -- sigma numerators -------------------------------------------------------


def _c(tag: str, m: int, p: int) -> Fraction:
    return c_coeff(CoeffKind[tag], m, p)


def sigma_13(m: int) -> dict[int, Fraction]:
    """``sigma_1/3(m; zeta)`` as ``{k: coeff of w^k}`` with ``w = (zeta/2)^2``.

    ``C3(j, p; zeta) = C3_0 + (zeta/2)^{-2} C3_2`` is expanded in place.
    """
    if m < 1:
        raise ValueError("sigma_13 needs m >= 1")
    s: dict[int, Fraction] = defaultdict(Fraction)
    for j in range(m):
        s[j] += 3 ** (2 * m) * _c("C1_0", m, m - 1 - j) + (4**j + C(2 * j + 1, j)) * 3 ** (2 * j + 1) * delta_b(
            2 * m, 2 * j + 1
        )
    # the double sum is empty for m = 1
    for q in range(1, m):
        for j in range(q, m):
            s[q - 1] += 3 ** (2 * j) * _c("C1_0", j, j - q) * delta_b(2 * m, 2 * j)
            s[q] += 3 ** (2 * j + 1) * _c("C3_0", j, j - q) * delta_b(2 * m, 2 * j + 1)
            s[q - 1] += 3 ** (2 * j + 1) * _c("C3_2", j, j - q) * delta_b(2 * m, 2 * j + 1)
    return {k: v for k, v in sorted(s.items()) if v}


def sigma_23(m: int) -> dict[int, Fraction]:
    """``sigma_2/3(m; zeta)`` as ``{k: coeff of w^k}`` with ``w = (zeta/2)^2``."""
    if m < 1:
        raise ValueError("sigma_23 needs m >= 1")
    s: dict[int, Fraction] = defaultdict(Fraction)
    s[0] += 10 * double_factorial(4 * m - 7)
    s[m] += C(2 * m, m) * 3 ** (2 * m)
    for j in range(1, m + 1):
        s[j] += 3 ** (2 * m) * _c("C2_0", m, m - j)
        s[j - 1] += 3 ** (2 * m) * _c("C2_2", m, m - j)
    for j in range(1, m):
        s[j] += 3 ** (2 * j) * (
            C(2 * j, j) * delta_b(2 * m, 2 * j)
            - ((1 + Fraction(3 * j, 2)) * 4**j + (j + 1) * C(2 * j + 1, j)) * delta_b(2 * m, 2 * j + 1)
        )
    for q in range(1, m):
        for j in range(q, m):
            w = 3 ** (2 * j)
            s[q] += w * (_c("C2_0", j, j - q) * delta_b(2 * m, 2 * j) - 3 * _c("C4_0", j, j - q) * delta_b(2 * m, 2 * j + 1))
            s[q - 1] += w * (
                _c("C2_2", j, j - q) * delta_b(2 * m, 2 * j) - 3 * _c("C4_2", j, j - q) * delta_b(2 * m, 2 * j + 1)
            )
    return {k: v for k, v in sorted(s.items()) if v}


def _w_to_z(series: dict[int, Fraction], scale: Fraction, z_shift: int) -> dict[int, Fraction]:
    # w^k = (z^3/9)^k; multiply by scale and divide by z^z_shift
    out: dict[int, Fraction] = defaultdict(Fraction)
    for k, c in series.items():
        out[3 * k - z_shift] += c * scale / Fraction(9) ** k
    return {e: c for e, c in out.items() if c}


def _sigma_p_terms(m: int) -> dict[int, Fraction]:
    return _w_to_z(sigma_13(m), Fraction(1, 3 * 4**m), 2 * m - 2)


def _sigma_q_terms(m: int) -> dict[int, Fraction]:
    return _w_to_z(sigma_23(m), Fraction(1, 4**m), 2 * m)


def pq_sigma(m: int, strict: bool = False) -> tuple[ClosedForm, ClosedForm]:
    """``P_{2m+1} = sigma_1/3 / (3 * 4^m z^{2m-2})``, ``Q_{2m+1} = sigma_2/3 / (4^m z^{2m})``."""
    n = 2 * m + 1
    return (
        _finish(f"P_{n}[sigma]", n, "P", _sigma_p_terms(m), strict),
        _finish(f"Q_{n}[sigma]", n, "Q", _sigma_q_terms(m), strict),
    )


# -- P_{2m+1} ----------------------------------------------------------------


def _p_simplified(m: int) -> dict[int, Fraction]:
    st = staircase(m)
    terms: dict[int, Fraction] = defaultdict(Fraction)
    terms[m - 1] += m * m
    for q in range(st.Mcal):
        terms[st.eps + 3 * q] += cbold_13(m, q) / Fraction(9) ** q
    return terms


def _p_staircase(m: int) -> dict[int, Fraction]:
    st = staircase(m)
    pre = Fraction(1, 4**m * 3 ** (2 * st.M + 1))
    terms: dict[int, Fraction] = defaultdict(Fraction)
    terms[st.eps + 3 * st.Mcal] += pre * (a_coeff(m, m - 1) + d2_coeff(m, m - 1)) / Fraction(9) ** st.Mcal
    for q in range(st.Mcal):
        c = a_coeff(m, st.M + q) + d0_coeff(m, st.M + 1 + q) + d2_coeff(m, st.M + q)
        terms[st.eps + 3 * q] += pre * c / Fraction(9) ** q
    return terms


def p_closed(m: int, form: PForm = "simplified", strict: bool = False) -> ClosedForm:
    """Assemble ``P_{2m+1}`` in closed form and compare it with the recurrence.

    With ``strict=True`` a non-integer coefficient raises
    :class:`NonIntegerCoefficientError`; otherwise it is a diagnostic.
    """
    if m < 1:
        raise ValueError(f"p_closed needs m >= 1, got {m}")
    builders = {"simplified": _p_simplified, "staircase": _p_staircase, "sigma": _sigma_p_terms}
    if form not in builders:
        raise ValueError(f"unknown P form {form!r}")
    n = 2 * m + 1
    return _finish(f"P_{n}[{form}]", n, "P", builders[form](m), strict)


# -- Q_{2m+1} ----------------------------------------------------------------


def _q_simplified(m: int, inner_limit: InnerLimit) -> dict[int, Fraction]:
    terms: dict[int, Fraction] = defaultdict(Fraction)
    terms[m] += 1
    if m >= 3:
        terms[m - 3] += C(m, 3) * (3 * m + 1)
    st1 = staircase(m + 1)
    for q in range(st1.Mcal - 1):
        terms[st1.eps + 3 * q] += cbold_23(m, q, inner_limit) / Fraction(9) ** q
    return terms


def q_closed(
    m: int,
    form: QForm = "simplified",
    strict: bool = False,
    inner_limit: InnerLimit | str = InnerLimit.CORRECTED,
) -> ClosedForm:
    """Assemble ``Q_{2m+1}`` in closed form and compare it with the recurrence."""
    if m < 1:
        raise ValueError(f"q_closed needs m >= 1, got {m}")
    n = 2 * m + 1
    if form == "sigma":
        return _finish(f"Q_{n}[sigma]", n, "Q", _sigma_q_terms(m), strict)
    if form != "simplified":
        raise ValueError(f"unknown Q form {form!r}")
    inner_limit = InnerLimit(inner_limit)
    label = f"Q_{n}[simplified]" if inner_limit is InnerLimit.CORRECTED else f"Q_{n}[simplified,printed-limit]"
    return _finish(label, n, "Q", _q_simplified(m, inner_limit), strict)
