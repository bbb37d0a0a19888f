"""Closed forms for the odd rows, their coefficients, and the staircase indices."""

from fractions import Fraction

import mpmath
import pytest

from airypoly.abrapoly import (
    CoeffKind,
    IntPolynomial,
    InnerLimit,
    ad_coeffs,
    c_coeff,
    cbold_13,
    cbold_23,
    p_closed,
    pq_recurrence,
    pq_sigma,
    q_closed,
    staircase,
    staircase_checks,
    verify_cross,
)
from airypoly.bellcore import delta_b
from airypoly.exactnum import binomial


def _mpf(x):
    return mpmath.mpf(x.numerator) / x.denominator


def test_c_coeff_first_value():
    assert c_coeff(CoeffKind.C1_0, 1, 0) == -2
    with mpmath.workdps(50):
        ref = mpmath.gamma(mpmath.mpf(2) / 3) / mpmath.gamma(-mpmath.mpf(1) / 3) - mpmath.gamma(
            mpmath.mpf(8) / 3
        ) / mpmath.gamma(mpmath.mpf(5) / 3)
        assert abs(_mpf(c_coeff(CoeffKind.C1_0, 1, 0)) - ref) < mpmath.mpf(10) ** -40


def test_c_coeff_empty_range_and_bad_index():
    for kind in CoeffKind:
        assert c_coeff(kind, 5, 5) == 0
    with pytest.raises(IndexError):
        c_coeff(CoeffKind.C3_0, 3, -1)


def test_ad_leading_combination():
    # (A + D2)(m, m-1) / (4^m 3^{2M+1} 9^{Mcal}) is the z^{m-1} coefficient m^2 of P_{2m+1}
    for m in range(1, 13):
        st = staircase(m)
        A, _, D2 = ad_coeffs(m, m - 1)
        lead = (A + D2) / (4**m * 3 ** (2 * st.M + 1) * 9**st.Mcal)
        assert st.eps + 3 * st.Mcal == m - 1
        assert lead == m * m
    assert delta_b(6, 5) == 2 * 9 + 9


def test_cbold_values():
    assert cbold_13(4, 0) == 28
    assert cbold_13(5, 0) == 280
    assert cbold_23(6, 0) == 880
    assert cbold_23(6, 0, InnerLimit.PRINTED) == Fraction(-1905, 4)


@pytest.mark.parametrize(
    "m, p_terms, q_terms",
    [
        (1, {0: 1}, {1: 1}),
        (2, {1: 4}, {2: 1}),
        (3, {2: 9}, {0: 10, 3: 1}),
        (4, {3: 16, 0: 28}, {4: 1, 1: 52}),
        (5, {4: 25, 1: 280}, {5: 1, 2: 160}),
    ],
)
def test_closed_small_rows(m, p_terms, q_terms):
    pc, qc = p_closed(m), q_closed(m)
    assert pc.ok and qc.ok
    assert pc.polynomial == IntPolynomial.from_terms(p_terms)
    assert qc.polynomial == IntPolynomial.from_terms(q_terms)


def test_all_forms_match_recurrence():
    rows = pq_recurrence(2 * 16 + 1)
    for m in range(1, 16):
        for form in (p_closed(m), p_closed(m, "staircase"), p_closed(m, "sigma")):
            assert form.ok, form.label
            assert form.polynomial == rows[2 * m + 1].P
        for form in (q_closed(m), q_closed(m, "sigma")):
            assert form.ok, form.label
            assert form.polynomial == rows[2 * m + 1].Q
        ps, qs = pq_sigma(m)
        assert ps.ok and qs.ok


def test_leading_structure():
    for m in range(1, 13):
        assert p_closed(m).terms[m - 1] == m * m
        q = q_closed(m).terms
        assert q[m] == 1
        if m >= 3:
            assert q[m - 3] == binomial(m, 3) * (3 * m + 1)


def test_printed_inner_limit_fails_only_at_multiples_of_three():
    for m in range(1, 13):
        printed = q_closed(m, inner_limit=InnerLimit.PRINTED)
        # the Q sum is empty for m <= 5, so the limits first differ at m = 6
        assert printed.ok == (m % 3 != 0 or m < 6), m
    bad = q_closed(6, inner_limit=InnerLimit.PRINTED)
    d = {x.exponent: x for x in bad.diagnostics}
    assert d[0].computed != d[0].reference == 880


def test_strict_mode_raises():
    from airypoly.abrapoly import NonIntegerCoefficientError

    with pytest.raises((ArithmeticError, NonIntegerCoefficientError)):
        q_closed(6, inner_limit=InnerLimit.PRINTED, strict=True)


def test_three_term_law_on_closed_rows():
    # odd rows from closed forms plus even rows recovered from them obey the recurrence
    from airypoly.abrapoly import PolyPair, even_from_odd

    odd = {2 * m + 1: PolyPair(2 * m + 1, p_closed(m).polynomial, q_closed(m).polynomial) for m in range(1, 12)}
    odd[1] = pq_recurrence(1)[1]
    rows = {n: odd[n] for n in odd}
    for m in range(1, 11):
        rows[2 * m] = even_from_odd(m, odd)
    for n in range(2, 20):
        a, b, c = rows[n - 1], rows[n], rows[n + 2]
        assert c.P == b.P.shift() + a.P.scale(n)
        assert c.Q == b.Q.shift() + a.Q.scale(n)


@pytest.mark.parametrize("m, expected", [(1, (0, 0, 0)), (4, (2, 1, 0)), (5, (3, 1, 1))])
def test_staircase_examples(m, expected):
    s = staircase(m)
    assert (s.M, s.Mcal, s.eps) == expected


def test_staircase_laws():
    for m in range(1, 101):
        s, s3 = staircase(m), staircase(m + 3)
        assert s.eps in (0, 1, 2)
        assert s3.eps == s.eps
        assert s3.M == s.M + 2
        assert s.Mcal == m - 1 - s.M >= 0
        assert staircase(m + 1).Mcal - s.Mcal == (1 if m % 3 == 0 else 0)
    # the period-4 statement does not hold: eps(2) = 1 while eps(6) = 2
    assert (staircase(2).eps, staircase(6).eps) == (1, 2)
    statuses = {c.name: c.status for c in staircase_checks()}
    assert statuses == {"staircase_laws": "pass", "staircase_eps_period4": "documented-discrepancy"}


def test_verify_cross_report():
    report = verify_cross(18)
    assert report.ok
    status = {c.name: c.status for c in report.checks}
    assert status["recurrence_vs_diffdiff"] == "pass"
    assert status["even_from_odd"] == "pass"
    assert status["table1_row14_Q"] == "documented-discrepancy"
    assert status["closed_Q_13[simplified,printed-limit]"] == "documented-discrepancy"
    assert verify_cross(2).ok
