import math
import warnings

import mpmath
import pytest

from airypoly.airynum import (
    DomainError,
    airy_eval,
    dn_aiprime_bessel,
    dn_aiprime_faa,
    dn_airy,
    genfun_check,
    sigma_check,
)


def _mp_deriv(n, z, which):
    with mpmath.workdps(40):
        return float(mpmath.airyai(mpmath.mpf(z), derivative=n + (which == "aip")))


def test_dn_airy_examples():
    av = airy_eval(1.0)
    assert dn_airy(0, 1.0) == av.ai
    assert dn_airy(2, 1.3) == pytest.approx(1.3 * airy_eval(1.3).ai, rel=1e-15)
    assert dn_airy(3, 1.0) == pytest.approx(av.ai + av.aip, rel=1e-15)


@pytest.mark.parametrize("which", ["ai", "aip"])
def test_dn_airy_against_mpmath(which):
    for z in (-4.0, -1.0, 0.0, 0.7, 2.0, 4.5):
        for n in (1, 4, 9, 15):
            ref = _mp_deriv(n, z, which)
            assert dn_airy(n, z, which) == pytest.approx(ref, rel=1e-10, abs=1e-12)


def test_dn_airy_bounds():
    with pytest.raises(ValueError):
        dn_airy(61, 1.0)
    with pytest.raises(DomainError):
        dn_airy(1, 8.0)


def test_bessel_route_examples():
    av = airy_eval(1.0)
    assert dn_aiprime_bessel(2, 1.0) == pytest.approx(av.ai + av.aip, rel=1e-14)
    assert dn_aiprime_bessel(1, 1.0) == pytest.approx(av.ai, rel=1e-14)
    assert dn_aiprime_bessel(6, 2.0) == pytest.approx(dn_airy(6, 2.0, "aip"), rel=1e-8)
    with pytest.raises(DomainError):
        dn_aiprime_bessel(3, 0.0)
    with pytest.raises(ValueError):
        dn_aiprime_bessel(0, 1.0)


def test_bessel_route_agreement():
    for z in (0.5, 1.0, 2.0, 3.0):
        for n in range(1, 11):
            ref = dn_airy(n, z, "aip")
            assert abs(dn_aiprime_bessel(n, z) - ref) <= 1e-8 * abs(ref), (n, z)


def test_high_precision_output():
    v = dn_aiprime_bessel(4, 1.5, dps=40)
    with mpmath.workdps(40):
        ref = mpmath.airyai(mpmath.mpf("1.5"), derivative=5)
        assert abs(v - ref) < mpmath.mpf(10) ** -30 * abs(ref)


def test_binary64_bell_sum_is_ill_conditioned():
    # The Bell sum cancels by about nine digits at z = 0.5, n = 10, so plain
    # binary64 misses 1e-8 while the default 30-digit working precision does not.
    ref = dn_airy(10, 0.5, "aip")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        plain = dn_aiprime_bessel(10, 0.5, work_dps=None)
    assert abs(plain - ref) / abs(ref) > 1e-8
    assert any("cancels" in str(w.message) for w in caught)
    assert abs(dn_aiprime_bessel(10, 0.5) - ref) / abs(ref) < 1e-13


def test_binary64_flag_above_fourteen():
    with pytest.warns(RuntimeWarning):
        dn_aiprime_bessel(15, 3.0, work_dps=None)


def test_printed_bellfree_sign_is_wrong_for_odd_n():
    ref = dn_airy(3, 1.2, "aip")
    assert dn_aiprime_bessel(3, 1.2, bellfree_sign="printed") != pytest.approx(ref, rel=1e-3)
    assert dn_aiprime_bessel(4, 1.2, bellfree_sign="printed") == pytest.approx(dn_airy(4, 1.2, "aip"), rel=1e-12)


def test_chain_rule_route():
    for z in (0.6, 1.0, 2.4):
        for n in range(1, 7):
            assert dn_aiprime_faa(n, z) == pytest.approx(dn_airy(n, z, "aip"), rel=1e-12)
    # the cross-check inside the Bessel route stays silent on correct input
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        dn_aiprime_bessel(5, 1.7)


def test_genfun_at_t_zero():
    r = genfun_check(0.8, 0.0, 30)
    assert r.lhsP == pytest.approx(1.0, rel=1e-14)
    assert abs(r.lhsQ) < 1e-15
    assert r.rhsP == 1.0 and r.rhsQ == 0.0


def test_genfun_grid():
    for z in (0.0, 0.5, 1.0):
        for t in (-0.3, -0.1, 0.1, 0.3):
            assert genfun_check(z, t, 30).deviation <= 1e-10


def test_sigma_examples():
    r = sigma_check(1, 1.0)
    assert r.P_quotient == pytest.approx(1.0, rel=1e-8)
    assert r.Q_quotient == pytest.approx(1.0, rel=1e-8)
    assert sigma_check(2, 2.0).Q_quotient == pytest.approx(4.0, rel=1e-8)
    assert sigma_check(3, 0.7).max_deviation <= 1e-7


def test_sigma_range():
    for m in range(1, 9):
        for z in (0.5, 1.0, 3.0):
            report = sigma_check(m, z)
            assert report.max_deviation <= 1e-7, report.to_dict()
    assert math.isfinite(sigma_check(8, 3.0).derivative)
