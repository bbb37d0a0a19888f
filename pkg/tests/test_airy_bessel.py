import math
import warnings
from fractions import Fraction

import mpmath
import pytest

from airypoly.airynum import (
    DomainError,
    ZetaMap,
    airy_eval,
    bessel_k,
    k_pair,
    kderiv,
    order_in_thirds,
    zeta_deriv,
)
from airypoly.airynum.checks import fd_derivative


def test_airy_at_zero():
    av = airy_eval(0.0)
    with mpmath.workdps(30):
        c1 = 1 / (mpmath.cbrt(9) * mpmath.gamma(mpmath.mpf(2) / 3))
    assert av.ai == pytest.approx(float(c1), rel=1e-15)
    assert av.ai == pytest.approx(0.3550280538878172, rel=1e-15)
    assert abs(av.wronskian - 1 / math.pi) < 1e-15


@pytest.mark.parametrize("z", [-6.0, -3.3, -1.0, 0.25, 1.0, 2.5, 4.0, 5.0, 6.0])
def test_airy_against_high_precision_series(z):
    av = airy_eval(z)
    ref = airy_eval(z, dps=40)
    for name in ("ai", "aip", "bi", "bip"):
        got, want = getattr(av, name), getattr(ref, name)
        assert abs(got - float(want)) <= 1e-12 * max(abs(float(want)), 1e-300), name


def test_airy_matches_mpmath():
    # an external reference, independent of the series code
    for z in (-4.5, -0.7, 0.0, 1.3, 3.9):
        av = airy_eval(z)
        assert av.ai == pytest.approx(float(mpmath.airyai(z)), rel=1e-13, abs=1e-300)
        assert av.bip == pytest.approx(float(mpmath.airybi(z, 1)), rel=1e-13)


def test_airy_domain():
    with pytest.raises(DomainError):
        airy_eval(6.5)
    hp = airy_eval(1.0, dps=30).ai
    assert not isinstance(hp, float)
    assert abs(hp - mpmath.airyai(1)) < 1e-15


def test_zeta_map_round_trip():
    for z in (0.1, 1.0, 2.7, 5.9):
        zm = ZetaMap.from_z(z)
        assert ZetaMap.from_zeta(zm.zeta).z == pytest.approx(z, rel=1e-14)
    with pytest.raises(DomainError):
        ZetaMap.from_z(0.0)


def test_order_parsing():
    assert order_in_thirds("-5/3") == Fraction(-5, 3)
    assert order_in_thirds(2 / 3) == Fraction(2, 3)
    with pytest.raises(ValueError):
        order_in_thirds(1)
    with pytest.raises(ValueError):
        order_in_thirds(0.5)


@pytest.mark.parametrize("zeta", [0.3, 1.0, 4.0])
def test_bessel_examples(zeta):
    z = (1.5 * zeta) ** (2 / 3)
    assert bessel_k("1/3", zeta) == pytest.approx(math.pi * airy_eval(z).ai / math.sqrt(z / 3), rel=1e-14)
    assert bessel_k("-2/3", zeta) == bessel_k("2/3", zeta)
    k13, k23 = bessel_k("1/3", zeta), bessel_k("2/3", zeta)
    assert bessel_k("-5/3", zeta) == pytest.approx(k13 + (2 / 3) * (2 / zeta) * k23, rel=1e-14)


def test_bessel_against_mpmath():
    for zeta in (0.3, 1.0, 4.0):
        for k in range(-31, 32):
            if k % 3 == 0:
                continue
            nu = Fraction(k, 3)
            ref = float(mpmath.besselk(float(nu), zeta))
            assert bessel_k(nu, zeta) == pytest.approx(ref, rel=1e-13)


def test_bessel_errors_and_warning():
    with pytest.raises(DomainError):
        bessel_k("1/3", 0.0)
    with pytest.warns(RuntimeWarning):
        bessel_k("79/3", 1.0)


def test_kderiv_small_orders():
    zeta = 1.3
    assert kderiv(0, "2/3", zeta) == bessel_k("2/3", zeta)
    assert kderiv(1, "2/3", zeta) == pytest.approx(-(bessel_k("-1/3", zeta) + bessel_k("5/3", zeta)) / 2, rel=1e-15)


def test_kderiv_binary64_finite_difference():
    fd = fd_derivative(lambda s: bessel_k("2/3", s), 1.0, 2, 1e-2)
    assert abs(kderiv(2, "2/3", 1.0) - fd) <= 1e-7 * abs(fd)


def test_zeta_derivatives():
    for z in (0.4, 1.0, 2.5):
        assert zeta_deriv(1, z) == pytest.approx(math.sqrt(z), rel=1e-15)
        assert zeta_deriv(2, z) == pytest.approx(1 / (2 * math.sqrt(z)), rel=1e-15)
    fd = fd_derivative(lambda s: zeta_deriv(2, s), 1.0, 1, 1e-2)
    assert abs(zeta_deriv(3, 1.0) - fd) <= 1e-7 * abs(fd)
    with pytest.raises(DomainError):
        zeta_deriv(1, -1.0)


def test_k_pair_high_precision_agrees():
    kp = k_pair(0.8, dps=40)
    with mpmath.workdps(40):
        assert abs(kp.k13 - mpmath.besselk(mpmath.mpf(1) / 3, mpmath.mpf(kp.zeta))) < mpmath.mpf(10) ** -35
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        kp.order(Fraction(-20, 3))
