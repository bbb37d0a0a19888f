from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from airypoly.abrapoly import IntPolynomial, NonIntegerCoefficientError
from airypoly.abrapoly.polynomial import ONE, ZERO, Z

polys = st.lists(st.integers(-50, 50), max_size=8).map(IntPolynomial)


def test_trimming_and_degree():
    p = IntPolynomial((4, 0, 0, 1, 0, 0))
    assert p.coeffs == (4, 0, 0, 1)
    assert p.degree == 3 and p.leading == 1
    assert ZERO.degree == -1
    assert p.terms() == [(0, 4), (3, 1)]


def test_render():
    p = IntPolynomial.from_terms({0: 4, 3: 1})
    assert p.to_str() == "z^3+4"
    assert p.to_str(ascending=True) == "4+z^3"
    assert IntPolynomial.from_terms({1: 6}).to_str() == "6z"
    assert IntPolynomial.from_terms({1: -1, 2: 3}).to_str() == "3z^2-z"
    assert ZERO.to_str() == "0"
    assert IntPolynomial.from_terms({2: 2520, 5: 42}).to_latex() == "2520\\,z^{2}+42\\,z^{5}"


def test_from_rational_terms():
    assert IntPolynomial.from_rational_terms({1: Fraction(6, 3)}) == IntPolynomial((0, 2))
    with pytest.raises(NonIntegerCoefficientError):
        IntPolynomial.from_rational_terms({1: Fraction(1, 2)})


def test_exact_div():
    assert IntPolynomial((7, 14)).exact_div(7) == IntPolynomial((1, 2))
    with pytest.raises(NonIntegerCoefficientError):
        IntPolynomial((7, 15)).exact_div(7)


def test_calculus_and_shift():
    p = IntPolynomial.from_terms({0: 4, 3: 1})
    assert p.derivative() == IntPolynomial.from_terms({2: 3})
    assert p.shift() == p * Z
    assert ONE.derivative() == ZERO
    assert p(2) == 12


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()
    assert a - a == ZERO
    assert -(-a) == a


@given(polys, st.integers(-5, 5))
def test_evaluation_is_homomorphism(a, x):
    b = a * a + a.scale(3)
    assert b(x) == a(x) ** 2 + 3 * a(x)
