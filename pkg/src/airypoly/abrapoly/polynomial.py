"""Dense univariate integer polynomials in ``z``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class NonIntegerCoefficientError(ArithmeticError):
    """A rational assembly did not reduce to integer coefficients."""


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with ``int`` coefficients, ``coeffs[e]`` multiplying ``z**e``.

    The coefficient tuple carries no trailing zeros; the zero polynomial is
    the empty tuple.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        for c in self.coeffs:
            if not isinstance(c, int):
                raise TypeError(f"IntPolynomial coefficients must be int, got {type(c).__name__}")
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int] | Iterable[tuple[int, int]]) -> "IntPolynomial":
        items = terms.items() if isinstance(terms, Mapping) else terms
        dense: dict[int, int] = {}
        for e, c in items:
            if e < 0:
                raise ValueError(f"negative exponent {e} in polynomial")
            dense[e] = dense.get(e, 0) + c
        size = max(dense, default=-1) + 1
        return cls(tuple(dense.get(e, 0) for e in range(size)))

    @classmethod
    def from_rational_terms(cls, terms: Mapping[int, Fraction]) -> "IntPolynomial":
        """Build from exact rational terms; every coefficient must be an integer."""
        ints = {}
        for e, c in terms.items():
            c = Fraction(c)
            if c.denominator != 1:
                raise NonIntegerCoefficientError(f"coefficient of z^{e} is {c}")
            ints[e] = c.numerator
        return cls.from_terms(ints)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "IntPolynomial":
        return cls.from_terms({exponent: coeff})

    # -- structure ---------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> list[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs, exponents ascending."""
        return [(e, c) for e, c in enumerate(self.coeffs) if c]

    def coeff(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coeff(e) + other.coeff(e) for e in range(n)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self.coeff(e) - other.coeff(e) for e in range(n)))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(tuple(k * c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> "IntPolynomial":
        """Multiply by ``z**k``."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial(tuple(e * c for e, c in enumerate(self.coeffs) if e))

    def exact_div(self, k: int) -> "IntPolynomial":
        """Divide every coefficient by ``k``; raises if any remainder is nonzero."""
        out = []
        for e, c in enumerate(self.coeffs):
            q, r = divmod(c, k)
            if r:
                raise NonIntegerCoefficientError(f"coefficient {c} of z^{e} not divisible by {k}")
            out.append(q)
        return IntPolynomial(tuple(out))

    # -- evaluation --------------------------------------------------------

    def __call__(self, z):
        """Horner evaluation; exact for int/Fraction ``z``."""
        acc = 0 * z
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    # -- formatting --------------------------------------------------------

    def _render(self, ascending: bool, var_fmt, joiner: str) -> str:
        terms = self.terms()
        if not terms:
            return "0"
        if not ascending:
            terms = terms[::-1]
        out = ""
        for e, c in terms:
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = var_fmt(e)
                body = var if mag == 1 else f"{mag}{joiner}{var}"
            if c < 0:
                out += "-" + body
            else:
                out += ("+" if out else "") + body
        return out

    def to_str(self, ascending: bool = False) -> str:
        """Compact text like ``z^3+4`` (descending) or ``4+z^3`` (ascending)."""
        return self._render(ascending, lambda e: "z" if e == 1 else f"z^{e}", "")

    def to_latex(self) -> str:
        return self._render(True, lambda e: "z" if e == 1 else f"z^{{{e}}}", "\\,")

    def __str__(self) -> str:
        return self.to_str()


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
Z = IntPolynomial((0, 1))
