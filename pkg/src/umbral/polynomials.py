"""Dense univariate polynomials with exact rational coefficients.

Coefficients are stored lowest degree first and kept canonical: the
trailing coefficient is nonzero, and the zero polynomial stores no
coefficients at all (degree -1).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .errors import InvalidInputError
from .rationals import RationalLike, format_rational

ScalarOrPolynomial = Union["Polynomial", Fraction, int]


class Polynomial:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        items = [Fraction(c) for c in coeffs]
        while items and items[-1] == 0:
            items.pop()
        self._coeffs = tuple(items)

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def monomial(cls, degree: int, coeff: RationalLike = 1) -> "Polynomial":
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def degree(self) -> int:
        """Canonical degree; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def padded(self, length: int) -> tuple:
        """Coefficient tuple extended with zeros to the requested length."""
        extra = length - len(self._coeffs)
        return self._coeffs + (Fraction(0),) * max(extra, 0)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: ScalarOrPolynomial) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial([self.coefficient(k) + other.coefficient(k) for k in range(n)])

    __radd__ = __add__

    def __sub__(self, other: ScalarOrPolynomial) -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial([other])
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __mul__(self, other: ScalarOrPolynomial) -> "Polynomial":
        if isinstance(other, Polynomial):
            if self.is_zero() or other.is_zero():
                return Polynomial.zero()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                if a:
                    for j, b in enumerate(other._coeffs):
                        if b:
                            out[i + j] += a * b
            return Polynomial(out)
        scalar = Fraction(other)
        return Polynomial([c * scalar for c in self._coeffs])

    __rmul__ = __mul__

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self._coeffs)][1:])

    def times_x(self) -> "Polynomial":
        if self.is_zero():
            return self
        return Polynomial((Fraction(0),) + self._coeffs)

    def div_x(self) -> "Polynomial":
        """Exact division by x; the constant term must vanish."""
        if self.is_zero():
            return self
        if self._coeffs[0] != 0:
            raise InvalidInputError("cannot divide by x: nonzero constant term")
        return Polynomial(self._coeffs[1:])

    def evaluate(self, value: RationalLike) -> Fraction:
        x = Fraction(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    # -- dunders -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ",".join(format_rational(c) for c in self._coeffs)
        return f"Polynomial([{body}])"
