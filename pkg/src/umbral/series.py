"""Exact truncated formal power series over the rationals.

A :class:`Series` keeps the first ``trunc`` ordinary coefficients
``c_0 .. c_{trunc-1}`` of a formal power series ``sum c_k t^k + O(t^trunc)``.
Everything is exact rational arithmetic.  Binary operations truncate to the
shorter operand and no operation ever extends precision, so a coefficient
that is present is always correct.

Exponential-generating-function coefficients ``a_n = n! * c_n`` are exposed
only through :meth:`Series.egf_coefficient`; all internal arithmetic stays
on ordinary coefficients.
"""

from __future__ import annotations

import enum
import math
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import ClassMismatchError, InvalidParameterError, OutOfRangeError
from .rationals import RationalLike, format_rational, parse_rational

ScalarOrSeries = Union["Series", Fraction, int]


class SeriesClass(enum.Enum):
    """Multiplicative/compositional role of a series, decided by its order."""

    INVERTIBLE = "invertible"  # order 0: has a multiplicative inverse
    DELTA = "delta"            # order 1: has a compositional inverse
    OTHER = "other"


class Series:
    """Immutable truncated power series with :class:`Fraction` coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike], trunc: Optional[int] = None):
        items = [Fraction(c) for c in coeffs]
        if trunc is not None:
            if trunc < 1:
                raise InvalidParameterError("truncation must be a positive integer")
            if len(items) < trunc:
                items.extend([Fraction(0)] * (trunc - len(items)))
            else:
                del items[trunc:]
        if not items:
            raise InvalidParameterError("a series needs at least one retained coefficient")
        self._coeffs = tuple(items)

    # -- constructors ---------------------------------------------------

    @classmethod
    def constant(cls, value: RationalLike, trunc: int) -> "Series":
        return cls([Fraction(value)], trunc=trunc)

    @classmethod
    def t(cls, trunc: int) -> "Series":
        """The identity delta series ``t`` (trunc must be at least 2 to see it)."""
        return cls([0, 1], trunc=trunc)

    @classmethod
    def zero(cls, trunc: int) -> "Series":
        return cls([0], trunc=trunc)

    @classmethod
    def from_text(cls, text: str, trunc: Optional[int] = None) -> "Series":
        """Parse the literal format ``"c0,c1,c2,..."`` of canonical rationals."""
        parts = [p.strip() for p in text.split(",")]
        if parts == [""]:
            raise InvalidParameterError("empty series literal")
        return cls([parse_rational(p) for p in parts], trunc=trunc)

    # -- basic accessors ------------------------------------------------

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def trunc(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k < len(self._coeffs):
            raise OutOfRangeError(f"coefficient index {k} outside truncation {self.trunc}")
        return self._coeffs[k]

    def order(self) -> Optional[int]:
        """Index of the first nonzero coefficient, or None when every
        retained coefficient vanishes (order beyond truncation)."""
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        return None

    def classify(self) -> SeriesClass:
        o = self.order()
        if o == 0:
            return SeriesClass.INVERTIBLE
        if o == 1:
            return SeriesClass.DELTA
        return SeriesClass.OTHER

    def truncated(self, trunc: int) -> "Series":
        """A copy with fewer retained coefficients; never extends."""
        if not 1 <= trunc <= self.trunc:
            raise OutOfRangeError(f"cannot truncate length-{self.trunc} series to {trunc}")
        return Series(self._coeffs[:trunc])

    def egf_coefficient(self, n: int) -> Fraction:
        """The exponential coefficient ``a_n = n! * c_n``."""
        if not 0 <= n < self.trunc:
            raise OutOfRangeError(f"coefficient index {n} outside truncation {self.trunc}")
        return math.factorial(n) * self._coeffs[n]

    # -- ring operations (result truncation = min of operands) ----------

    def __add__(self, other: ScalarOrSeries) -> "Series":
        if isinstance(other, Series):
            n = min(self.trunc, other.trunc)
            return Series([self._coeffs[k] + other._coeffs[k] for k in range(n)])
        c = list(self._coeffs)
        c[0] += Fraction(other)
        return Series(c)

    __radd__ = __add__

    def __sub__(self, other: ScalarOrSeries) -> "Series":
        return self + (-other if isinstance(other, Series) else -Fraction(other))

    def __rsub__(self, other: RationalLike) -> "Series":
        return (-self) + other

    def __neg__(self) -> "Series":
        return Series([-c for c in self._coeffs])

    def __mul__(self, other: ScalarOrSeries) -> "Series":
        if isinstance(other, Series):
            n = min(self.trunc, other.trunc)
            # convolve over a common denominator: one reduction per output
            # coefficient instead of one per partial sum
            da = math.lcm(*(c.denominator for c in self._coeffs[:n]))
            db = math.lcm(*(c.denominator for c in other._coeffs[:n]))
            a = [int(c * da) for c in self._coeffs[:n]]
            b = [int(c * db) for c in other._coeffs[:n]]
            d = da * db
            out = []
            for k in range(n):
                acc = 0
                for i in range(k + 1):
                    if a[i] and b[k - i]:
                        acc += a[i] * b[k - i]
                out.append(Fraction(acc, d))
            return Series(out)
        scalar = Fraction(other)
        return Series([c * scalar for c in self._coeffs])

    __rmul__ = __mul__

    def inv(self) -> "Series":
        """Multiplicative inverse; requires order 0."""
        if self.order() != 0:
            raise ClassMismatchError("multiplicative inverse needs an invertible series (order 0)")
        a = self._coeffs
        lead = 1 / a[0]
        out = [lead]
        for k in range(1, self.trunc):
            acc = Fraction(0)
            for i in range(1, k + 1):
                if a[i] and out[k - i]:
                    acc += a[i] * out[k - i]
            out.append(-lead * acc)
        return Series(out)

    def int_pow(self, m: int) -> "Series":
        """m-fold product; ``m < 0`` inverts first and needs order 0."""
        if m < 0:
            return self.inv().int_pow(-m)
        result = Series.constant(1, self.trunc)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def rat_pow(self, alpha: RationalLike) -> "Series":
        """Power with rational exponent via exp(alpha * log); needs ``c_0 = 1``."""
        if self._coeffs[0] != 1:
            raise ClassMismatchError("rational power needs constant term 1")
        alpha = Fraction(alpha)
        if self.trunc == 1:
            return Series([1])
        return (self.log() * alpha).exp()

    def __pow__(self, exponent: RationalLike) -> "Series":
        e = Fraction(exponent)
        if e.denominator == 1:
            return self.int_pow(e.numerator)
        return self.rat_pow(e)

    # -- transcendental operations ---------------------------------------

    def log(self) -> "Series":
        """Series logarithm; requires ``c_0 = 1``."""
        if self._coeffs[0] != 1:
            raise ClassMismatchError("series logarithm needs constant term 1")
        if self.trunc == 1:
            return Series([0])
        return (self.derivative() * self.inv())._integrated()

    def exp(self) -> "Series":
        """Series exponential; requires order >= 1 (zero constant term)."""
        if self._coeffs[0] != 0:
            raise ClassMismatchError("series exponential needs order >= 1")
        s = self._coeffs
        out = [Fraction(1)]
        # E' = E * s'  gives  (k+1) E_{k+1} = sum_i E_i (k+1-i) s_{k+1-i}
        for k in range(self.trunc - 1):
            acc = Fraction(0)
            for i in range(k + 1):
                c = s[k + 1 - i]
                if c and out[i]:
                    acc += out[i] * (k + 1 - i) * c
            out.append(acc / (k + 1))
        return Series(out)

    # -- calculus helpers -------------------------------------------------

    def derivative(self) -> "Series":
        """Termwise derivative; the truncation shrinks by one."""
        if self.trunc < 2:
            raise OutOfRangeError("derivative of a single-coefficient series is undetermined")
        return Series([(k + 1) * c for k, c in enumerate(self._coeffs[1:])])

    def _integrated(self) -> "Series":
        # antiderivative with zero constant term; truncation grows by one,
        # which exactly undoes derivative() (private: callers must not use
        # this to manufacture precision)
        return Series([Fraction(0)] + [c / (k + 1) for k, c in enumerate(self._coeffs)])

    # -- composition -----------------------------------------------------

    def compose(self, inner: "Series") -> "Series":
        """Substitute ``inner`` (order >= 1) into this series, by Horner."""
        if not isinstance(inner, Series):
            raise TypeError("compose expects a Series")
        if inner.order() == 0:
            raise ClassMismatchError("composition needs an inner series of order >= 1")
        n = min(self.trunc, inner.trunc)
        inner_n = inner.truncated(n)
        acc = Series.constant(self._coeffs[n - 1], n)
        for k in range(n - 2, -1, -1):
            acc = acc * inner_n + self._coeffs[k]
        return acc

    __call__ = compose

    def revert(self) -> "Series":
        """Compositional inverse of a delta series (order exactly 1).

        Uses Lagrange inversion with incremental powers of ``t/f``; the
        round trip ``compose(f, revert(f)) = t`` is exact at the retained
        truncation.
        """
        if self.order() != 1:
            raise ClassMismatchError("compositional inverse needs a delta series (order exactly 1)")
        n = self.trunc
        u = Series(self._coeffs[1:]).inv()  # t/f shifted to order 0, trunc n-1
        out = [Fraction(0)]
        power = Series.constant(1, n - 1)
        for m in range(1, n):
            power = power * u
            out.append(power.coeffs[m - 1] / m)
        return Series(out)

    # -- text form and dunders --------------------------------------------

    def to_text(self) -> str:
        """Literal format ``"c0,c1,c2,..."`` with canonical rational entries."""
        return ",".join(format_rational(c) for c in self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Series({self.to_text()!r})"
