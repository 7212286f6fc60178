"""The umbral algebra engine.

A Sheffer pair couples an invertible series ``g`` (order 0) with a delta
series ``f`` (order 1) and determines a polynomial sequence ``s_n`` by the
biorthogonality ``<g f^k | s_n> = n! delta_{n,k}``.  This module builds
those sequences as coefficient triangles, applies series as differential
operators and linear functionals, transfers sequences between delta
series, and realises m-th powers under umbral composition through two
independent routes: matrix powers of the triangle and the powered pair
``(prod g(f^i), f^m)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .errors import (
    ClassMismatchError,
    InvalidInputError,
    InvalidParameterError,
    OutOfRangeError,
)
from .polynomials import Polynomial
from .rationals import RationalLike
from .series import Series
from .special import abel_triangle, lah_triangle, mittag_leffler_triangle, stirling1_triangle
from .triangles import CoeffTriangle


class ShefferPair:
    """An (invertible, delta) pair of series at a shared working truncation."""

    __slots__ = ("_g", "_f")

    def __init__(self, g: Series, f: Series):
        if g.order() != 0:
            raise ClassMismatchError("the invertible part must have order 0")
        if f.order() != 1:
            raise ClassMismatchError("the delta part must have order exactly 1")
        n = min(g.trunc, f.trunc)
        self._g = g.truncated(n)
        self._f = f.truncated(n)

    @property
    def g(self) -> Series:
        return self._g

    @property
    def f(self) -> Series:
        return self._f

    @property
    def trunc(self) -> int:
        return self._g.trunc

    def describe(self) -> str:
        """Text form ``g=<literal>; f=<literal>; N=<trunc>``."""
        return f"g={self._g.to_text()}; f={self._f.to_text()}; N={self.trunc}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShefferPair):
            return NotImplemented
        return self._g == other._g and self._f == other._f

    def __hash__(self) -> int:
        return hash((self._g, self._f))

    def __repr__(self) -> str:
        return f"ShefferPair({self.describe()!r})"


def identity_pair(trunc: int) -> ShefferPair:
    """The pair (1, t), whose sequence is x^n."""
    return ShefferPair(Series.constant(1, trunc), Series.t(trunc))


# -- functional and operator actions -------------------------------------------


def pairing(functional: Series, p: Polynomial) -> Fraction:
    """Apply the linear functional of a series to a polynomial.

    The value is ``sum_n p_n * n! * c_n``; in particular t^k pairs with
    x^n to ``n! delta_{n,k}``.
    """
    if p.degree() >= functional.trunc:
        raise OutOfRangeError(
            f"polynomial degree {p.degree()} reaches past truncation {functional.trunc}")
    acc = Fraction(0)
    for n, coeff in enumerate(p.coeffs):
        if coeff:
            acc += coeff * functional.coeffs[n] * math.factorial(n)
    return acc


def apply_operator(h: Series, p: Polynomial) -> Polynomial:
    """Act on a polynomial with ``sum_k c_k (d/dx)^k`` (ordinary coefficients)."""
    out = Polynomial.zero()
    current = p
    for k in range(min(h.trunc, p.degree() + 1)):
        c = h.coeffs[k]
        if c:
            out = out + current * c
        current = current.derivative()
    return out


# -- sequence generation ----------------------------------------------------------


def sheffer_triangle(pair: ShefferPair, n_max: int) -> CoeffTriangle:
    """Coefficient triangle of the sequence determined by the pair.

    Row extraction from the generating function: with fbar the
    compositional inverse of f,

        s_{n,k} = (n!/k!) [t^n] fbar^k / g(fbar).
    """
    if n_max < 0:
        raise InvalidParameterError("n_max must be nonnegative")
    if pair.trunc <= n_max:
        raise OutOfRangeError(
            f"working truncation {pair.trunc} must exceed n_max={n_max}")
    fbar = pair.f.revert()
    norm = pair.g.compose(fbar).inv()
    columns = []
    power = Series.constant(1, pair.trunc)
    for _ in range(n_max + 1):
        columns.append(power * norm)
        power = power * fbar
    rows = []
    for n in range(n_max + 1):
        rows.append([
            Fraction(math.factorial(n) // math.factorial(k)) * columns[k].coeffs[n]
            for k in range(n + 1)
        ])
    return CoeffTriangle(rows)


@dataclass(frozen=True)
class OrthogonalityCase:
    n: int
    k: int
    value: Fraction
    expected: Fraction
    ok: bool


@dataclass(frozen=True)
class OrthogonalityReport:
    cases: Tuple[OrthogonalityCase, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.cases)


def verify_orthogonality(pair: ShefferPair, triangle: CoeffTriangle, n_max: int) -> OrthogonalityReport:
    """Check ``<g f^k | s_n> = n! delta_{n,k}`` on the full (n, k) grid."""
    if triangle.n_max < n_max:
        raise OutOfRangeError("triangle has fewer rows than requested")
    if pair.trunc <= n_max:
        raise OutOfRangeError(
            f"working truncation {pair.trunc} must exceed n_max={n_max}")
    functionals = []
    power = Series.constant(1, pair.trunc)
    for _ in range(n_max + 1):
        functionals.append(pair.g * power)
        power = power * pair.f
    cases = []
    for n in range(n_max + 1):
        poly = triangle.row_polynomial(n)
        for k in range(n_max + 1):
            value = pairing(functionals[k], poly)
            expected = Fraction(math.factorial(n)) if n == k else Fraction(0)
            cases.append(OrthogonalityCase(n, k, value, expected, value == expected))
    return OrthogonalityReport(tuple(cases))


def transfer(p_triangle: CoeffTriangle, f: Series, g: Series, n_max: int) -> CoeffTriangle:
    """Map the associated sequence of delta series f to that of delta series g.

    Row n of the result is ``x * (f/g)^n`` applied to ``p_n(x)/x``, where
    ``(f/g)^n`` is computed as ``((f/t) * (t/g))^n`` so every intermediate
    stays inside the truncated-series ring.
    """
    if f.order() != 1 or g.order() != 1:
        raise ClassMismatchError("transfer needs delta series on both sides")
    if p_triangle.n_max < n_max:
        raise OutOfRangeError("source triangle has fewer rows than requested")
    trunc = min(f.trunc, g.trunc)
    if trunc <= n_max:
        raise OutOfRangeError(f"working truncation {trunc} must exceed n_max={n_max}")
    for n in range(1, n_max + 1):
        if p_triangle.entry(n, 0) != 0:
            raise InvalidInputError(
                f"source row {n} has a nonzero constant term; not an associated sequence")
    base = Series(f.coeffs[1:]) * Series(g.coeffs[1:]).inv()
    rows = [list(p_triangle.row(0))]
    ratio = Series.constant(1, trunc - 1)
    for n in range(1, n_max + 1):
        ratio = ratio * base
        reduced = p_triangle.row_polynomial(n).div_x()
        image = apply_operator(ratio, reduced).times_x()
        rows.append(list(image.padded(n + 1)))
    return CoeffTriangle(rows)


# -- powers under composition ---------------------------------------------------------


def compositional_power(f: Series, m: int) -> Series:
    """m-fold self-composition of a delta series; m = 0 gives t."""
    if m < 0:
        raise InvalidParameterError("compositional power needs m >= 0")
    if f.order() != 1:
        raise ClassMismatchError("compositional power needs a delta series")
    result = Series.t(f.trunc)
    for _ in range(m):
        result = f.compose(result)
    return result


def pair_power(pair: ShefferPair, m: int) -> ShefferPair:
    """The pair of the m-th umbral power: ``(prod_{i<m} g(f^i), f^m)``, m >= 1."""
    if m < 1:
        raise InvalidParameterError(
            "pair power needs m >= 1; the m = 0 pair is identity_pair(trunc)")
    g_total = pair.g
    current = Series.t(pair.trunc)
    for _ in range(m - 1):
        current = pair.f.compose(current)
        g_total = g_total * pair.g.compose(current)
    f_m = pair.f.compose(current)
    return ShefferPair(g_total, f_m)


def umbral_compose(q: CoeffTriangle, p: CoeffTriangle) -> CoeffTriangle:
    """Umbral composition of sequences: ``(q o p)_{n,j} = sum_k q_{n,k} p_{k,j}``."""
    return q.matmul(p)


def umbral_power_matrix(triangle: CoeffTriangle, m: int) -> CoeffTriangle:
    """m-th umbral power through the coefficient matrix, m >= 1."""
    return triangle.matpow(m)


def umbral_power_gf(pair: ShefferPair, m: int, n_max: int) -> CoeffTriangle:
    """m-th umbral power through the generating function of the powered pair."""
    return sheffer_triangle(pair_power(pair, m), n_max)


# -- the four worked families ---------------------------------------------------------


def rising_factorial_delta(trunc: int) -> Series:
    """1 - e^{-t}, the delta series of the rising factorials."""
    return Series([Fraction(0)] + [
        Fraction(-((-1) ** k), math.factorial(k)) for k in range(1, trunc)])


def lah_delta(trunc: int) -> Series:
    """t/(t-1) = -t - t^2 - ..., the self-inverse delta series of the Lah sequence."""
    return Series([Fraction(0)] + [Fraction(-1)] * (trunc - 1))


def abel_delta(trunc: int, a: RationalLike) -> Series:
    """t e^{at}, the delta series of the Abel sequence (a nonzero)."""
    a = Fraction(a)
    if a == 0:
        raise InvalidParameterError("abel parameter must be nonzero")
    return Series([Fraction(0)] + [
        a ** (k - 1) / math.factorial(k - 1) for k in range(1, trunc)])


def mittag_leffler_delta(trunc: int) -> Series:
    """(e^t - 1)/(e^t + 1), the delta series of the Mittag-Leffler sequence."""
    em1 = Series([Fraction(0)] + [Fraction(1, math.factorial(k)) for k in range(1, trunc)])
    ep1 = Series([Fraction(2)] + [Fraction(1, math.factorial(k)) for k in range(1, trunc)])
    return em1 * ep1.inv()


FAMILY_NAMES = ("rising-factorial", "lah", "abel", "mittag-leffler")
_FAMILY_ALIASES = {"lah-signed": "lah"}


@dataclass(frozen=True)
class SequenceFamily:
    """One of the worked associated sequences (g = 1), with closed triangle."""

    name: str
    a: Optional[Fraction] = None

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise InvalidParameterError(f"unknown family {self.name!r}")
        if self.name == "abel":
            if self.a is None or self.a == 0:
                raise InvalidParameterError("abel family needs a nonzero parameter")
        elif self.a is not None:
            raise InvalidParameterError(f"family {self.name!r} takes no parameter")

    def delta(self, trunc: int) -> Series:
        if self.name == "rising-factorial":
            return rising_factorial_delta(trunc)
        if self.name == "lah":
            return lah_delta(trunc)
        if self.name == "abel":
            return abel_delta(trunc, self.a)
        return mittag_leffler_delta(trunc)

    def pair(self, trunc: int) -> ShefferPair:
        return ShefferPair(Series.constant(1, trunc), self.delta(trunc))

    def closed_triangle(self, n_max: int) -> CoeffTriangle:
        if self.name == "rising-factorial":
            return stirling1_triangle(n_max, signed=False)
        if self.name == "lah":
            return lah_triangle(n_max, signed=True)
        if self.name == "abel":
            return abel_triangle(n_max, self.a)
        return mittag_leffler_triangle(n_max)


def family(name: str, a: Optional[RationalLike] = None) -> SequenceFamily:
    """Look up a family by name (``lah-signed`` is accepted as an alias of ``lah``)."""
    canonical = _FAMILY_ALIASES.get(name, name)
    return SequenceFamily(canonical, Fraction(a) if a is not None else None)
