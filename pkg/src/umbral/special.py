"""Exact generators for the named number and polynomial families.

Covers Stirling numbers of the first kind, Lah numbers, higher-order
Bernoulli and Euler numbers (any rational order, including negative),
falling/rising factorials, Abel and Mittag-Leffler coefficient
triangles, multinomial coefficients and composition enumeration.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import InvalidParameterError
from .polynomials import Polynomial
from .rationals import RationalLike
from .series import Series
from .triangles import CoeffTriangle

# -- Stirling numbers of the first kind ---------------------------------------


@lru_cache(maxsize=None)
def _signed_stirling_row(n: int) -> tuple:
    if n == 0:
        return (1,)
    prev = _signed_stirling_row(n - 1)
    row = [0] * (n + 1)
    for k in range(n + 1):
        left = prev[k - 1] if 1 <= k <= n else 0
        right = prev[k] if k <= n - 1 else 0
        row[k] = left - (n - 1) * right
    return tuple(row)


def stirling1_signed(n: int, k: int) -> Fraction:
    """Signed first-kind Stirling number: coefficient of x^k in x(x-1)...(x-n+1)."""
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    return Fraction(_signed_stirling_row(n)[k])


def stirling1_unsigned(n: int, k: int) -> Fraction:
    """Unsigned first-kind Stirling number: coefficient of x^k in x(x+1)...(x+n-1)."""
    return abs(stirling1_signed(n, k))


def stirling1_triangle(n_max: int, signed: bool = False) -> CoeffTriangle:
    fn = stirling1_signed if signed else stirling1_unsigned
    return CoeffTriangle.from_entries(n_max, fn)


# -- factorial polynomials -----------------------------------------------------


def falling_factorial(n: int) -> Polynomial:
    """The product x(x-1)...(x-n+1); the empty product for n = 0."""
    if n < 0:
        raise InvalidParameterError("falling factorial needs n >= 0")
    result = Polynomial([1])
    for i in range(n):
        result = result * Polynomial([-i, 1])
    return result


def rising_factorial(n: int) -> Polynomial:
    """The product x(x+1)...(x+n-1); the empty product for n = 0."""
    if n < 0:
        raise InvalidParameterError("rising factorial needs n >= 0")
    result = Polynomial([1])
    for i in range(n):
        result = result * Polynomial([i, 1])
    return result


# -- Lah numbers ----------------------------------------------------------------


def lah(n: int, k: int) -> Fraction:
    """Lah number C(n-1, k-1) * n!/k! for 1 <= k <= n, with L(0,0) = 1."""
    if n < 0 or k < 0:
        return Fraction(0)
    if n == 0 and k == 0:
        return Fraction(1)
    if k == 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n - 1, k - 1) * (math.factorial(n) // math.factorial(k)))


def lah_triangle(n_max: int, signed: bool = False) -> CoeffTriangle:
    """Lah values, or with ``signed`` the coefficient triangle (-1)^k L(n,k)."""
    if signed:
        return CoeffTriangle.from_entries(
            n_max, lambda n, k: -lah(n, k) if k % 2 else lah(n, k))
    return CoeffTriangle.from_entries(n_max, lah)


# -- higher-order Bernoulli and Euler numbers ------------------------------------


def _padded_trunc(trunc: int) -> int:
    # round up so nearby requests share one cached series
    return max(8, -(-trunc // 8) * 8)


@lru_cache(maxsize=None)
def _bernoulli_series(alpha: Fraction, trunc: int) -> Series:
    # (e^t - 1)/t has ordinary coefficients 1/(k+1)!
    base = Series([Fraction(1, math.factorial(k + 1)) for k in range(trunc)])
    return base.inv().rat_pow(alpha)


@lru_cache(maxsize=None)
def _euler_series(alpha: Fraction, trunc: int) -> Series:
    # (e^t + 1)/2 has constant term 1 and ordinary coefficients 1/(2 k!)
    base = Series([Fraction(1)] + [Fraction(1, 2 * math.factorial(k)) for k in range(1, trunc)])
    return base.inv().rat_pow(alpha)


def bernoulli_series(alpha: RationalLike, trunc: int) -> Series:
    """The series (t/(e^t - 1))^alpha truncated to ``trunc`` coefficients."""
    if trunc < 1:
        raise InvalidParameterError("truncation must be a positive integer")
    return _bernoulli_series(Fraction(alpha), trunc)


def euler_series(alpha: RationalLike, trunc: int) -> Series:
    """The series (2/(e^t + 1))^alpha truncated to ``trunc`` coefficients."""
    if trunc < 1:
        raise InvalidParameterError("truncation must be a positive integer")
    return _euler_series(Fraction(alpha), trunc)


def bernoulli_high(n: int, alpha: RationalLike) -> Fraction:
    """n-th Bernoulli number of rational order alpha (exponential coefficient)."""
    if n < 0:
        raise InvalidParameterError("index must be nonnegative")
    return _bernoulli_series(Fraction(alpha), _padded_trunc(n + 1)).egf_coefficient(n)


def euler_high(n: int, alpha: RationalLike) -> Fraction:
    """n-th Euler number of rational order alpha (exponential coefficient)."""
    if n < 0:
        raise InvalidParameterError("index must be nonnegative")
    return _euler_series(Fraction(alpha), _padded_trunc(n + 1)).egf_coefficient(n)


# -- Abel and Mittag-Leffler triangles ----------------------------------------------


def abel_triangle(n_max: int, a: RationalLike) -> CoeffTriangle:
    """Coefficients of x(x - an)^{n-1}: entry C(n-1, k-1) (-an)^{n-k}, row 0 = [1]."""
    a = Fraction(a)
    if a == 0:
        raise InvalidParameterError("abel parameter must be nonzero")

    def entry(n: int, k: int) -> Fraction:
        if n == 0:
            return Fraction(1)
        if k == 0:
            return Fraction(0)
        return math.comb(n - 1, k - 1) * (-a * n) ** (n - k)

    return CoeffTriangle.from_entries(n_max, entry)


def mittag_leffler_triangle(n_max: int) -> CoeffTriangle:
    """Coefficient triangle of sum_r C(n,r) (n-1)!/(r-1)! 2^r x(x-1)...(x-r+1).

    The reciprocal factorial 1/(-1)! is taken as 0, killing the r = 0
    term for n >= 1; row 0 is [1] by convention.
    """

    def entry(n: int, k: int) -> Fraction:
        if n == 0:
            return Fraction(1)
        acc = Fraction(0)
        for r in range(max(k, 1), n + 1):
            weight = math.comb(n, r) * (math.factorial(n - 1) // math.factorial(r - 1)) * 2**r
            s = stirling1_signed(r, k)
            if s:
                acc += weight * s
        return acc

    return CoeffTriangle.from_entries(n_max, entry)


# -- multinomials and compositions ----------------------------------------------------


def multinomial(top: int, parts: Sequence[int]) -> Fraction:
    """top! / prod(parts_i!) for nonnegative parts summing to top."""
    parts = tuple(parts)
    if top < 0 or any(p < 0 for p in parts):
        raise InvalidParameterError("multinomial arguments must be nonnegative")
    if sum(parts) != top:
        raise InvalidParameterError(f"parts {parts} do not sum to {top}")
    value = math.factorial(top)
    for p in parts:
        value //= math.factorial(p)
    return Fraction(value)


def compositions(total: int, parts: int) -> Iterator[tuple]:
    """All tuples of ``parts`` nonnegative integers summing to ``total``,
    exactly once each, in lexicographic order."""
    if total < 0 or parts < 0:
        raise InvalidParameterError("composition arguments must be nonnegative")
    if parts == 0 and total > 0:
        raise InvalidParameterError("cannot split a positive total into zero parts")
    return _compositions(total, parts)


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    if parts == 0:
        yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
