"""Lower-triangular coefficient matrices of polynomial sequences.

Row ``n`` holds the coefficients ``s_{n,0} .. s_{n,n}`` of the n-th
polynomial; entries above the diagonal are implicitly zero.  Umbral
composition of sequences is matrix multiplication of these triangles,
so the class carries exact matmul / matpow alongside row access.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import InvalidInputError, InvalidParameterError, OutOfRangeError
from .polynomials import Polynomial
from .rationals import RationalLike, format_rational


class CoeffTriangle:
    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[RationalLike]]):
        packed = []
        for n, row in enumerate(rows):
            entries = tuple(Fraction(c) for c in row)
            if len(entries) != n + 1:
                raise InvalidInputError(f"row {n} must have {n + 1} entries, got {len(entries)}")
            packed.append(entries)
        if not packed:
            raise InvalidInputError("a triangle needs at least row 0")
        self._rows = tuple(packed)

    @classmethod
    def identity(cls, n_max: int) -> "CoeffTriangle":
        return cls.from_entries(n_max, lambda n, k: Fraction(1) if n == k else Fraction(0))

    @classmethod
    def from_entries(cls, n_max: int, entry: Callable[[int, int], RationalLike]) -> "CoeffTriangle":
        if n_max < 0:
            raise InvalidParameterError("n_max must be nonnegative")
        return cls([[entry(n, k) for k in range(n + 1)] for n in range(n_max + 1)])

    @property
    def n_max(self) -> int:
        return len(self._rows) - 1

    @property
    def rows(self) -> tuple:
        return self._rows

    def row(self, n: int) -> tuple:
        if not 0 <= n <= self.n_max:
            raise OutOfRangeError(f"row {n} outside triangle of size {self.n_max}")
        return self._rows[n]

    def entry(self, n: int, k: int) -> Fraction:
        if not 0 <= n <= self.n_max:
            raise OutOfRangeError(f"row {n} outside triangle of size {self.n_max}")
        if k < 0 or k > n:
            return Fraction(0)
        return self._rows[n][k]

    def row_polynomial(self, n: int) -> Polynomial:
        return Polynomial(self.row(n))

    def matmul(self, other: "CoeffTriangle") -> "CoeffTriangle":
        """Triangle product ``result[n][j] = sum_k self[n][k] * other[k][j]``."""
        if self.n_max != other.n_max:
            raise InvalidInputError(
                f"triangle sizes differ: {self.n_max} vs {other.n_max}")
        rows = []
        for n in range(self.n_max + 1):
            left = self._rows[n]
            row = []
            for j in range(n + 1):
                acc = Fraction(0)
                for k in range(j, n + 1):
                    a = left[k]
                    if a:
                        b = other._rows[k][j]
                        if b:
                            acc += a * b
                row.append(acc)
            rows.append(row)
        return CoeffTriangle(rows)

    __matmul__ = matmul

    def matpow(self, m: int) -> "CoeffTriangle":
        """m-th matrix power, m >= 1 (the identity is available explicitly)."""
        if m < 1:
            raise InvalidParameterError("matrix power needs m >= 1")
        result = self
        for _ in range(m - 1):
            result = result.matmul(self)
        return result

    def csv_lines(self) -> Iterator[str]:
        yield "n,k,value"
        for n, row in enumerate(self._rows):
            for k, value in enumerate(row):
                yield f"{n},{k},{format_rational(value)}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoeffTriangle):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"CoeffTriangle(n_max={self.n_max})"
