"""Exact integer/rational arithmetic and small dense integer matrices.

Counts are plain Python ints (arbitrary precision); rationals are
:class:`fractions.Fraction`, which is always kept in lowest terms with a
positive denominator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

ExactInt = int
ExactRatio = Fraction


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ShapeError(ValueError):
    """Matrix dimensions are incompatible."""


class NonIntegralError(ArithmeticError):
    """A rational value expected to be integral did not reduce to one."""

    def __init__(self, value: Fraction):
        super().__init__(f"{value} is not an integer")
        self.value = value


@lru_cache(maxsize=4096)
def binomial(n: int, k: int) -> int:
    """C(n, k) by the multiplicative method; 0 when k < 0 or k > n."""
    if n < 0:
        raise DomainError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    acc = 1
    for i in range(1, k + 1):
        # acc * (n-k+i) is divisible by i at every step
        acc = acc * (n - k + i) // i
    return acc


def multinomial(total: int, parts: Sequence[int]) -> int:
    if any(x < 0 for x in parts):
        raise DomainError(f"negative part in {list(parts)}")
    if sum(parts) != total:
        raise DomainError(f"parts {list(parts)} do not sum to {total}")
    acc = 1
    remaining = total
    for x in parts:
        acc *= binomial(remaining, x)
        remaining -= x
    return acc


def ratio_to_int(r: Fraction) -> int:
    r = Fraction(r)
    if r.denominator != 1:
        raise NonIntegralError(r)
    return r.numerator


@dataclass(frozen=True)
class CountMatrix:
    """Dense rows x cols matrix of exact integers, 0-indexed."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries or not self.entries[0]:
            raise DomainError("matrix must have at least one row and column")
        width = len(self.entries[0])
        if any(len(row) != width for row in self.entries):
            raise ShapeError("ragged rows")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "CountMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) outside {self.rows}x{self.cols} matrix")
        return self.entries[i][j]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __matmul__(self, other: "CountMatrix") -> "CountMatrix":
        return mat_mul(self, other)

    @property
    def T(self) -> "CountMatrix":
        return mat_transpose(self)


@dataclass(frozen=True)
class CountTriangle:
    """Lower-triangular ragged table: row p holds entries q = 0..p."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.entries:
            raise DomainError("triangle must have at least one row")
        for p, row in enumerate(self.entries):
            if len(row) != p + 1:
                raise ShapeError(f"row {p} has length {len(row)}, expected {p + 1}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "CountTriangle":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, pq: tuple[int, int]) -> int:
        p, q = pq
        if not (0 <= q <= p < self.size):
            raise IndexError(f"({p}, {q}) is not a cell of a size-{self.size} triangle")
        return self.entries[p][q]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.entries)

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def diagonal(self) -> list[int]:
        return [row[-1] for row in self.entries]


def _check_order(n: int) -> None:
    if n < 1:
        raise DomainError(f"matrix order must be >= 1, got {n}")


def pascal_matrix(n: int) -> CountMatrix:
    """Lower-triangular n x n Pascal matrix, entry (i, j) = C(i, j)."""
    _check_order(n)
    return CountMatrix.from_rows(
        (binomial(i, j) for j in range(n)) for i in range(n)
    )


def diag_pow2(n: int) -> CountMatrix:
    """diag(1, 2, 4, ..., 2**(n-1))."""
    _check_order(n)
    return CountMatrix.from_rows(
        ((1 << i) if i == j else 0 for j in range(n)) for i in range(n)
    )


def identity_matrix(n: int) -> CountMatrix:
    _check_order(n)
    return CountMatrix.from_rows((int(i == j) for j in range(n)) for i in range(n))


def mat_mul(a: CountMatrix, b: CountMatrix) -> CountMatrix:
    if a.cols != b.rows:
        raise ShapeError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    b_cols = list(zip(*b.entries))
    return CountMatrix.from_rows(
        (sum(x * y for x, y in zip(row, col)) for col in b_cols) for row in a.entries
    )


def mat_transpose(a: CountMatrix) -> CountMatrix:
    return CountMatrix(tuple(zip(*a.entries)))
