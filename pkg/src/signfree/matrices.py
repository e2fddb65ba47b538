"""3x3 nonnegative matrices built from three cyclic-triple columns.

A :class:`CyclicMatrix` is stored and printed with rows a, b, c top to
bottom and columns A, B, C left to right.  Each column is a
:class:`~signfree.triples.CyclicTriple`, and the columns themselves
follow the same cyclic rule (B*B lands in C, B*C in A, C*C in B), which
makes the product commutative, associative and distributive.

Two families of additive zeros exist:

* absolute zeros -- every column constant; adding one never changes an
  element's class, so equality quotients by them (column-wise reduce);
* rotation zeros -- one positive entry per row (27 patterns); they have
  norm zero and absorb products to norm zero, but are *not* equivalent
  to the zero class in general.

``characters()`` gives three complex fingerprints that are additive and
multiplicative modulo absolute zeros and separate equivalence classes;
they serve as an independent cross-check on the exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _iter_product
from typing import Iterable

from .scalars import ExactScalar, as_scalar, require_nonneg
from .triples import CyclicTriple

__all__ = [
    "CyclicMatrix",
    "RowSelector",
    "absolute_zero",
    "rotation_zero",
    "find_square_roots",
    "characters_close",
]

_SCALARISH = (ExactScalar, int, Fraction, str)
_OMEGA = complex(-0.5, math.sqrt(3.0) / 2.0)
_OMEGA2 = complex(-0.5, -math.sqrt(3.0) / 2.0)

_ROWS = ("a", "b", "c")
_COLUMNS = ("A", "B", "C")


@dataclass(frozen=True)
class RowSelector:
    """Choice of one column per row: the support pattern of a rotation zero."""

    a: str = "A"
    b: str = "B"
    c: str = "C"

    def __post_init__(self) -> None:
        for row, column in zip(_ROWS, (self.a, self.b, self.c)):
            if column not in _COLUMNS:
                raise ValueError(f"row {row} must select one of {_COLUMNS}, got {column!r}")

    @property
    def choices(self) -> tuple[str, str, str]:
        return (self.a, self.b, self.c)

    @classmethod
    def identity(cls) -> "RowSelector":
        return cls("A", "B", "C")

    @classmethod
    def all(cls) -> tuple["RowSelector", ...]:
        return tuple(cls(*choice) for choice in _iter_product(_COLUMNS, repeat=3))

    def __str__(self) -> str:
        return " ".join(f"{row}->{col}" for row, col in zip(_ROWS, self.choices))


def _as_column(value: object, which: str) -> CyclicTriple:
    if isinstance(value, CyclicTriple):
        return value
    if isinstance(value, (tuple, list)) and len(value) == 3:
        return CyclicTriple(*value)
    raise TypeError(f"column {which} must be a CyclicTriple or a 3-sequence")


class CyclicMatrix:
    """Three cyclic-triple columns A, B, C multiplying cyclically."""

    __slots__ = ("_col_a", "_col_b", "_col_c")

    def __init__(self, col_a: object, col_b: object, col_c: object) -> None:
        self._col_a = _as_column(col_a, "A")
        self._col_b = _as_column(col_b, "B")
        self._col_c = _as_column(col_c, "C")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[object]]) -> "CyclicMatrix":
        """Build from the printed layout (three rows, top to bottom)."""
        grid = [list(row) for row in rows]
        if len(grid) != 3 or any(len(row) != 3 for row in grid):
            raise ValueError("expected a 3x3 grid of entries")
        return cls(
            CyclicTriple(grid[0][0], grid[1][0], grid[2][0]),
            CyclicTriple(grid[0][1], grid[1][1], grid[2][1]),
            CyclicTriple(grid[0][2], grid[1][2], grid[2][2]),
        )

    @classmethod
    def zero(cls) -> "CyclicMatrix":
        return cls(CyclicTriple.zero(), CyclicTriple.zero(), CyclicTriple.zero())

    @classmethod
    def one(cls) -> "CyclicMatrix":
        return cls(CyclicTriple.one(), CyclicTriple.zero(), CyclicTriple.zero())

    @classmethod
    def from_signed(cls, value: object) -> "CyclicMatrix":
        """Embed a real number into column A."""
        return cls(CyclicTriple.from_signed(value), CyclicTriple.zero(), CyclicTriple.zero())

    @property
    def col_a(self) -> CyclicTriple:
        return self._col_a

    @property
    def col_b(self) -> CyclicTriple:
        return self._col_b

    @property
    def col_c(self) -> CyclicTriple:
        return self._col_c

    @property
    def columns(self) -> tuple[CyclicTriple, CyclicTriple, CyclicTriple]:
        return (self._col_a, self._col_b, self._col_c)

    def rows(self) -> tuple[tuple[ExactScalar, ExactScalar, ExactScalar], ...]:
        """Entries in the printed layout (rows top to bottom)."""
        cols = [col.components for col in self.columns]
        return tuple(tuple(cols[s][r] for s in range(3)) for r in range(3))

    def __add__(self, other: object) -> "CyclicMatrix":
        if not isinstance(other, CyclicMatrix):
            return NotImplemented
        return CyclicMatrix(
            self._col_a + other._col_a,
            self._col_b + other._col_b,
            self._col_c + other._col_c,
        )

    def __mul__(self, other: object) -> "CyclicMatrix":
        if isinstance(other, CyclicMatrix):
            a1, b1, c1 = self.columns
            a2, b2, c2 = other.columns
            return CyclicMatrix(
                a1 * a2 + b1 * c2 + b2 * c1,
                a1 * b2 + a2 * b1 + c1 * c2,
                a1 * c2 + a2 * c1 + b1 * b2,
            )
        if isinstance(other, _SCALARISH):
            factor = require_nonneg(other, "scale factor")
            return CyclicMatrix(factor * self._col_a, factor * self._col_b, factor * self._col_c)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CyclicMatrix":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative powers are not defined for matrices")
        result = CyclicMatrix.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def reduce(self) -> "CyclicMatrix":
        """Reduce each column independently by its own minimum; idempotent."""
        return CyclicMatrix(self._col_a.reduce(), self._col_b.reduce(), self._col_c.reduce())

    @property
    def is_reduced(self) -> bool:
        return all(col.is_reduced for col in self.columns)

    def row_sums(self) -> CyclicTriple:
        """The triple of row sums; an exact homomorphism onto triples."""
        return self._col_a + self._col_b + self._col_c

    def norm_sq(self) -> ExactScalar:
        return self.row_sums().norm_sq()

    def norm(self) -> float:
        return self.row_sums().norm()

    def characters(self) -> tuple[complex, complex, complex]:
        """Three complex fingerprints, constant on equivalence classes."""
        pa = self._col_a.to_complex()
        pb = self._col_b.to_complex()
        pc = self._col_c.to_complex()
        return (
            pa + pb + pc,
            pa + _OMEGA * pb + _OMEGA2 * pc,
            pa + _OMEGA2 * pb + _OMEGA * pc,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicMatrix):
            return NotImplemented
        return all(mine == theirs for mine, theirs in zip(self.columns, other.columns))

    def __hash__(self) -> int:
        return hash(("CyclicMatrix",) + tuple(col.reduce().components for col in self.columns))

    def __str__(self) -> str:
        rows = self.rows()
        body = ";".join("[" + ",".join(str(entry) for entry in row) + "]" for row in rows)
        return f"m{{{body}}}"

    def __repr__(self) -> str:
        return f"CyclicMatrix({self._col_a!r}, {self._col_b!r}, {self._col_c!r})"


def absolute_zero(xi: object, zeta: object, eta: object) -> CyclicMatrix:
    """Constant-column matrix: a member of the zero class."""
    x = require_nonneg(xi, "column A constant")
    z = require_nonneg(zeta, "column B constant")
    e = require_nonneg(eta, "column C constant")
    return CyclicMatrix(CyclicTriple(x, x, x), CyclicTriple(z, z, z), CyclicTriple(e, e, e))


def rotation_zero(selector: RowSelector, xi: object) -> CyclicMatrix:
    """Matrix with entry xi at (row, selector(row)) for each row.

    All 27 such matrices have norm zero, absorb any product to norm
    zero, and leave norms unchanged under addition -- yet in general
    they are not equivalent to the zero class.
    """
    value = as_scalar(xi)
    if value.sign() <= 0:
        raise ValueError(f"rotation zeros need a positive entry, got {value}")
    zero = ExactScalar(0)
    grid = [[zero] * 3 for _ in range(3)]
    for row_index, column in enumerate(selector.choices):
        grid[row_index][_COLUMNS.index(column)] = value
    return CyclicMatrix.from_rows(grid)


def find_square_roots(target: CyclicMatrix, candidates: Iterable[CyclicMatrix]) -> list[CyclicMatrix]:
    """Candidates whose square is equivalent to `target`."""
    return [candidate for candidate in candidates if candidate * candidate == target]


def characters_close(x: CyclicMatrix, y: CyclicMatrix, tol: float = 1e-9) -> bool:
    """Whether all three character fingerprints agree within `tol`."""
    return all(abs(cx - cy) <= tol for cx, cy in zip(x.characters(), y.characters()))
