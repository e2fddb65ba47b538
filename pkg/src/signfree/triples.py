"""Cyclic three-component vectors: complex numbers without signs.

A :class:`CyclicTriple` ``t{a,b,c}`` has nonnegative components and the
cyclic product rule (second basis element squared gives the third, and
so on around).  Adding a constant vector ``(k, k, k)`` never changes the
encoded value, so equality compares reduced forms.  Under that quotient
the system is the complex plane: ``(a, b, c)`` stands for
``a + b*w + c*w**2`` with ``w = exp(2*pi*i/3)``.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .scalars import ExactScalar, as_scalar, require_nonneg

__all__ = ["CyclicTriple"]

_SCALARISH = (ExactScalar, int, Fraction, str)
_HALF = Fraction(1, 2)
_THIRD = Fraction(1, 3)


class CyclicTriple:
    """Nonnegative ``(a, b, c)`` with cyclic multiplication."""

    __slots__ = ("_a", "_b", "_c")

    def __init__(self, a: object = 0, b: object = 0, c: object = 0) -> None:
        self._a = require_nonneg(a, "component a")
        self._b = require_nonneg(b, "component b")
        self._c = require_nonneg(c, "component c")

    @classmethod
    def zero(cls) -> "CyclicTriple":
        return cls(0, 0, 0)

    @classmethod
    def one(cls) -> "CyclicTriple":
        return cls(1, 0, 0)

    @classmethod
    def from_signed(cls, value: object) -> "CyclicTriple":
        """Embed a real number: v >= 0 as (v,0,0), v < 0 as (0,-v,-v)."""
        scalar = as_scalar(value)
        if scalar.sign() < 0:
            return cls(0, -scalar, -scalar)
        return cls(scalar, 0, 0)

    @classmethod
    def from_complex(cls, value: complex, digits: int = 12) -> "CyclicTriple":
        """Reduced representative of a complex number.

        The real and imaginary parts are rationalized to `digits` decimal
        places, so the round trip through :meth:`to_complex` is accurate
        to roughly 10**-digits.
        """
        z = complex(value)
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError("cannot represent a non-finite complex value")
        scale = 10**digits
        x = Fraction(round(Fraction(z.real) * scale), scale)
        y = Fraction(round(Fraction(z.imag) * scale), scale)
        triple = cls(x, 0, 0) if x >= 0 else cls(0, -x, -x)
        if y >= 0:
            # y * (sqrt3/3) * (1, 2, 0) contributes exactly i*y
            triple = triple + cls(ExactScalar(0, y * _THIRD), ExactScalar(0, 2 * y * _THIRD), 0)
        else:
            triple = triple + cls(ExactScalar(0, -y * _THIRD), 0, ExactScalar(0, -2 * y * _THIRD))
        return triple.reduce()

    @property
    def a(self) -> ExactScalar:
        return self._a

    @property
    def b(self) -> ExactScalar:
        return self._b

    @property
    def c(self) -> ExactScalar:
        return self._c

    @property
    def components(self) -> tuple[ExactScalar, ExactScalar, ExactScalar]:
        return (self._a, self._b, self._c)

    def __add__(self, other: object) -> "CyclicTriple":
        if not isinstance(other, CyclicTriple):
            return NotImplemented
        return CyclicTriple(self._a + other._a, self._b + other._b, self._c + other._c)

    def __mul__(self, other: object) -> "CyclicTriple":
        if isinstance(other, CyclicTriple):
            a1, b1, c1 = self._a, self._b, self._c
            a2, b2, c2 = other._a, other._b, other._c
            return CyclicTriple(
                a1 * a2 + b1 * c2 + b2 * c1,
                a1 * b2 + a2 * b1 + c1 * c2,
                a1 * c2 + a2 * c1 + b1 * b2,
            )
        if isinstance(other, _SCALARISH):
            factor = require_nonneg(other, "scale factor")
            return CyclicTriple(factor * self._a, factor * self._b, factor * self._c)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CyclicTriple":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative powers are not defined for triples")
        result = CyclicTriple.one()
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def reduce(self) -> "CyclicTriple":
        """Subtract the minimum component from all three; idempotent."""
        m = min(self._a, self._b, self._c)
        return CyclicTriple(self._a - m, self._b - m, self._c - m)

    @property
    def is_reduced(self) -> bool:
        return min(self._a, self._b, self._c).sign() == 0

    def norm_sq(self) -> ExactScalar:
        """Exact squared length: a^2 + b^2 + c^2 - ab - ac - bc.

        Invariant under adding constant vectors, multiplicative, and zero
        exactly when a = b = c.
        """
        a, b, c = self._a, self._b, self._c
        return a * a + b * b + c * c - a * b - a * c - b * c

    def norm(self) -> float:
        return math.sqrt(max(0.0, float(self.norm_sq())))

    def conj(self) -> "CyclicTriple":
        """Swap b and c: the complex conjugate under the quotient."""
        return CyclicTriple(self._a, self._c, self._b)

    def to_complex(self) -> complex:
        re = self._a - (self._b + self._c) * ExactScalar(_HALF)
        im = (self._b - self._c) * ExactScalar(0, _HALF)
        return complex(float(re), float(im))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicTriple):
            return NotImplemented
        return self.reduce().components == other.reduce().components

    def __hash__(self) -> int:
        return hash(("CyclicTriple",) + self.reduce().components)

    def __str__(self) -> str:
        return f"t{{{self._a},{self._b},{self._c}}}"

    def __repr__(self) -> str:
        return f"CyclicTriple({self._a}, {self._b}, {self._c})"
