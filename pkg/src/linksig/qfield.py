"""Exact arithmetic in a quadratic extension Q(delta), delta**2 = d2.

Points on the unit circle with rational cosine c live in Q(delta) with
d2 = c**2 - 1, so Laurent polynomials and Hermitian matrices can be
evaluated there without floating point.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _norm_rational(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


class QuadraticNumber:
    """a + b*delta with delta**2 == d2 (all rational)."""

    __slots__ = ("a", "b", "d2")

    def __init__(self, a, b=0, d2=0):
        self.d2 = _norm_rational(d2)
        self.a = _norm_rational(a)
        # delta = 0 when d2 = 0, so the delta-part carries no information
        self.b = _norm_rational(b) if self.d2 != 0 else 0

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d2 != self.d2 and other.b != 0 and self.b != 0:
                raise ValueError("mixing quadratic numbers from different fields")
            return other
        if isinstance(other, Rational):
            return QuadraticNumber(other, 0, self.d2)
        return NotImplemented

    def _field(self, other):
        return self.d2 if self.b != 0 or other.b == 0 else other.d2

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticNumber(self.a + other.a, self.b + other.b, self._field(other))

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.a, -self.b, self.d2)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticNumber(self.a - other.a, self.b - other.b, self._field(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d2 = self._field(other)
        return QuadraticNumber(
            self.a * other.a + d2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
            d2,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b, self.d2)

    def norm(self):
        return self.a * self.a - self.d2 * self.b * self.b

    def inverse(self) -> QuadraticNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("quadratic number has zero norm")
        return QuadraticNumber(Fraction(self.a) / n, Fraction(-self.b) / n, self.d2)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0 or self.d2 == 0

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.a

    def sign(self) -> int:
        """Sign of a rational element; irrational elements have no order here."""
        v = self.rational_value()
        return (v > 0) - (v < 0)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"QuadraticNumber({self.a}, {self.b}, d2={self.d2})"
