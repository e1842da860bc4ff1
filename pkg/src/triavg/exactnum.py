"""Exact arithmetic in the quadratic extension Q(sqrt(3)).

Python integers are arbitrary precision and ``fractions.Fraction`` keeps
rationals reduced with a positive denominator, so those two builtin types
serve directly as the integer and rational substrate. What this module adds
is ``QuadElem``, the number a + b*sqrt(3) with exact rational coefficients,
closed under ring arithmetic, plus integer square-root helpers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


def isqrt(m: int) -> int:
    """Floor of the square root of a nonnegative integer."""
    if m < 0:
        raise ValueError(f"isqrt is undefined for negative input {m}")
    return math.isqrt(m)


def is_perfect_square(m: int) -> int | None:
    """Exact square root of m, or None when m is negative or not a square."""
    if m < 0:
        return None
    root = math.isqrt(m)
    return root if root * root == m else None


@dataclass(frozen=True)
class QuadElem:
    """The real number a + b*sqrt(3), with exact rational a and b.

    sqrt(3) is irrational, so the coefficient pair is unique per value and
    field equality is numeric equality. Sums, differences and products stay
    in the ring. Division by another QuadElem is deliberately not provided;
    scaling by a rational covers every use here.
    """

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        for name, value in (("a", self.a), ("b", self.b)):
            if not isinstance(value, (int, Fraction)):
                raise TypeError(
                    f"{name} must be exact (int or Fraction), got {type(value).__name__}"
                )
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __add__(self, other: QuadElem | int | Fraction) -> QuadElem:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QuadElem(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other: QuadElem | int | Fraction) -> QuadElem:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QuadElem(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: int | Fraction) -> QuadElem:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> QuadElem:
        return QuadElem(-self.a, -self.b)

    def __mul__(self, other: QuadElem | int | Fraction) -> QuadElem:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return QuadElem(
            self.a * other.a + 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __truediv__(self, scalar: int | Fraction) -> QuadElem:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return QuadElem(self.a / scalar, self.b / scalar)

    def __pow__(self, n: int) -> QuadElem:
        """n-th power by binary exponentiation, n >= 0."""
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("QuadElem powers are defined for n >= 0 only")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conjugate(self) -> QuadElem:
        """Image under sqrt(3) -> -sqrt(3); swaps alpha and beta."""
        return QuadElem(self.a, -self.b)

    def as_integer(self) -> int:
        """This element as a plain int.

        Raises ArithmeticError when the sqrt(3) component is nonzero or the
        rational part has a denominator. Closed-form sequence evaluation
        relies on both cancellations, so a failure here is an internal bug,
        never a caller error.
        """
        if self.b:
            raise ArithmeticError(f"sqrt(3) component did not cancel: {self}")
        if self.a.denominator != 1:
            raise ArithmeticError(f"value is not an integer: {self}")
        return self.a.numerator

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt(3)"


def _coerce(value: object) -> QuadElem | None:
    if isinstance(value, QuadElem):
        return value
    if isinstance(value, (int, Fraction)):
        return QuadElem(Fraction(value), Fraction(0))
    return None


ZERO = QuadElem(Fraction(0), Fraction(0))
ONE = QuadElem(Fraction(1), Fraction(0))
SQRT3 = QuadElem(Fraction(0), Fraction(1))

# Roots of x^2 - 4x + 1. They satisfy alpha + beta = 4 and alpha * beta = 1,
# which drives every closed form in the recurrences module.
ALPHA = QuadElem(Fraction(2), Fraction(1))
BETA = QuadElem(Fraction(2), Fraction(-1))
