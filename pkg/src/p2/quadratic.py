"""
Module: quadratic.py
Part of the Restriction Stability Toolkit.

Exact real quadratic irrationals a + b·√n with rational a, b and square-free
n, totally ordered by exact sign determination.

Public API:
    QuadraticNumber
        .rational(x), .sqrt(x)     -- builders
        .sign(), .compare(other)   -- exact order, also across fields
        .floor()                   -- exact floor
        .to_sympy()                -- reference evaluation in tests/CLI
        arithmetic: +, -, * within one field or with rationals, / by rationals

Sign rules:
    sign(a + b√n): when a and b agree in sign (or one is zero) that sign
    wins; otherwise compare a² with b²n.
    Two numbers from distinct fields Q(√n1), Q(√n2): write the difference as
    X + Y with X = (a1 − a2) + b1√n1 and Y = −b2√n2. If X and Y disagree in
    sign, the larger of X² and Y² decides; X² − Y² lies in Q(√n1).

Floats appear only in ``__float__`` for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

import sympy
from sympy.ntheory.factor_ import core

Number = Union[int, Fraction]


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
@dataclass(frozen=True, eq=False)
class QuadraticNumber:
    """Exact value a + b·√n; normalized so n is square-free and b = 0 iff n = 0."""

    a: Fraction
    b: Fraction = Fraction(0)
    n: int = 0

    def __post_init__(self) -> None:
        a, b, n = Fraction(self.a), Fraction(self.b), int(self.n)
        if n < 0:
            raise ValueError(f"radicand must be nonnegative, got {n}")
        if b == 0 or n == 0:
            b, n = Fraction(0), 0
        else:
            free = int(core(n, 2))
            b *= math.isqrt(n // free)
            n = free
            if n == 1:
                a, b, n = a + b, Fraction(0), 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "n", n)

    # -- builders ----------------------------------------------------------

    @classmethod
    def rational(cls, x: Number) -> "QuadraticNumber":
        return cls(Fraction(x))

    @classmethod
    def sqrt(cls, x: Number) -> "QuadraticNumber":
        """√x for rational x ≥ 0, as (1/q)·√(pq)."""
        x = Fraction(x)
        if x < 0:
            raise ValueError(f"square root of negative rational {x}")
        return cls(Fraction(0), Fraction(1, x.denominator), x.numerator * x.denominator)

    @staticmethod
    def coerce(value: "QuadraticNumber | Number") -> "QuadraticNumber":
        if isinstance(value, QuadraticNumber):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return QuadraticNumber(Fraction(value))
        raise TypeError(f"cannot use {type(value).__name__} as a quadratic number")

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def conjugate(self) -> "QuadraticNumber":
        return QuadraticNumber(self.a, -self.b, self.n)

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        gap = self.a * self.a - self.b * self.b * self.n
        return _sign(gap) if sa > 0 else -_sign(gap)

    def _same_field(self, other: "QuadraticNumber") -> bool:
        return self.n == other.n or self.b == 0 or other.b == 0

    def _radicand(self, other: "QuadraticNumber") -> int:
        return self.n or other.n

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "QuadraticNumber | Number") -> "QuadraticNumber":
        other = self.coerce(other)
        if not self._same_field(other):
            raise ValueError(f"cannot add elements of Q(√{self.n}) and Q(√{other.n})")
        return QuadraticNumber(self.a + other.a, self.b + other.b, self._radicand(other))

    __radd__ = __add__

    def __neg__(self) -> "QuadraticNumber":
        return QuadraticNumber(-self.a, -self.b, self.n)

    def __sub__(self, other: "QuadraticNumber | Number") -> "QuadraticNumber":
        return self + (-self.coerce(other))

    def __rsub__(self, other: Number) -> "QuadraticNumber":
        return self.coerce(other) - self

    def __mul__(self, other: "QuadraticNumber | Number") -> "QuadraticNumber":
        other = self.coerce(other)
        if not self._same_field(other):
            raise ValueError(f"cannot multiply elements of Q(√{self.n}) and Q(√{other.n})")
        n = self._radicand(other)
        return QuadraticNumber(
            self.a * other.a + self.b * other.b * n,
            self.a * other.b + self.b * other.a,
            n,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Number) -> "QuadraticNumber":
        if isinstance(other, QuadraticNumber):
            if not other.is_rational:
                norm = other * other.conjugate()
                return (self * other.conjugate()) / norm.a
            other = other.a
        divisor = Fraction(other)
        return QuadraticNumber(self.a / divisor, self.b / divisor, self.n)

    def __abs__(self) -> "QuadraticNumber":
        return -self if self.sign() < 0 else self

    # -- order -------------------------------------------------------------

    def compare(self, other: "QuadraticNumber | Number") -> int:
        """Exact sign of ``self − other``."""
        other = self.coerce(other)
        if self._same_field(other):
            return (self - other).sign()
        x = QuadraticNumber(self.a - other.a, self.b, self.n)
        y = QuadraticNumber(Fraction(0), -other.b, other.n)
        sx, sy = x.sign(), y.sign()
        if sx == 0:
            return sy
        if sy == 0 or sx == sy:
            return sx
        magnitude = (x * x - (y * y).a).sign()
        if magnitude > 0:
            return sx
        if magnitude < 0:
            return sy
        return 0

    def __eq__(self, other: object) -> bool:
        try:
            other = self.coerce(other)  # type: ignore[arg-type]
        except TypeError:
            return NotImplemented
        return (self.a, self.b, self.n) == (other.a, other.b, other.n)

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(self.a)
        return hash((self.a, self.b, self.n))

    def __lt__(self, other: "QuadraticNumber | Number") -> bool:
        return self.compare(other) < 0

    def floor(self) -> int:
        guess = math.floor(self.a + self.b * math.isqrt(self.n))
        while self.compare(guess) < 0:
            guess -= 1
        while self.compare(guess + 1) >= 0:
            guess += 1
        return guess

    # -- conversions -------------------------------------------------------

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.n)

    def to_sympy(self) -> sympy.Expr:
        return sympy.Rational(self.a.numerator, self.a.denominator) + sympy.Rational(
            self.b.numerator, self.b.denominator
        ) * sympy.sqrt(self.n)

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a)
        scale = math.lcm(self.a.denominator, self.b.denominator)
        a, b = int(self.a * scale), int(self.b * scale)
        body = f"{a}{b:+d}√{self.n}" if a else f"{b}√{self.n}"
        return body if scale == 1 else f"({body})/{scale}"

    def __repr__(self) -> str:
        return f"QuadraticNumber({self})"
