"""Exact Gaussian-rational arithmetic.

Rationals are :class:`fractions.Fraction` (always reduced, positive
denominator).  :class:`GaussianRational` pairs two of them into an element
of Q(i); nothing here ever rounds.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, isqrt
from typing import Union

from .errors import DivisionByZero, ParseError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")

#: Number of extra binary digits kept by the ``sqrt`` modulus policy.
SQRT_POLICY_BITS = 32

MODULUS_POLICIES = ("sum", "sqrt")


def format_rational(q: Fraction) -> str:
    """Render ``q`` as ``"p/q"``, dropping the denominator when it is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ParseError(f"not a rational literal: {text!r}")
    num, _, den = text.strip().partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


Scalar = Union["GaussianRational", Fraction, int]


class GaussianRational:
    """An element re + im*i of Q(i).  Immutable."""

    __slots__ = ("_re", "_im")

    def __init__(self, re: Fraction | int = 0, im: Fraction | int = 0):
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    @classmethod
    def coerce(cls, value: Scalar) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    def __bool__(self) -> bool:
        return bool(self._re) or bool(self._im)

    def is_real(self) -> bool:
        return not self._im

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Fraction)):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self._im:
            return hash(self._re)
        return hash((self._re, self._im))

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self._re, -self._im)

    def __pos__(self) -> "GaussianRational":
        return self

    def __add__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other: Scalar) -> "GaussianRational":
        return -self + other

    def __mul__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        if not b and not d:
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Squared modulus re^2 + im^2 (exact)."""
        return self._re * self._re + self._im * self._im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self._re, -self._im)

    conj = conjugate

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise DivisionByZero("division by zero in Q(i)")
        return GaussianRational(self._re / n, -self._im / n)

    def __truediv__(self, other: Scalar) -> "GaussianRational":
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._im:
            if not other._re:
                raise DivisionByZero("division by zero in Q(i)")
            return GaussianRational(self._re / other._re, self._im / other._re)
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "GaussianRational":
        return GaussianRational.coerce(other) / self

    def __repr__(self) -> str:
        return f"GaussianRational({format_rational(self._re)!r}, {format_rational(self._im)!r})"

    def __str__(self) -> str:
        if not self._im:
            return format_rational(self._re)
        if not self._re:
            return f"{format_rational(self._im)}i"
        sign = "-" if self._im < 0 else "+"
        return f"{format_rational(self._re)}{sign}{format_rational(abs(self._im))}i"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def _ceil_sqrt(n: int) -> int:
    if n <= 0:
        return 0
    r = isqrt(n)
    return r if r * r == n else r + 1


def modulus_upper_bound(c: Scalar, policy: str = "sum") -> Fraction:
    """Rational B with |c| <= B.

    ``"sum"`` returns |re| + |im|.  ``"sqrt"`` encloses sqrt(re^2 + im^2)
    from above on a grid of 2**-SQRT_POLICY_BITS relative to the common
    denominator, and never returns more than the ``"sum"`` bound.
    """
    c = GaussianRational.coerce(c)
    loose = abs(c.re) + abs(c.im)
    if policy == "sum":
        return loose
    if policy != "sqrt":
        raise ValueError(f"unknown modulus policy {policy!r}")
    if not c.im or not c.re:
        return loose
    den = c.re.denominator * c.im.denominator // gcd(c.re.denominator, c.im.denominator)
    a = c.re.numerator * (den // c.re.denominator)
    b = c.im.numerator * (den // c.im.denominator)
    scale = 1 << SQRT_POLICY_BITS
    tight = Fraction(_ceil_sqrt((a * a + b * b) * scale * scale), den * scale)
    return min(tight, loose)

