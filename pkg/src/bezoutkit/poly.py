"""Sparse multivariate polynomials over Q(i) and polydisk majorants.

A monomial is a tuple of ``n`` non-negative exponents; index 0 is ``z1``.
Polynomial tuples are plain Python tuples of :class:`MultiPoly` sharing the
same variable count.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Sequence

from .arith import ONE, ZERO, GaussianRational, Scalar, modulus_upper_bound
from .errors import DimensionMismatch

Monomial = tuple

TERM_ORDERS = ("grevlex", "grlex", "lex")


def lex_key(exp: Monomial) -> tuple:
    return exp


def grlex_key(exp: Monomial) -> tuple:
    return (sum(exp), exp)


def grevlex_key(exp: Monomial) -> tuple:
    return (sum(exp),) + tuple(-e for e in reversed(exp))


_ORDER_KEYS: dict[str, Callable[[Monomial], tuple]] = {
    "lex": lex_key,
    "grlex": grlex_key,
    "grevlex": grevlex_key,
}


def order_key(order: str) -> Callable[[Monomial], tuple]:
    """Sort key under which larger monomials compare greater."""
    try:
        return _ORDER_KEYS[order]
    except KeyError:
        raise ValueError(f"unknown term order {order!r}; expected one of {TERM_ORDERS}") from None


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_quotient(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


class MultiPoly:
    """Immutable sparse polynomial in ``n`` variables over Q(i)."""

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Monomial, Scalar] | Iterable = ()):
        if n < 0:
            raise ValueError("variable count must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Monomial, GaussianRational] = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != n:
                raise DimensionMismatch(f"monomial {exp} has length {len(exp)}, expected {n}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = GaussianRational.coerce(c)
            if exp in clean:
                c = clean[exp] + c
            if c:
                clean[exp] = c
            else:
                clean.pop(exp, None)
        self._n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "MultiPoly":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p._n = n
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> "MultiPoly":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: Scalar) -> "MultiPoly":
        c = GaussianRational.coerce(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def one(cls, n: int) -> "MultiPoly":
        return cls.constant(n, ONE)

    @classmethod
    def variable(cls, n: int, index: int) -> "MultiPoly":
        """The coordinate ``z_{index+1}``."""
        if not 0 <= index < n:
            raise DimensionMismatch(f"variable index {index} out of range for n={n}")
        exp = tuple(1 if i == index else 0 for i in range(n))
        return cls._raw(n, {exp: ONE})

    @classmethod
    def monomial(cls, exp: Monomial, c: Scalar = 1) -> "MultiPoly":
        return cls(len(exp), {tuple(exp): c})

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> Mapping[Monomial, GaussianRational]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self._n in self._terms)

    def constant_term(self) -> GaussianRational:
        return self._terms.get((0,) * self._n, ZERO)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def _check(self, other: "MultiPoly") -> None:
        if self._n != other._n:
            raise DimensionMismatch(f"variable counts differ: {self._n} vs {other._n}")

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return MultiPoly.constant(self._n, GaussianRational.coerce(other))

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._n == other._n and self._terms == other._terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == MultiPoly.constant(self._n, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self._n, {e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "MultiPoly":
        return self

    def __add__(self, other) -> "MultiPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return MultiPoly._raw(self._n, out)

    __radd__ = __add__

    def __sub__(self, other) -> "MultiPoly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MultiPoly":
        return (-self) + other

    def scale(self, c: Scalar) -> "MultiPoly":
        c = GaussianRational.coerce(c)
        if not c:
            return MultiPoly.zero(self._n)
        return MultiPoly._raw(self._n, {e: a * c for e, a in self._terms.items()})

    def mul_term(self, exp: Monomial, c: Scalar) -> "MultiPoly":
        """Multiply by the single term ``c * z^exp``."""
        c = GaussianRational.coerce(c)
        if not c:
            return MultiPoly.zero(self._n)
        return MultiPoly._raw(
            self._n,
            {tuple(a + b for a, b in zip(e, exp)): a_c * c for e, a_c in self._terms.items()},
        )

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        self._check(other)
        out: dict[Monomial, GaussianRational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                s = out.get(e)
                out[e] = prod if s is None else s + prod
        return MultiPoly._raw(self._n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        result = MultiPoly.one(self._n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c: Scalar) -> "MultiPoly":
        c = GaussianRational.coerce(c)
        inv = ONE / c
        return self.scale(inv)

    def evaluate(self, point: Sequence[Scalar]) -> GaussianRational:
        return evaluate(self, point)

    def sorted_terms(self, order: str = "grlex", descending: bool = True) -> list:
        key = order_key(order)
        return sorted(self._terms.items(), key=lambda t: key(t[0]), reverse=descending)

    def leading_term(self, order: str) -> tuple[Monomial, GaussianRational]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = order_key(order)
        exp = max(self._terms, key=key)
        return exp, self._terms[exp]

    def monic(self, order: str) -> "MultiPoly":
        _, lc = self.leading_term(order)
        return self / lc

    def __repr__(self) -> str:
        return f"MultiPoly({self._n}, {str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms("grlex"):
            mono = "*".join(
                f"z{i + 1}" if e == 1 else f"z{i + 1}^{e}" for i, e in enumerate(exp) if e
            )
            if not mono:
                parts.append(f"({c})")
            elif c == ONE:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return " + ".join(parts)


def evaluate(p: MultiPoly, point: Sequence[Scalar]) -> GaussianRational:
    """Exact value of ``p`` at ``point``."""
    if len(point) != p.n:
        raise DimensionMismatch(f"point has length {len(point)}, polynomial has {p.n} variables")
    pt = [GaussianRational.coerce(v) for v in point]
    powers: list[dict[int, GaussianRational]] = [{0: ONE} for _ in pt]

    def power(i: int, e: int) -> GaussianRational:
        cache = powers[i]
        if e not in cache:
            cache[e] = power(i, e - 1) * pt[i]
        return cache[e]

    total = ZERO
    for exp, c in p.terms.items():
        term = c
        for i, e in enumerate(exp):
            if e:
                term = term * power(i, e)
        total = total + term
    return total


def truncate_total_degree(p: MultiPoly, d: int) -> tuple[MultiPoly, MultiPoly]:
    """Split ``p`` into (terms of total degree <= d, the rest)."""
    head, tail = {}, {}
    for exp, c in p.terms.items():
        (head if sum(exp) <= d else tail)[exp] = c
    return MultiPoly._raw(p.n, head), MultiPoly._raw(p.n, tail)


@dataclass(frozen=True)
class Polydisk:
    """Closed polydisk {|z_j| <= radius} in C^n."""

    n: int
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius <= 0:
            raise ValueError(f"polydisk radius must be positive, got {self.radius}")


def polydisk_majorant(p: MultiPoly, disk: Polydisk, policy: str = "sum") -> Fraction:
    """Sum of |c_alpha| r^|alpha| with each |c_alpha| bounded from above.

    Dominates sup |p| over the closed polydisk.
    """
    if disk.n != p.n:
        raise DimensionMismatch(f"disk dimension {disk.n} != polynomial variable count {p.n}")
    r = disk.radius
    total = Fraction(0)
    for exp, c in p.terms.items():
        total += modulus_upper_bound(c, policy) * r ** sum(exp)
    return total


def tuple_majorant(t: Sequence[MultiPoly], disk: Polydisk, policy: str = "sum") -> Fraction:
    """Max over components of :func:`polydisk_majorant`."""
    check_tuple(t)
    return max((polydisk_majorant(p, disk, policy) for p in t), default=Fraction(0))


# -- tuple helpers ---------------------------------------------------------


def check_tuple(t: Sequence[MultiPoly]) -> int:
    """Validate a polynomial tuple and return its variable count."""
    if not t:
        raise DimensionMismatch("polynomial tuple must have at least one entry")
    n = t[0].n
    for p in t:
        if not isinstance(p, MultiPoly):
            raise TypeError(f"tuple entry is {type(p).__name__}, expected MultiPoly")
        if p.n != n:
            raise DimensionMismatch("tuple entries have different variable counts")
    return n


def check_same_shape(*tuples: Sequence[MultiPoly]) -> tuple[int, int]:
    """Return (N, n) after checking all tuples agree in length and variable count."""
    N = len(tuples[0])
    n = check_tuple(tuples[0])
    for t in tuples[1:]:
        if len(t) != N:
            raise DimensionMismatch(f"tuple lengths differ: {N} vs {len(t)}")
        if check_tuple(t) != n:
            raise DimensionMismatch("tuples have different variable counts")
    return N, n


def dot(x: Sequence[MultiPoly], y: Sequence[MultiPoly]) -> MultiPoly:
    """sum_j x_j y_j."""
    _, n = check_same_shape(x, y)
    total = MultiPoly.zero(n)
    for a, b in zip(x, y):
        total = total + a * b
    return total


def tuple_add(x: Sequence[MultiPoly], y: Sequence[MultiPoly]) -> tuple[MultiPoly, ...]:
    check_same_shape(x, y)
    return tuple(a + b for a, b in zip(x, y))


def tuple_sub(x: Sequence[MultiPoly], y: Sequence[MultiPoly]) -> tuple[MultiPoly, ...]:
    check_same_shape(x, y)
    return tuple(a - b for a, b in zip(x, y))


def zero_tuple(N: int, n: int) -> tuple[MultiPoly, ...]:
    return tuple(MultiPoly.zero(n) for _ in range(N))
