"""Antisymmetric parametrization of all solutions of x . a = 1.

Given one solution ``x`` of ``sum_j x_j a_j = 1``, the others are exactly
``y = x + a H`` with ``H = -H^T``.  Only commutative-ring operations are
used, so nothing here depends on the coefficient field.
"""
from __future__ import annotations

from typing import Mapping, Sequence

from .errors import DimensionMismatch, NotAntisymmetric
from .poly import MultiPoly, check_same_shape, check_tuple


class AntisymMatrix:
    """N x N matrix of polynomials with H[j][k] == -H[k][j].

    Indices are 0-based in code; the wire format uses 1-based pairs.
    """

    __slots__ = ("_N", "_n", "_rows")

    def __init__(self, rows: Sequence[Sequence[MultiPoly]]):
        rows = tuple(tuple(r) for r in rows)
        N = len(rows)
        if N == 0:
            raise DimensionMismatch("matrix must be at least 1 x 1")
        if any(len(r) != N for r in rows):
            raise DimensionMismatch("matrix is not square")
        n = check_tuple([p for r in rows for p in r])
        for j in range(N):
            for k in range(j, N):
                if rows[j][k] != -rows[k][j]:
                    raise NotAntisymmetric(f"H[{j + 1}][{k + 1}] != -H[{k + 1}][{j + 1}]")
        self._N = N
        self._n = n
        self._rows = rows

    @classmethod
    def zero(cls, N: int, n: int) -> "AntisymMatrix":
        z = MultiPoly.zero(n)
        return cls([[z] * N for _ in range(N)])

    @classmethod
    def from_upper(cls, N: int, n: int, upper: Mapping[tuple[int, int], MultiPoly]) -> "AntisymMatrix":
        """Build from strict-upper-triangle entries keyed by 0-based ``(j, k)``, j < k.

        Missing entries are zero.
        """
        z = MultiPoly.zero(n)
        rows = [[z] * N for _ in range(N)]
        for (j, k), p in upper.items():
            if not 0 <= j < k < N:
                raise NotAntisymmetric(f"entry ({j + 1},{k + 1}) is not in the strict upper triangle")
            if p.n != n:
                raise DimensionMismatch("matrix entry has wrong variable count")
            rows[j][k] = p
            rows[k][j] = -p
        return cls(rows)

    @property
    def N(self) -> int:
        return self._N

    @property
    def n(self) -> int:
        return self._n

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            j, k = idx
            return self._rows[j][k]
        return self._rows[idx]

    def rows(self) -> tuple[tuple[MultiPoly, ...], ...]:
        return self._rows

    def upper(self) -> dict[tuple[int, int], MultiPoly]:
        return {(j, k): self._rows[j][k] for j in range(self._N) for k in range(j + 1, self._N)}

    def map_entries(self, fn) -> "AntisymMatrix":
        """Apply an odd map (fn(-p) == -fn(p)) entrywise on the upper triangle."""
        return AntisymMatrix.from_upper(self._N, self._n, {jk: fn(p) for jk, p in self.upper().items()})

    def __add__(self, other: "AntisymMatrix") -> "AntisymMatrix":
        self._check(other)
        return AntisymMatrix.from_upper(
            self._N, self._n, {jk: p + other[jk] for jk, p in self.upper().items()}
        )

    def __sub__(self, other: "AntisymMatrix") -> "AntisymMatrix":
        self._check(other)
        return AntisymMatrix.from_upper(
            self._N, self._n, {jk: p - other[jk] for jk, p in self.upper().items()}
        )

    def __neg__(self) -> "AntisymMatrix":
        return self.map_entries(lambda p: -p)

    def _check(self, other: "AntisymMatrix") -> None:
        if self._N != other._N or self._n != other._n:
            raise DimensionMismatch("matrix shapes differ")

    def is_zero(self) -> bool:
        return all(p.is_zero() for r in self._rows for p in r)

    def max_degree(self) -> int:
        return max((p.total_degree() for r in self._rows for p in r), default=-1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AntisymMatrix):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        ups = ", ".join(f"({j + 1},{k + 1}): {p}" for (j, k), p in self.upper().items() if p)
        return f"AntisymMatrix(N={self._N}, {{{ups}}})"


def row_times_matrix(a: Sequence[MultiPoly], H: AntisymMatrix) -> tuple[MultiPoly, ...]:
    """The row vector a H: entry k is sum_j a_j H[j][k]."""
    N, n = len(a), check_tuple(a)
    if N != H.N or n != H.n:
        raise DimensionMismatch(f"tuple of length {N} in {n} vars vs {H.N}x{H.N} matrix in {H.n} vars")
    out = []
    for k in range(N):
        acc = MultiPoly.zero(n)
        for j in range(N):
            h = H[j, k]
            if h and a[j]:
                acc = acc + a[j] * h
        out.append(acc)
    return tuple(out)


def apply_shift(a: Sequence[MultiPoly], x: Sequence[MultiPoly], H: AntisymMatrix) -> tuple[MultiPoly, ...]:
    """y = x + a H.  Preserves sum_j y_j a_j whenever H is antisymmetric."""
    check_same_shape(a, x)
    if not isinstance(H, AntisymMatrix):
        raise NotAntisymmetric("H must be an AntisymMatrix")
    aH = row_times_matrix(a, H)
    return tuple(xk + s for xk, s in zip(x, aH))


def difference_matrix(x: Sequence[MultiPoly], y: Sequence[MultiPoly]) -> AntisymMatrix:
    """H[j][k] = x_j y_k - x_k y_j.

    If x and y both solve the Bezout equation for the same ``a`` then
    ``y == x + a H``; ``a`` itself is not needed to build H.
    """
    N, n = check_same_shape(x, y)
    upper = {}
    for j in range(N):
        for k in range(j + 1, N):
            upper[(j, k)] = x[j] * y[k] - x[k] * y[j]
    return AntisymMatrix.from_upper(N, n, upper)


def annihilation_residual(a: Sequence[MultiPoly], H: AntisymMatrix) -> MultiPoly:
    """Compute (a H) a^T; always the zero polynomial for antisymmetric H."""
    if not isinstance(H, AntisymMatrix):
        raise NotAntisymmetric("H must be an AntisymMatrix")
    aH = row_times_matrix(a, H)
    acc = MultiPoly.zero(check_tuple(a))
    for s, ak in zip(aH, a):
        acc = acc + s * ak
    return acc

