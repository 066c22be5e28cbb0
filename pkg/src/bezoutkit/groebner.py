"""Buchberger's algorithm with cofactor tracking over Q(i).

Every basis element carries a cofactor vector ``c`` with
``sum_j c_j * f_j == b`` for the input generators ``f``.  A nonzero constant
in the basis therefore hands back a solution of the Bezout equation
directly.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from .arith import ONE, GaussianRational
from .errors import AllZeroInput, DimensionMismatch, InternalVerificationFailure
from .poly import (
    MultiPoly,
    check_tuple,
    dot,
    monomial_divides,
    monomial_lcm,
    monomial_quotient,
    order_key,
)

log = logging.getLogger(__name__)

DEFAULT_ORDER = "grevlex"


@dataclass(frozen=True)
class TrackedBasis:
    generators: tuple[MultiPoly, ...]
    basis: tuple[MultiPoly, ...]
    cofactors: tuple[tuple[MultiPoly, ...], ...]
    order: str = DEFAULT_ORDER

    def __len__(self) -> int:
        return len(self.basis)

    def is_unit_ideal(self) -> bool:
        return any(b.is_constant() and b for b in self.basis)

    def check_cofactors(self) -> bool:
        """Re-expand every stored cofactor identity exactly."""
        return all(dot(c, self.generators) == b for b, c in zip(self.basis, self.cofactors))


@dataclass(frozen=True)
class BezoutCertificate:
    f: tuple[MultiPoly, ...]
    g: tuple[MultiPoly, ...]
    verified: bool

    def recheck(self) -> bool:
        return dot(self.g, self.f) == MultiPoly.one(self.f[0].n)


class NotUnitIdeal:
    """Verdict returned by :func:`solve_bezout` when 1 is not in the ideal."""

    __slots__ = ("basis",)

    def __init__(self, basis: TrackedBasis):
        self.basis = basis

    def __bool__(self) -> bool:
        return False

    def __repr__(self) -> str:
        return f"NotUnitIdeal(basis of {len(self.basis)} elements)"


def _lm(p: MultiPoly, key) -> tuple:
    return max(p.terms, key=key)


def reduce(p: MultiPoly, basis: TrackedBasis | Sequence[MultiPoly], order: str | None = None):
    """Multivariate division of ``p`` by ``basis``.

    Returns ``(remainder, quotients)`` with
    ``p == sum(q_i * b_i) + remainder`` and no remainder term divisible by a
    basis leading monomial.  Reducers are tried in basis order.
    """
    if isinstance(basis, TrackedBasis):
        order = order or basis.order
        polys = basis.basis
    else:
        polys = tuple(basis)
        order = order or DEFAULT_ORDER
    key = order_key(order)
    for b in polys:
        if b.n != p.n:
            raise DimensionMismatch("basis and polynomial have different variable counts")
    leads = [b.leading_term(order) if b else None for b in polys]
    n = p.n
    quotients: list[dict] = [{} for _ in polys]
    remainder: dict = {}
    work = dict(p.terms)

    while work:
        exp = max(work, key=key)
        c = work[exp]
        for i, lead in enumerate(leads):
            if lead is None or not monomial_divides(lead[0], exp):
                continue
            q_exp = monomial_quotient(exp, lead[0])
            q_c = c / lead[1]
            quotients[i][q_exp] = quotients[i].get(q_exp, GaussianRational(0)) + q_c
            for e, bc in polys[i].terms.items():
                t = tuple(a + b for a, b in zip(e, q_exp))
                v = work.get(t, GaussianRational(0)) - bc * q_c
                if v:
                    work[t] = v
                else:
                    work.pop(t, None)
            break
        else:
            remainder[exp] = c
            del work[exp]

    return MultiPoly(n, remainder), tuple(MultiPoly(n, q) for q in quotients)


def _combine(cofs: Sequence[Sequence[MultiPoly]], coeffs: Sequence[MultiPoly]) -> tuple[MultiPoly, ...]:
    """sum_i coeffs[i] * cofs[i], componentwise."""
    N = len(cofs[0])
    n = cofs[0][0].n
    out = [MultiPoly.zero(n) for _ in range(N)]
    for q, cof in zip(coeffs, cofs):
        if not q:
            continue
        for j in range(N):
            if cof[j]:
                out[j] = out[j] + q * cof[j]
    return tuple(out)


def _normalize(p: MultiPoly, cof: tuple[MultiPoly, ...], order: str):
    _, lc = p.leading_term(order)
    if lc == ONE:
        return p, cof
    inv = ONE / lc
    return p.scale(inv), tuple(c.scale(inv) for c in cof)


def _unit_result(f, G, cofs, idx, order):
    # a nonzero constant generates everything; {1} is the reduced basis
    b, c = _normalize(G[idx], cofs[idx], order)
    return TrackedBasis(tuple(f), (b,), (c,), order)


def buchberger(f: Sequence[MultiPoly], order: str = DEFAULT_ORDER) -> TrackedBasis:
    """Reduced Groebner basis of the ideal generated by ``f``, with cofactors.

    Pairs are processed lowest lcm total degree first, ties broken by pair
    index.  Pairs with coprime leading monomials are skipped (their
    S-polynomials reduce to zero).
    """
    f = tuple(f)
    n = check_tuple(f)
    N = len(f)
    key = order_key(order)
    if all(p.is_zero() for p in f):
        raise AllZeroInput("all generators are zero")

    G: list[MultiPoly] = []
    cofs: list[tuple[MultiPoly, ...]] = []
    for j, p in enumerate(f):
        if p.is_zero():
            continue
        unit = tuple(MultiPoly.one(n) if i == j else MultiPoly.zero(n) for i in range(N))
        b, c = _normalize(p, unit, order)
        G.append(b)
        cofs.append(c)
        if b.is_constant():
            return _unit_result(f, G, cofs, len(G) - 1, order)

    leads = [_lm(b, key) for b in G]
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}

    while pairs:
        i, j = min(pairs, key=lambda pr: (sum(monomial_lcm(leads[pr[0]], leads[pr[1]])), pr))
        pairs.discard((i, j))
        li, lj = leads[i], leads[j]
        lcm = monomial_lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        ui = monomial_quotient(lcm, li)
        uj = monomial_quotient(lcm, lj)
        # G elements are monic, so the S-polynomial needs no coefficient scaling
        s = G[i].mul_term(ui, ONE) - G[j].mul_term(uj, ONE)
        s_cof = tuple(
            a.mul_term(ui, ONE) - b.mul_term(uj, ONE) for a, b in zip(cofs[i], cofs[j])
        )
        rem, quots = reduce(s, G, order)
        if rem.is_zero():
            continue
        sub = _combine(cofs, quots)
        r_cof = tuple(a - b for a, b in zip(s_cof, sub))
        b, c = _normalize(rem, r_cof, order)
        G.append(b)
        cofs.append(c)
        leads.append(_lm(b, key))
        k = len(G) - 1
        log.debug("new basis element #%d with leading monomial %s", k, leads[k])
        if b.is_constant():
            return _unit_result(f, G, cofs, k, order)
        pairs.update((m, k) for m in range(k))

    return _reduce_basis(f, G, cofs, leads, order)


def _reduce_basis(f, G, cofs, leads, order) -> TrackedBasis:
    # minimal basis: drop elements whose leading monomial another one divides
    keep = []
    for i, li in enumerate(leads):
        dominated = False
        for j, lj in enumerate(leads):
            if i == j or not monomial_divides(lj, li):
                continue
            if lj != li or j < i:
                dominated = True
                break
        if not dominated:
            keep.append(i)
    G = [G[i] for i in keep]
    cofs = [cofs[i] for i in keep]

    for idx in range(len(G)):
        others = G[:idx] + G[idx + 1:]
        other_cofs = cofs[:idx] + cofs[idx + 1:]
        if not others:
            continue
        rem, quots = reduce(G[idx], others, order)
        sub = _combine(other_cofs, quots)
        G[idx] = rem
        cofs[idx] = tuple(a - b for a, b in zip(cofs[idx], sub))
    return TrackedBasis(tuple(f), tuple(G), tuple(cofs), order)


def solve_bezout(f: Sequence[MultiPoly], order: str = DEFAULT_ORDER):
    """Bezout certificate for ``f`` or a :class:`NotUnitIdeal` verdict."""
    f = tuple(f)
    tb = buchberger(f, order)
    for b, cof in zip(tb.basis, tb.cofactors):
        if b.is_constant() and b:
            c = b.constant_term()
            g = tuple(x / c for x in cof)
            if dot(g, f) != MultiPoly.one(f[0].n):
                raise InternalVerificationFailure("cofactors do not re-expand to 1")
            return BezoutCertificate(f, g, True)
    return NotUnitIdeal(tb)


def certify(f: Sequence[MultiPoly], order: str = DEFAULT_ORDER) -> bool:
    """True iff the f_j generate the unit ideal (have no common zero in C^n)."""
    return isinstance(solve_bezout(f, order), BezoutCertificate)
