"""Random instance generators and independent oracles for the test suite."""
from __future__ import annotations

import random
from fractions import Fraction

import sympy

from bezoutkit import AntisymMatrix, GaussianRational, MultiPoly, parse_poly
from bezoutkit.poly import dot

Z = sympy.symbols("z1:4")


def P(text: str, n: int = 1) -> MultiPoly:
    return parse_poly(text, n)


def T(*texts: str, n: int = 1) -> tuple[MultiPoly, ...]:
    return tuple(parse_poly(t, n) for t in texts)


# -- random generation -----------------------------------------------------


def rand_coeff(rng: random.Random, size: int = 3, gaussian: bool = True) -> GaussianRational:
    re = Fraction(rng.randint(-size, size), rng.randint(1, size))
    im = Fraction(rng.randint(-size, size), rng.randint(1, size)) if gaussian else 0
    return GaussianRational(re, im)


def rand_poly(rng: random.Random, n: int, deg: int, nterms: int = 4, size: int = 3) -> MultiPoly:
    terms = {}
    for _ in range(nterms):
        d = rng.randint(0, deg)
        exp = [0] * n
        for _ in range(d):
            exp[rng.randrange(n)] += 1
        terms[tuple(exp)] = rand_coeff(rng, size)
    return MultiPoly(n, terms)


def rand_antisym(rng: random.Random, N: int, n: int, deg: int = 2) -> AntisymMatrix:
    upper = {(j, k): rand_poly(rng, n, deg, nterms=rng.randint(0, 3)) for j in range(N) for k in range(j + 1, N)}
    return AntisymMatrix.from_upper(N, n, upper)


def rand_unimodular(rng: random.Random, N: int, n: int, ops: int = 3, deg: int = 1):
    """Random (a, x) with sum_j x_j a_j == 1, built by elementary column operations.

    Starting from a = x = e_1, the step a_j += t a_i, x_i -= t x_j keeps
    x . a fixed.  A final random permutation and unit rescaling hide e_1.
    """
    one, zero = MultiPoly.one(n), MultiPoly.zero(n)
    a = [one] + [zero] * (N - 1)
    x = [one] + [zero] * (N - 1)
    for _ in range(ops):
        i, j = rng.sample(range(N), 2)
        t = rand_poly(rng, n, deg, nterms=2)
        a[j] = a[j] + t * a[i]
        x[i] = x[i] - t * x[j]
    perm = list(range(N))
    rng.shuffle(perm)
    a = [a[p] for p in perm]
    x = [x[p] for p in perm]
    c = rand_coeff(rng) or GaussianRational(1)
    a = [p.scale(c) for p in a]
    x = [p / c for p in x]
    assert dot(x, a) == one
    return tuple(a), tuple(x)


def rand_point(rng: random.Random, n: int, size: int = 3) -> tuple[GaussianRational, ...]:
    return tuple(rand_coeff(rng, size) for _ in range(n))


def planted_zero_system(rng: random.Random, n: int, N: int, deg: int = 2):
    """Polynomials q_j - q_j(z*) sharing the common zero z*."""
    z = rand_point(rng, n, size=2)
    f = []
    for _ in range(N):
        q = rand_poly(rng, n, deg, nterms=3)
        f.append(q - q.evaluate(z))
    if all(p.is_zero() for p in f):
        f[0] = MultiPoly.variable(n, 0) - z[0]
    return tuple(f), z


# -- oracles ----------------------------------------------------------------


def to_sympy(p: MultiPoly):
    """Convert to a sympy expression in z1..zn (independent arithmetic)."""
    expr = sympy.Integer(0)
    for exp, c in p.terms.items():
        coeff = sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(
            c.im.numerator, c.im.denominator
        )
        mono = sympy.Integer(1)
        for v, e in zip(Z, exp):
            mono *= v**e
        expr += coeff * mono
    return expr


def sympy_dot_is_one(g, f) -> bool:
    """Expand sum_j g_j f_j with sympy and compare to 1."""
    total = sum((to_sympy(a) * to_sympy(b) for a, b in zip(g, f)), sympy.Integer(0))
    return sympy.expand(total - 1) == 0


def sympy_is_zero(p) -> bool:
    return sympy.expand(p) == 0


def _trim(c: list) -> list:
    while c and not c[-1]:
        c.pop()
    return c


def _univariate(p: MultiPoly) -> list:
    coeffs = [GaussianRational(0)] * (p.total_degree() + 1)
    for (e,), c in p.terms.items():
        coeffs[e] = c
    return coeffs


def euclid_gcd_degree(p: MultiPoly, q: MultiPoly) -> int:
    """Degree of gcd(p, q) in Q(i)[z] by plain Euclidean remainder sequence.

    Dense coefficient lists, low degree first; -1 means gcd(0, 0).
    """
    a, b = _trim(_univariate(p)), _trim(_univariate(q))
    while b:
        r = list(a)
        while len(r) >= len(b) and r:
            factor = r[-1] / b[-1]
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[i + shift] = r[i + shift] - factor * c
            _trim(r)
        a, b = b, r
    return len(a) - 1


def euclid_bezout(p: MultiPoly, q: MultiPoly):
    """Extended Euclid: (s, t) with s p + t q == 1, or None when gcd is non-constant."""
    n = 1
    r0, r1 = p, q
    s0, s1 = MultiPoly.one(n), MultiPoly.zero(n)
    t0, t1 = MultiPoly.zero(n), MultiPoly.one(n)
    while r1:
        quo = MultiPoly.zero(n)
        rem = r0
        d1 = r1.total_degree()
        lc1 = r1.terms[(d1,)]
        while rem and rem.total_degree() >= d1:
            d = rem.total_degree()
            term = MultiPoly(1, {(d - d1,): rem.terms[(d,)] / lc1})
            quo = quo + term
            rem = rem - term * r1
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if not r0.is_constant() or r0.is_zero():
        return None
    c = r0.constant_term()
    return s0 / c, t0 / c
