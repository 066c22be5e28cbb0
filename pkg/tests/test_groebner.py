import random

import pytest

from bezoutkit.errors import AllZeroInput
from bezoutkit.groebner import (
    BezoutCertificate,
    NotUnitIdeal,
    buchberger,
    certify,
    reduce,
    solve_bezout,
)
from bezoutkit.poly import MultiPoly, dot, monomial_divides
from helpers import P, T, euclid_bezout, euclid_gcd_degree, planted_zero_system, rand_poly, sympy_dot_is_one


ORDERS = ["grevlex", "grlex", "lex"]


def test_single_generator():
    tb = buchberger(T("z1"))
    assert tb.basis == (P("z1"),)
    assert tb.cofactors == ((MultiPoly.one(1),),)


@pytest.mark.parametrize("order", ORDERS)
def test_unit_basis_from_s_polynomial(order):
    f = T("z1 z2 - 1", "z1", n=2)
    tb = buchberger(f, order)
    assert tb.basis == (MultiPoly.one(2),)
    assert tb.check_cofactors()
    # oracle: (-1)(z1 z2 - 1) + z2 z1 expands to 1
    assert sympy_dot_is_one(T("-1", "z2", n=2), f)


@pytest.mark.parametrize("order", ORDERS)
def test_already_groebner(order):
    f = T("z1 - 1", "z2 - 1", n=2)
    tb = buchberger(f, order)
    assert set(tb.basis) == set(f)
    assert not tb.is_unit_ideal()
    # both S-polynomials reduce to zero
    s = P("z2", 2) * f[0] - P("z1", 2) * f[1]
    rem, _ = reduce(s, f, order)
    assert rem.is_zero()


def test_all_zero_input():
    with pytest.raises(AllZeroInput):
        buchberger((MultiPoly.zero(2), MultiPoly.zero(2)))
    with pytest.raises(AllZeroInput):
        solve_bezout((MultiPoly.zero(1),))


@pytest.mark.parametrize(
    "f, g",
    [
        (("z1", "1 - z1"), ("1", "1")),
        (("z1 z2 - 1", "z1"), ("-1", "z2")),
        (("2", "z1"), ("1/2", "0")),
        (("(1+i)", "z1^5 + z2"), ("(1-i)/2", "0")),
    ],
)
def test_solve_examples(f, g):
    f = T(*f, n=2)
    cert = solve_bezout(f)
    assert isinstance(cert, BezoutCertificate) and cert.verified
    assert cert.g == T(*g, n=2)
    assert sympy_dot_is_one(cert.g, f)


def test_not_unit_ideal():
    f = T("z1 - 1", "z1 z2 - 1", n=2)
    assert [p.evaluate([1, 1]) for p in f] == [0, 0]
    out = solve_bezout(f)
    assert isinstance(out, NotUnitIdeal)
    assert not out
    assert not certify(f)


def test_reduce_examples():
    rem, quots = reduce(MultiPoly.zero(2), T("z1", n=2))
    assert rem.is_zero() and quots == (MultiPoly.zero(2),)
    rem, quots = reduce(P("z1 z2", 2), T("z1", n=2))
    assert rem.is_zero() and quots == (P("z2", 2),)
    rem, quots = reduce(P("z1^2 + z2", 2), T("z1 - 1", n=2), "lex")
    assert rem == P("1 + z2", 2) and quots == (P("z1 + 1", 2),)


def test_reduce_identity_and_normal_form():
    rng = random.Random(11)
    for _ in range(40):
        basis = tuple(rand_poly(rng, 2, 2, nterms=3) for _ in range(2))
        basis = tuple(b for b in basis if b)
        p = rand_poly(rng, 2, 4, nterms=5)
        for order in ORDERS:
            rem, quots = reduce(p, basis, order)
            assert dot(quots, basis) + rem == p
            leads = [b.leading_term(order)[0] for b in basis]
            for e in rem.terms:
                assert not any(monomial_divides(lm, e) for lm in leads)


def test_groebner_property_s_pairs_reduce_to_zero():
    rng = random.Random(12)
    for _ in range(15):
        f = tuple(rand_poly(rng, 2, 2, nterms=3) for _ in range(2))
        if all(p.is_zero() for p in f):
            continue
        for order in ORDERS:
            tb = buchberger(f, order)
            assert tb.check_cofactors()
            G = tb.basis
            for i in range(len(G)):
                for j in range(i + 1, len(G)):
                    (li, ci), (lj, cj) = G[i].leading_term(order), G[j].leading_term(order)
                    lcm = tuple(max(a, b) for a, b in zip(li, lj))
                    s = G[i].mul_term(tuple(a - b for a, b in zip(lcm, li)), 1 / ci) - G[j].mul_term(
                        tuple(a - b for a, b in zip(lcm, lj)), 1 / cj
                    )
                    assert reduce(s, G, order)[0].is_zero()


def test_deterministic():
    f = T("z1^2 + z2 z3 - 1", "z2^2 - i z1", "z3 - z1 z2", n=3)
    assert buchberger(f) == buchberger(f)


def test_cofactor_soundness_random():
    rng = random.Random(13)
    for _ in range(30):
        n = rng.randint(1, 3)
        f = tuple(rand_poly(rng, n, 2, nterms=3) for _ in range(rng.randint(1, 3)))
        if all(p.is_zero() for p in f):
            continue
        tb = buchberger(f)
        for b, c in zip(tb.basis, tb.cofactors):
            assert dot(c, f) == b
        out = solve_bezout(f)
        if isinstance(out, BezoutCertificate):
            assert out.recheck()


def test_planted_zero_gives_not_unit_ideal():
    rng = random.Random(14)
    for _ in range(30):
        n = rng.randint(1, 3)
        f, z = planted_zero_system(rng, n, rng.randint(1, 3))
        assert all(p.evaluate(z) == 0 for p in f)
        assert isinstance(solve_bezout(f), NotUnitIdeal)


def test_univariate_agrees_with_extended_euclid():
    rng = random.Random(15)
    for trial in range(60):
        p, q = rand_poly(rng, 1, 4, nterms=3), rand_poly(rng, 1, 4, nterms=3)
        if trial % 2:
            root = rand_poly(rng, 1, 1, nterms=2)
            p, q = p * root, q * root
        if p.is_zero() and q.is_zero():
            continue
        out = solve_bezout((p, q))
        coprime = euclid_gcd_degree(p, q) == 0
        assert isinstance(out, BezoutCertificate) == coprime
        st = euclid_bezout(p, q)
        assert (st is not None) == coprime
        if coprime:
            assert dot(st, (p, q)) == MultiPoly.one(1)
            assert out.recheck()
