from fractions import Fraction

import pytest

from bezoutkit.errors import IndexOutOfRange, NotASolution
from bezoutkit.glue import (
    DiskSchedule,
    LocalSolutionProvider,
    budget,
    cauchy_bound,
    choose_Pk,
    power_perturbations,
    run_glue,
    transition_matrix,
    zero_perturbations,
)
from bezoutkit.groebner import BezoutCertificate, solve_bezout
from bezoutkit.param import AntisymMatrix, apply_shift, row_times_matrix
from bezoutkit.poly import MultiPoly, Polydisk, dot, tuple_add
from helpers import P, T, sympy_dot_is_one


def H2(h: str, n: int = 1) -> AntisymMatrix:
    return AntisymMatrix.from_upper(2, n, {(0, 1): P(h, n)})


def one_var_trace(stages=4):
    f = T("z", "1 - z")
    base = BezoutCertificate(f, T("1", "1"), True)
    prov = LocalSolutionProvider(f, base, power_perturbations(2, 1, {(0, 1): P("z")}))
    return run_glue(prov, DiskSchedule.default(1, stages + 1), stages)


def test_schedule_validation():
    with pytest.raises(ValueError):
        DiskSchedule(1, (1, 1))
    with pytest.raises(ValueError):
        DiskSchedule(1, (0, 2))
    s = DiskSchedule(2, (Fraction(1, 2), 1, 3))
    assert s.radius(2) == 1
    with pytest.raises(IndexOutOfRange):
        s.radius(4)


def test_transition_identity_and_unit_example():
    f = T("z", "1 - z")
    a = T("1", "1")
    assert transition_matrix(f, a, a).is_zero()
    H = transition_matrix(f, a, T("z", "1 + z"))
    assert H[0, 1] == MultiPoly.one(1)
    assert tuple_add(a, row_times_matrix(f, H)) == T("z", "1 + z")


def test_transition_two_variables():
    f = T("z1 z2 - 1", "z1", n=2)
    a = T("-1", "z2", n=2)
    a_next = apply_shift(f, a, H2("z1^3", 2))
    H = transition_matrix(f, a, a_next)
    assert apply_shift(f, a, H) == a_next


def test_transition_rejects_non_solutions():
    f = T("z", "1 - z")
    with pytest.raises(NotASolution):
        transition_matrix(f, T("1", "0"), T("1", "1"))
    with pytest.raises(NotASolution):
        transition_matrix(f, T("1", "1"), T("0", "0"))


def test_choose_zero_matrix():
    P0, bound = choose_Pk(T("z", "1 - z"), AntisymMatrix.zero(2, 1), Polydisk(1, 2), Fraction(1, 2))
    assert P0.is_zero() and bound == 0


def test_choose_zero_truncation_when_budget_is_generous():
    f, H = T("z", "1 - z"), H2("z^2 + 1")
    disk = Polydisk(1, 2)
    # |f H| majorant: entries (1-z)(-(z^2+1)) and z (z^2+1) -> 15 and 10 at r = 2
    Pk, bound = choose_Pk(f, H, disk, Fraction(16))
    assert Pk.is_zero()
    assert bound == 15


def test_choose_minimal_degree():
    f, H = T("z", "1 - z"), H2("z^8")
    # every d <= 7 leaves the whole z^8 tail: majorants 2^8 + 2^9 = 768 and 2^9 = 512
    tail_defect = row_times_matrix(f, H)
    assert max(_maj(q, 2) for q in tail_defect) == 768
    Pk, bound = choose_Pk(f, H, Polydisk(1, 2), budget(1))
    assert Pk == H and bound == 0
    # a budget above 768 is met by the empty truncation
    Pk, bound = choose_Pk(f, H, Polydisk(1, 2), Fraction(769))
    assert Pk.is_zero() and bound == 768


def _maj(q, r):
    # hand-rolled coefficient majorant, independent of polydisk_majorant
    return sum((abs(c.re) + abs(c.im)) * Fraction(r) ** sum(e) for e, c in q.terms.items())


def test_choose_proper_truncation_with_positive_bound():
    f = T("z", "1 - z")
    H = H2("1 + z + (1/1000000) z^3")
    Pk, bound = choose_Pk(f, H, Polydisk(1, 2), budget(3))
    assert Pk == H2("1 + z")
    # f (H - P) = ((1-z)(-c z^3), z c z^3), c = 10^-6: majorants 24c and 16c
    assert bound == Fraction(24, 10**6)


def test_run_glue_zero_perturbations():
    f = T("z1 z2 - 1", "z1", n=2)
    base = solve_bezout(f)
    prov = LocalSolutionProvider(f, base, zero_perturbations(2, 2))
    tr = run_glue(prov, DiskSchedule.default(2, 5), 4)
    assert all(st.H.is_zero() and st.P.is_zero() and st.bound == 0 for st in tr.stages)
    assert all(st.a == base.g for st in tr.stages[1:])
    assert all(g == base.g for g in tr.partial_sums)
    assert cauchy_bound(tr, 0, 4) == 0


def test_run_glue_one_variable_fixture():
    tr = one_var_trace(4)
    f = tr.f
    assert tr.m_max == 4
    for st in tr.stages[1:]:
        assert st.bound < budget(st.k)
    # independent re-expansion oracle
    assert sympy_dot_is_one(tr.partial_sums[4], f)
    assert tr.partial_sums[0] == tr.solution(1)
    assert cauchy_bound(tr, 1, 4) < Fraction(1, 2)


def test_run_glue_two_variable_fixture():
    f = T("z1 z2 - 1", "z1", n=2)
    base = solve_bezout(f)
    assert base.g == T("-1", "z2", n=2)
    prov = LocalSolutionProvider(f, base, power_perturbations(2, 2, {(0, 1): P("z1 + z2", 2)}, True))
    tr = run_glue(prov, DiskSchedule.default(2, 4), 3)
    for m, g in enumerate(tr.partial_sums):
        assert sympy_dot_is_one(g, f)
        assert dot(g, f) == MultiPoly.one(2)


def test_run_glue_nondefault_radii():
    f = T("z", "1 - z")
    base = BezoutCertificate(f, T("1", "1"), True)
    prov = LocalSolutionProvider(f, base, power_perturbations(2, 1, {(0, 1): P("z/100")}))
    sched = DiskSchedule(1, (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), 1))
    tr = run_glue(prov, sched, 3)
    assert any(not st.P == st.H for st in tr.stages[1:])
    for m in range(3):
        for mp in range(m + 1, 4):
            assert cauchy_bound(tr, m, mp) < budget(m)


def test_run_glue_needs_enough_radii():
    f = T("z", "1 - z")
    prov = LocalSolutionProvider(f, BezoutCertificate(f, T("1", "1"), True), zero_perturbations(2, 1))
    with pytest.raises(IndexOutOfRange):
        run_glue(prov, DiskSchedule.default(1, 3), 3)


def test_provider_rejects_bad_base():
    f = T("z", "1 - z")
    with pytest.raises(NotASolution):
        LocalSolutionProvider(f, BezoutCertificate(f, T("1", "0"), True), zero_perturbations(2, 1))


def test_explicit_perturbation_list():
    f = T("z", "1 - z")
    base = BezoutCertificate(f, T("1", "1"), True)
    prov = LocalSolutionProvider(f, base, [H2("1"), H2("z"), H2("0")])
    tr = run_glue(prov, DiskSchedule.default(1, 3), 2)
    assert tr.solution(1) == T("z", "1 + z")
    with pytest.raises(IndexOutOfRange):
        prov.solution(4)


def test_cauchy_bound_ranges():
    tr = one_var_trace(3)
    with pytest.raises(IndexOutOfRange):
        cauchy_bound(tr, 2, 2)
    with pytest.raises(IndexOutOfRange):
        cauchy_bound(tr, 1, 4)
    assert cauchy_bound(tr, 2, 3) <= tr.stages[3].bound
