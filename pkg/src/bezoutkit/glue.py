"""Gluing local Bezout solutions on nested polydisks into one series.

Stage ``k`` holds a solution ``a_k`` (valid on the disk of radius
``r_{k+1}``), the transition matrix ``H_k`` with ``a_{k+1} = a_k + f H_k``,
and a polynomial antisymmetric ``P_k`` whose defect ``f (H_k - P_k)`` has
majorant below ``2**-k`` on the next disk.  The partial sums

    g_m = sum_{k<=m} (a_{k+1} - a_k - f P_k) = a_{m+1} - f (P_0 + ... + P_m)

are exact solutions and form a Cauchy sequence; everything is checked in
exact rational arithmetic.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Mapping, Sequence

from .errors import IndexOutOfRange, NotASolution, VerificationFailure
from .groebner import BezoutCertificate
from .param import AntisymMatrix, apply_shift, difference_matrix, row_times_matrix
from .poly import (
    MultiPoly,
    Polydisk,
    check_same_shape,
    check_tuple,
    dot,
    truncate_total_degree,
    tuple_add,
    tuple_majorant,
    tuple_sub,
    zero_tuple,
)

log = logging.getLogger(__name__)


def budget(k: int) -> Fraction:
    """The per-stage tolerance 2**-k."""
    return Fraction(1, 2**k)


def is_solution(x: Sequence[MultiPoly], f: Sequence[MultiPoly]) -> bool:
    return dot(x, f) == MultiPoly.one(f[0].n)


@dataclass(frozen=True)
class DiskSchedule:
    """Radii r_1 < r_2 < ... of the nested polydisks D_k = {|z_j| <= r_k}."""

    n: int
    radii: tuple[Fraction, ...]

    def __post_init__(self):
        radii = tuple(Fraction(r) for r in self.radii)
        object.__setattr__(self, "radii", radii)
        if not radii:
            raise ValueError("schedule needs at least one radius")
        if radii[0] <= 0:
            raise ValueError("radii must be positive")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError("radii must be strictly increasing")

    @classmethod
    def default(cls, n: int, count: int) -> "DiskSchedule":
        """r_k = k for k = 1..count."""
        return cls(n, tuple(Fraction(k) for k in range(1, count + 1)))

    def __len__(self) -> int:
        return len(self.radii)

    def radius(self, k: int) -> Fraction:
        """r_k, 1-based."""
        if not 1 <= k <= len(self.radii):
            raise IndexOutOfRange(f"schedule has radii r_1..r_{len(self.radii)}, asked for r_{k}")
        return self.radii[k - 1]

    def disk(self, k: int) -> Polydisk:
        return Polydisk(self.n, self.radius(k))


Perturbations = Callable[[int], AntisymMatrix] | Sequence[AntisymMatrix]


class LocalSolutionProvider:
    """Produces distinct exact solutions a_k = base.g + f * perturbation_k."""

    def __init__(self, f: Sequence[MultiPoly], base: BezoutCertificate, perturbations: Perturbations):
        self.f = tuple(f)
        check_same_shape(self.f, base.g)
        if not is_solution(base.g, self.f):
            raise NotASolution("base certificate does not satisfy sum g_j f_j = 1")
        self.base = base
        self._perturbations = perturbations

    def perturbation(self, k: int) -> AntisymMatrix:
        if k < 1:
            raise IndexOutOfRange("perturbations are indexed from stage 1")
        if callable(self._perturbations):
            return self._perturbations(k)
        try:
            return self._perturbations[k - 1]
        except IndexError:
            raise IndexOutOfRange(f"no perturbation supplied for stage {k}") from None

    def solution(self, k: int) -> tuple[MultiPoly, ...]:
        a = apply_shift(self.f, self.base.g, self.perturbation(k))
        if not is_solution(a, self.f):
            raise VerificationFailure(f"shifted solution a_{k} fails the Bezout identity")
        return a


def zero_perturbations(N: int, n: int) -> Callable[[int], AntisymMatrix]:
    z = AntisymMatrix.zero(N, n)
    return lambda k: z


def power_perturbations(
    N: int, n: int, template: Mapping[tuple[int, int], MultiPoly], use_factorial: bool = False
) -> Callable[[int], AntisymMatrix]:
    """Stage k gets upper entries template[j, k]**k, divided by k! if asked."""

    def make(k: int) -> AntisymMatrix:
        scale = Fraction(1, factorial(k)) if use_factorial else Fraction(1)
        return AntisymMatrix.from_upper(N, n, {jk: (p**k).scale(scale) for jk, p in template.items()})

    return make


@dataclass(frozen=True)
class GlueStage:
    k: int
    a: tuple[MultiPoly, ...]
    H: AntisymMatrix
    P: AntisymMatrix
    bound: Fraction


@dataclass(frozen=True)
class GlueTrace:
    f: tuple[MultiPoly, ...]
    schedule: DiskSchedule
    stages: tuple[GlueStage, ...]
    a_final: tuple[MultiPoly, ...]
    partial_sums: tuple[tuple[MultiPoly, ...], ...]
    policy: str = field(default="sum")

    @property
    def m_max(self) -> int:
        return len(self.stages) - 1

    def solution(self, k: int) -> tuple[MultiPoly, ...]:
        """a_k for 0 <= k <= m_max + 1."""
        if k == len(self.stages):
            return self.a_final
        return self.stages[k].a


def transition_matrix(
    f: Sequence[MultiPoly], a_k: Sequence[MultiPoly], a_next: Sequence[MultiPoly]
) -> AntisymMatrix:
    """Antisymmetric H with a_next == a_k + f H, rebuilt from the two solutions."""
    check_same_shape(f, a_k, a_next)
    if not is_solution(a_k, f):
        raise NotASolution("a_k does not satisfy the Bezout equation")
    if not is_solution(a_next, f):
        raise NotASolution("a_{k+1} does not satisfy the Bezout equation")
    H = difference_matrix(a_k, a_next)
    if apply_shift(f, a_k, H) != tuple(a_next):
        raise VerificationFailure("a_{k+1} != a_k + f H_k")
    return H


def truncate_matrix(H: AntisymMatrix, d: int) -> AntisymMatrix:
    return H.map_entries(lambda p: truncate_total_degree(p, d)[0])


def defect_majorant(
    f: Sequence[MultiPoly], R: AntisymMatrix, disk: Polydisk, policy: str = "sum"
) -> Fraction:
    """Certified majorant of the tuple f R on ``disk``."""
    return tuple_majorant(row_times_matrix(f, R), disk, policy)


def choose_Pk(
    f: Sequence[MultiPoly],
    H_k: AntisymMatrix,
    disk_next: Polydisk,
    budget: Fraction,
    policy: str = "sum",
) -> tuple[AntisymMatrix, Fraction]:
    """Lowest common-degree truncation P of H_k with majorant of f (H_k - P) below ``budget``."""
    budget = Fraction(budget)
    if budget <= 0:
        raise ValueError("budget must be positive")
    for d in range(-1, H_k.max_degree() + 1):
        P = truncate_matrix(H_k, d)
        bound = defect_majorant(f, H_k - P, disk_next, policy)
        if bound < budget:
            return P, bound
    # d = max degree leaves no tail, so the loop always returns
    raise VerificationFailure("full truncation did not meet the budget")


def run_glue(
    provider: LocalSolutionProvider, schedule: DiskSchedule, stages: int, policy: str = "sum"
) -> GlueTrace:
    """Run the construction for stages 0..``stages`` and certify every identity."""
    f = provider.f
    N, n = len(f), check_tuple(f)
    if stages < 0:
        raise ValueError("stages must be >= 0")
    if schedule.n != n:
        raise ValueError(f"schedule dimension {schedule.n} != variable count {n}")
    if len(schedule) < stages + 1:
        raise IndexOutOfRange(f"{stages} stages need radii r_1..r_{stages + 1}")
    if not provider.base.recheck():
        raise NotASolution("base certificate does not verify")

    zero = AntisymMatrix.zero(N, n)
    a = [zero_tuple(N, n)] + [provider.solution(k) for k in range(1, stages + 2)]
    recorded = [GlueStage(0, a[0], zero, zero, Fraction(0))]
    for k in range(1, stages + 1):
        H = transition_matrix(f, a[k], a[k + 1])
        P, bound = choose_Pk(f, H, schedule.disk(k + 1), budget(k), policy)
        if not bound < budget(k):
            raise VerificationFailure(f"stage {k} bound {bound} >= 2^-{k}")
        log.info("stage %d: deg H=%d deg P=%d bound=%s", k, H.max_degree(), P.max_degree(), bound)
        recorded.append(GlueStage(k, a[k], H, P, bound))

    partial_sums = []
    running = zero_tuple(N, n)
    P_total = zero
    for m, st in enumerate(recorded):
        term = tuple_sub(tuple_sub(a[m + 1], a[m]), row_times_matrix(f, st.P))
        running = tuple_add(running, term)
        P_total = P_total + st.P
        if not is_solution(running, f):
            raise VerificationFailure(f"partial sum g_{m} fails the Bezout identity")
        if running != tuple_sub(a[m + 1], row_times_matrix(f, P_total)):
            raise VerificationFailure(f"telescoping identity fails at m={m}")
        partial_sums.append(running)

    return GlueTrace(f, schedule, tuple(recorded), a[stages + 1], tuple(partial_sums), policy)


def cauchy_radius(schedule: DiskSchedule, m: int) -> Fraction:
    """Radius on which g_{m'} - g_m is bounded: r_m, with D_1 standing in for the point disk D_0."""
    return schedule.radius(max(m, 1))


def cauchy_bound(
    trace: GlueTrace, m: int, m_prime: int, schedule: DiskSchedule | None = None
) -> Fraction:
    """Majorant of g_{m'} - g_m on D_m: sum_{k=m+1}^{m'} of |f (H_k - P_k)|."""
    schedule = schedule or trace.schedule
    if not 0 <= m < m_prime <= trace.m_max:
        raise IndexOutOfRange(f"need 0 <= m < m' <= {trace.m_max}, got m={m}, m'={m_prime}")
    disk = Polydisk(schedule.n, cauchy_radius(schedule, m))
    total = Fraction(0)
    for st in trace.stages[m + 1 : m_prime + 1]:
        total += defect_majorant(trace.f, st.H - st.P, disk, trace.policy)
    return total
