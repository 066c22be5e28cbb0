"""Independent re-checker for serialized glue traces.

Trusts nothing in the input: every identity and bound is recomputed from
the raw polynomials using only the polynomial and matrix algebra, never the
code that produced the trace.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import parse_rational
from .errors import BezoutKitError
from .param import AntisymMatrix, row_times_matrix
from .poly import MultiPoly, Polydisk, dot, tuple_majorant
from .serial import poly_from_json, tuple_from_json

_PAIR_RE = re.compile(r"^\((\d+),(\d+)\)$")


@dataclass
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class VerifyReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.ok), None)


class _Fail(Exception):
    pass


def _matrix(obj: dict, N: int, n: int, label: str, report: VerifyReport) -> AntisymMatrix:
    if obj.get("N") != N:
        _record(report, f"antisymmetry {label}", False, f"N={obj.get('N')} but f has {N} entries")
    upper = {}
    for key, val in obj.get("upper", {}).items():
        m = _PAIR_RE.match(key.replace(" ", ""))
        j, k = (int(m.group(1)), int(m.group(2))) if m else (0, 0)
        if not (m and 1 <= j < k <= N):
            _record(report, f"antisymmetry {label}", False, f"entry {key} outside the strict upper triangle")
        upper[(j - 1, k - 1)] = poly_from_json(val, n)
    return AntisymMatrix.from_upper(N, n, upper)


def _record(report: VerifyReport, name: str, ok: bool, detail: str = "") -> None:
    report.checks.append(Check(name, ok, detail))
    if not ok:
        raise _Fail


def verify_trace(obj: dict) -> VerifyReport:
    """Recheck a trace document; the report stops at the first failing identity."""
    report = VerifyReport()
    try:
        _verify(obj, report)
    except _Fail:
        pass
    except (BezoutKitError, KeyError, TypeError, ValueError) as exc:
        report.checks.append(Check("structure", False, f"{type(exc).__name__}: {exc}"))
    return report


def _verify(obj: dict, report: VerifyReport) -> None:
    f = tuple_from_json(obj["f"])
    N, n = len(f), f[0].n
    one = MultiPoly.one(n)
    policy = obj.get("modulus_bound", "sum")
    radii = [parse_rational(r) for r in obj["schedule"]]
    stages = obj["stages"]
    m_max = len(stages) - 1

    _record(
        report,
        "schedule",
        bool(radii) and radii[0] > 0 and all(b > a for a, b in zip(radii, radii[1:])),
        "radii must be positive and strictly increasing",
    )
    _record(report, "schedule length", len(radii) >= m_max + 1, f"need {m_max + 1} radii, got {len(radii)}")
    _record(
        report,
        "stage indices",
        m_max >= 0 and [st["k"] for st in stages] == list(range(m_max + 1)),
        "stages must be numbered 0..m",
    )
    _record(
        report,
        "partial sum count",
        len(obj["partial_sums"]) == m_max + 1,
        f"expected {m_max + 1} partial sums",
    )

    a = [tuple_from_json(st["a"], n) for st in stages] + [tuple_from_json(obj["a_final"], n)]
    for k, ak in enumerate(a):
        _record(report, f"length a_{k}", len(ak) == N, f"a_{k} has {len(ak)} entries, f has {N}")
    H = [_matrix(st["H_upper"], N, n, f"H_{st['k']}", report) for st in stages]
    P = [_matrix(st["P_upper"], N, n, f"P_{st['k']}", report) for st in stages]
    bounds = [parse_rational(st["bound"]) for st in stages]

    _record(
        report,
        "stage 0",
        all(p.is_zero() for p in a[0]) and H[0].is_zero() and P[0].is_zero() and bounds[0] == 0,
        "stage 0 must have a_0 = 0, H_0 = P_0 = 0, bound 0",
    )

    for k in range(1, m_max + 2):
        _record(report, f"bezout a_{k}", dot(a[k], f) == one, f"sum_j (a_{k})_j f_j != 1")

    for k in range(1, m_max + 1):
        fH = row_times_matrix(f, H[k])
        _record(
            report,
            f"transition H_{k}",
            tuple(x + y for x, y in zip(a[k], fH)) == a[k + 1],
            f"a_{k + 1} != a_{k} + f H_{k}",
        )

    def defect(k: int, r: Fraction) -> Fraction:
        return tuple_majorant(row_times_matrix(f, H[k] - P[k]), Polydisk(n, r), policy)

    for k in range(1, m_max + 1):
        actual = defect(k, radii[k])
        _record(
            report,
            f"bound {k}",
            actual <= bounds[k] < Fraction(1, 2**k),
            f"recomputed {actual}, recorded {bounds[k]}, budget 2^-{k}",
        )

    p_sum = AntisymMatrix.zero(N, n)
    for m in range(m_max + 1):
        g = tuple_from_json(obj["partial_sums"][m], n)
        p_sum = p_sum + P[m]
        _record(report, f"partial sum g_{m}", len(g) == N and dot(g, f) == one, f"sum_j (g_{m})_j f_j != 1")
        fP = row_times_matrix(f, p_sum)
        _record(
            report,
            f"telescoping g_{m}",
            g == tuple(x - y for x, y in zip(a[m + 1], fP)),
            f"g_{m} != a_{m + 1} - f (P_0 + ... + P_{m})",
        )

    for m in range(m_max):
        r = radii[max(m, 1) - 1]
        total = Fraction(0)
        for mp in range(m + 1, m_max + 1):
            total += defect(mp, r)
            _record(report, f"cauchy ({m},{mp})", total < Fraction(1, 2**m), f"majorant {total} >= 2^-{m}")
