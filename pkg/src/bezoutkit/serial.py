"""JSON wire formats and the human-readable polynomial parser.

Formats:

* rational: ``"p/q"`` (``"p"`` when q == 1)
* Gaussian rational: ``{"re": "p/q", "im": "p/q"}``
* polynomial: ``{"n": 2, "terms": [{"exp": [1, 1], "re": "1", "im": "0"}, ...]}``
  with terms in descending graded-lex order and no zero coefficients
* antisymmetric matrix: ``{"N": 3, "upper": {"(1,2)": poly, ...}}`` holding the
  strict upper triangle (1-based), every pair present
* certificate: ``{"f": [...], "g": [...], "verified": true}``
* glue trace: see :func:`trace_to_json`
"""
from __future__ import annotations

import re
from typing import Any, Sequence

from .arith import GaussianRational, format_rational, parse_rational
from .errors import ParseError
from .glue import DiskSchedule, GlueStage, GlueTrace
from .groebner import BezoutCertificate
from .param import AntisymMatrix
from .poly import MultiPoly


# -- scalars ---------------------------------------------------------------


def gaussian_to_json(c: GaussianRational) -> dict:
    return {"re": format_rational(c.re), "im": format_rational(c.im)}


def gaussian_from_json(obj: dict) -> GaussianRational:
    return GaussianRational(parse_rational(obj["re"]), parse_rational(obj["im"]))


# -- polynomials -----------------------------------------------------------


def poly_to_json(p: MultiPoly) -> dict:
    return {
        "n": p.n,
        "terms": [
            {"exp": list(exp), "re": format_rational(c.re), "im": format_rational(c.im)}
            for exp, c in p.sorted_terms("grlex", descending=True)
        ],
    }


def poly_from_json(obj: Any, n: int | None = None) -> MultiPoly:
    """Accepts the JSON object form or a human-readable string."""
    if isinstance(obj, str):
        return parse_poly(obj, n)
    if not isinstance(obj, dict) or "n" not in obj or "terms" not in obj:
        raise ParseError(f"not a polynomial: {obj!r}")
    pn = obj["n"]
    if n is not None and pn != n:
        raise ParseError(f"polynomial has n={pn}, expected {n}")
    seen = set()
    terms = []
    for t in obj["terms"]:
        exp = tuple(t["exp"])
        if len(exp) != pn:
            raise ParseError(f"exponent {list(exp)} has wrong length for n={pn}")
        if exp in seen:
            raise ParseError(f"duplicate monomial {list(exp)}")
        seen.add(exp)
        terms.append((exp, GaussianRational(parse_rational(t["re"]), parse_rational(t["im"]))))
    return MultiPoly(pn, terms)


def tuple_to_json(t: Sequence[MultiPoly]) -> list:
    return [poly_to_json(p) for p in t]


def tuple_from_json(objs: Sequence[Any], n: int | None = None) -> tuple[MultiPoly, ...]:
    if not isinstance(objs, list) or not objs:
        raise ParseError("expected a non-empty list of polynomials")
    if n is None:
        n = infer_n(objs)
    return tuple(poly_from_json(o, n) for o in objs)


def infer_n(objs: Sequence[Any]) -> int:
    """Variable count: explicit ``n`` of any JSON polynomial, else the largest z-index in strings."""
    for o in objs:
        if isinstance(o, dict) and "n" in o:
            return o["n"]
    best = 1
    for o in objs:
        if isinstance(o, str):
            for m in re.finditer(r"z(\d*)", o):
                best = max(best, int(m.group(1) or 1))
    return best


# -- matrices --------------------------------------------------------------

_PAIR_RE = re.compile(r"^\((\d+),(\d+)\)$")


def matrix_to_json(H: AntisymMatrix) -> dict:
    return {
        "N": H.N,
        "upper": {f"({j + 1},{k + 1})": poly_to_json(p) for (j, k), p in H.upper().items()},
    }


def matrix_from_json(obj: dict, n: int) -> AntisymMatrix:
    N = obj["N"]
    upper = {}
    for key, val in obj.get("upper", {}).items():
        m = _PAIR_RE.match(key.replace(" ", ""))
        if not m:
            raise ParseError(f"bad matrix index {key!r}")
        upper[(int(m.group(1)) - 1, int(m.group(2)) - 1)] = poly_from_json(val, n)
    return AntisymMatrix.from_upper(N, n, upper)


# -- certificates and traces -----------------------------------------------


def certificate_to_json(cert: BezoutCertificate) -> dict:
    return {"f": tuple_to_json(cert.f), "g": tuple_to_json(cert.g), "verified": cert.verified}


def certificate_from_json(obj: dict) -> BezoutCertificate:
    f = tuple_from_json(obj["f"])
    g = tuple_from_json(obj["g"], f[0].n)
    return BezoutCertificate(f, g, bool(obj.get("verified", False)))


def trace_to_json(trace: GlueTrace) -> dict:
    return {
        "f": tuple_to_json(trace.f),
        "modulus_bound": trace.policy,
        "schedule": [format_rational(r) for r in trace.schedule.radii],
        "stages": [
            {
                "k": st.k,
                "a": tuple_to_json(st.a),
                "H_upper": matrix_to_json(st.H),
                "P_upper": matrix_to_json(st.P),
                "bound": format_rational(st.bound),
            }
            for st in trace.stages
        ],
        "a_final": tuple_to_json(trace.a_final),
        "partial_sums": [tuple_to_json(g) for g in trace.partial_sums],
    }


def trace_from_json(obj: dict) -> GlueTrace:
    """Parse a trace without checking any of its identities."""
    f = tuple_from_json(obj["f"])
    n = f[0].n
    schedule = DiskSchedule(n, tuple(parse_rational(r) for r in obj["schedule"]))
    stages = tuple(
        GlueStage(
            st["k"],
            tuple_from_json(st["a"], n),
            matrix_from_json(st["H_upper"], n),
            matrix_from_json(st["P_upper"], n),
            parse_rational(st["bound"]),
        )
        for st in obj["stages"]
    )
    return GlueTrace(
        f,
        schedule,
        stages,
        tuple_from_json(obj["a_final"], n),
        tuple(tuple_from_json(g, n) for g in obj["partial_sums"]),
        obj.get("modulus_bound", "sum"),
    )


# -- human-readable polynomial syntax --------------------------------------
#
#   expr   := ['+'|'-'] term (('+'|'-') term)*
#   term   := power (['*'|'/'] power | power)*      juxtaposition multiplies
#   power  := atom ['^' INT]
#   atom   := INT | 'i' | VAR | '(' expr ')'
#   VAR    := 'z' | 'z' INT                          'z' means z1

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(z\d*)|(i)|([-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            rest = text[pos:]
            col = pos + len(rest) - len(rest.lstrip()) + 1
            raise ParseError(f"unexpected character {rest.strip()[:1]!r} at column {col}")
        col = m.start(m.lastindex) + 1
        if m.group(1):
            tokens.append(("int", m.group(1), col))
        elif m.group(2):
            tokens.append(("var", m.group(2), col))
        elif m.group(3):
            tokens.append(("i", "i", col))
        else:
            tokens.append(("op", m.group(4), col))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, n: int):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.n = n

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of polynomial")
        self.pos += 1
        return tok

    def expect(self, op: str):
        tok = self.take()
        if tok != ("op", op, tok[2]):
            raise ParseError(f"expected {op!r} at column {tok[2]}, found {tok[1]!r}")

    def parse(self) -> MultiPoly:
        if not self.tokens:
            raise ParseError("empty polynomial")
        p = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r} at column {tok[2]}")
        return p

    def expr(self) -> MultiPoly:
        sign = 1
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        acc = self.term() * sign
        while (tok := self.peek()) and tok[0] == "op" and tok[1] in "+-":
            self.take()
            t = self.term()
            acc = acc + t if tok[1] == "+" else acc - t
        return acc

    def _starts_atom(self, tok) -> bool:
        return tok is not None and (tok[0] != "op" or tok[1] == "(")

    def term(self) -> MultiPoly:
        acc = self.power()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] == "*":
                self.take()
                acc = acc * self.power()
            elif tok and tok[0] == "op" and tok[1] == "/":
                self.take()
                col = tok[2]
                d = self.power()
                if not d.is_constant() or d.is_zero():
                    raise ParseError(f"division by a non-constant or zero at column {col}")
                acc = acc / d.constant_term()
            elif self._starts_atom(tok):
                acc = acc * self.power()
            else:
                return acc

    def power(self) -> MultiPoly:
        base = self.atom()
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "int":
                raise ParseError(f"exponent must be a non-negative integer at column {e[2]}")
            return base ** int(e[1])
        return base

    def atom(self) -> MultiPoly:
        tok = self.take()
        kind, text, col = tok
        if kind == "int":
            return MultiPoly.constant(self.n, int(text))
        if kind == "i":
            return MultiPoly.constant(self.n, GaussianRational(0, 1))
        if kind == "var":
            idx = int(text[1:] or 1)
            if not 1 <= idx <= self.n:
                raise ParseError(f"variable {text} at column {col} outside z1..z{self.n}")
            return MultiPoly.variable(self.n, idx - 1)
        if text == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {text!r} at column {col}")


def parse_poly(text: str, n: int | None = None) -> MultiPoly:
    """Parse e.g. ``"(1-2i) z1^2 z2 + 3"`` or ``"z1*z2 - 1/2"``."""
    if n is None:
        n = infer_n([text])
    return _Parser(text, n).parse()

