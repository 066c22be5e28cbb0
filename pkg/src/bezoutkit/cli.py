"""Command-line front end.

Every subcommand reads one JSON document (``--input`` or stdin) and writes
one JSON document (``--output`` or stdout).

Exit codes: 0 success, 1 input error, 2 verification failure,
3 negative verdict (not the unit ideal).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

import jsonschema

from . import schemas
from .arith import MODULUS_POLICIES, parse_rational
from .errors import BezoutKitError, VerificationFailure
from .glue import (
    DiskSchedule,
    LocalSolutionProvider,
    power_perturbations,
    run_glue,
    zero_perturbations,
)
from .groebner import BezoutCertificate, solve_bezout
from .param import apply_shift, difference_matrix
from .poly import TERM_ORDERS, MultiPoly, dot
from .serial import (
    certificate_to_json,
    infer_n,
    matrix_from_json,
    matrix_to_json,
    poly_from_json,
    poly_to_json,
    trace_to_json,
    tuple_from_json,
    tuple_to_json,
)
from .verify import verify_trace

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_VERIFY = 2
EXIT_NEGATIVE = 3


class InputError(Exception):
    pass


class Outcome(Exception):
    """Carries a JSON payload together with a non-zero exit code."""

    def __init__(self, code: int, payload: dict, message: str = ""):
        super().__init__(message)
        self.code = code
        self.payload = payload
        self.message = message


def _load(text: str, source: str, command: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        jsonschema.validate(doc, schemas.BY_COMMAND[command])
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise InputError(f"{source}: schema error at {where}: {exc.message}") from None
    return doc


def _var_count(doc: dict, *keys: str) -> int:
    if "n" in doc:
        return doc["n"]
    objs = [p for k in keys if k in doc and isinstance(doc[k], list) for p in doc[k]]
    return infer_n(objs)


def cmd_certify(doc: dict, args) -> dict:
    f = tuple_from_json(doc["f"], _var_count(doc, "f"))
    verdict = solve_bezout(f, args.order)
    unit = isinstance(verdict, BezoutCertificate)
    if not unit:
        raise Outcome(EXIT_NEGATIVE, {"unit_ideal": False})
    return {"unit_ideal": True}


def cmd_solve(doc: dict, args) -> dict:
    f = tuple_from_json(doc["f"], _var_count(doc, "f"))
    verdict = solve_bezout(f, args.order)
    if not isinstance(verdict, BezoutCertificate):
        raise Outcome(EXIT_NEGATIVE, {"unit_ideal": False, "error": "NotUnitIdeal"}, "NotUnitIdeal")
    cert = BezoutCertificate(verdict.f, verdict.g, verdict.recheck())
    if not cert.verified:
        raise Outcome(EXIT_VERIFY, certificate_to_json(cert), "certificate does not re-expand to 1")
    return certificate_to_json(cert)


def cmd_shift(doc: dict, args) -> dict:
    n = _var_count(doc, "a", "x")
    a = tuple_from_json(doc["a"], n)
    x = tuple_from_json(doc["x"], n)
    H = matrix_from_json(doc["H"], n)
    y = apply_shift(a, x, H)
    return {"y": tuple_to_json(y), "y_dot_a": poly_to_json(dot(y, a))}


def cmd_diff(doc: dict, args) -> dict:
    n = _var_count(doc, "x", "y", "a")
    x = tuple_from_json(doc["x"], n)
    y = tuple_from_json(doc["y"], n)
    H = difference_matrix(x, y)
    out = {"H": matrix_to_json(H)}
    if "a" in doc:
        a = tuple_from_json(doc["a"], n)
        out["reconstructs"] = apply_shift(a, x, H) == y
    return out


def _perturbations(spec, N: int, n: int):
    if spec is None or spec == "zero":
        return zero_perturbations(N, n)
    if isinstance(spec, list):
        return [matrix_from_json(m, n) for m in spec]
    template = {}
    for key, val in spec["power"].items():
        j, k = (int(s) for s in key.strip("() ").split(","))
        template[(j - 1, k - 1)] = poly_from_json(val, n)
    return power_perturbations(N, n, template, spec.get("factorial", False))


def cmd_glue(doc: dict, args) -> dict:
    n = _var_count(doc, "f")
    f = tuple_from_json(doc["f"], n)
    stages = doc["stages"]
    base_spec = doc.get("base", "auto")
    if base_spec == "auto":
        base = solve_bezout(f, args.order)
        if not isinstance(base, BezoutCertificate):
            raise Outcome(EXIT_NEGATIVE, {"unit_ideal": False, "error": "NotUnitIdeal"}, "NotUnitIdeal")
    else:
        g = tuple_from_json(base_spec, n)
        if len(g) != len(f) or dot(g, f) != MultiPoly.one(n):
            raise InputError("base does not satisfy sum_j g_j f_j = 1")
        base = BezoutCertificate(f, g, True)
    if "radii" in doc:
        schedule = DiskSchedule(n, tuple(parse_rational(r) for r in doc["radii"]))
    else:
        schedule = DiskSchedule.default(n, stages + 1)
    provider = LocalSolutionProvider(f, base, _perturbations(doc.get("perturbations"), len(f), n))
    trace = run_glue(provider, schedule, stages, args.modulus_bound)
    out = trace_to_json(trace)
    report = verify_trace(json.loads(json.dumps(out)))
    if not report.ok:
        bad = report.first_failure
        raise Outcome(EXIT_VERIFY, out, f"self-check failed: {bad.name}: {bad.detail}")
    return out


def cmd_verify(doc: dict, args) -> dict:
    report = verify_trace(doc)
    if not report.ok:
        bad = report.first_failure
        raise Outcome(
            EXIT_VERIFY,
            {"ok": False, "failed": bad.name, "detail": bad.detail, "checks_passed": len(report.checks) - 1},
            f"verification failed: {bad.name}: {bad.detail}",
        )
    return {"ok": True, "checks_passed": len(report.checks)}


COMMANDS = {
    "certify": (cmd_certify, "decide whether f generates the unit ideal"),
    "solve": (cmd_solve, "compute a certified Bezout solution g with sum g_j f_j = 1"),
    "shift": (cmd_shift, "y = x + a H for antisymmetric H"),
    "diff": (cmd_diff, "antisymmetric H with y = x + a H from two solutions"),
    "glue": (cmd_glue, "run the nested-polydisk gluing construction and emit a trace"),
    "verify": (cmd_verify, "independently re-check a glue trace"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", metavar="FILE", help="input JSON (default: stdin)")
    common.add_argument("--output", "-o", metavar="FILE", help="output JSON (default: stdout)")
    common.add_argument("--order", choices=TERM_ORDERS, default="grevlex", help="Groebner term order")
    common.add_argument(
        "--modulus-bound", choices=MODULUS_POLICIES, default="sum", help="coefficient modulus bound policy"
    )
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument("--verbose", "-v", action="store_true", help="log stage progress to stderr")

    parser = argparse.ArgumentParser(prog="bezoutkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text, description=help_text)
    return parser


def _emit(payload: dict, args) -> None:
    if args.pretty:
        text = json.dumps(payload, indent=2)
    else:
        text = json.dumps(payload, separators=(",", ":"))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _configure_logging(verbose: bool) -> None:
    logger = logging.getLogger("bezoutkit")
    for h in list(logger.handlers):
        if getattr(h, "_bezoutkit_cli", False):
            logger.removeHandler(h)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    handler._bezoutkit_cli = True
    logger.addHandler(handler)
    logger.setLevel(logging.INFO if verbose else logging.WARNING)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    handler, _ = COMMANDS[args.command]
    source = args.input or "<stdin>"
    try:
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        doc = _load(text, source, args.command)
        payload = handler(doc, args)
    except Outcome as out:
        _emit(out.payload, args)
        if out.message:
            print(f"bezoutkit {args.command}: {out.message}", file=sys.stderr)
        return out.code
    except InputError as exc:
        print(f"bezoutkit {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationFailure as exc:
        print(f"bezoutkit {args.command}: verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (BezoutKitError, OSError, ValueError) as exc:
        print(f"bezoutkit {args.command}: {source}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    _emit(payload, args)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
