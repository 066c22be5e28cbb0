"""Exact Bezout-equation toolkit over Q(i)[z1, ..., zn].

Construct, parametrize and certify solutions of sum_j g_j f_j = 1, and glue
local solutions on nested polydisks into a telescoping series with exact
rational error certificates.
"""
from .arith import GaussianRational, modulus_upper_bound
from .errors import (
    AllZeroInput,
    BezoutKitError,
    DimensionMismatch,
    DivisionByZero,
    IndexOutOfRange,
    InternalVerificationFailure,
    NotAntisymmetric,
    NotASolution,
    ParseError,
    VerificationFailure,
)
from .glue import (
    DiskSchedule,
    GlueStage,
    GlueTrace,
    LocalSolutionProvider,
    cauchy_bound,
    choose_Pk,
    run_glue,
    transition_matrix,
)
from .groebner import BezoutCertificate, NotUnitIdeal, TrackedBasis, buchberger, reduce, solve_bezout
from .param import AntisymMatrix, annihilation_residual, apply_shift, difference_matrix
from .poly import (
    MultiPoly,
    Polydisk,
    evaluate,
    polydisk_majorant,
    truncate_total_degree,
    tuple_majorant,
)
from .serial import parse_poly

__version__ = "0.1.0"
