"""Parameterised Ramanujan-type series for 1/pi, with exact and certified checks."""

from .bignum import FixedReal, pi_reference, rational_arithmetic, sqrt_int
from .errors import (
    ConstraintViolation,
    DivisionByZero,
    IrreducibleResidue,
    NegativeInput,
    NoMatch,
    PoleEncountered,
    PoleInSummand,
    ThresholdNotReached,
)
from .families import (
    Family,
    FamilyParams,
    SeriesInstance,
    derivation_check,
    instantiate,
    partial_sum,
    substitution_map,
    sum_series,
    sum_to_digits,
    tail_bound,
)
from .gamma import GammaProduct, RecognizedConstant, gamma_simplify, gasper_limit, gessel_stanton_limit
from .hypergeom import TerminatingSeries, gasper_check, gessel_stanton_check, pfq_terminating, run_identity_trials
from .pochhammer import pochhammer
from .render import render, render_latex, render_text
from .report import parse, serialize
from .verify import VerificationReport, pi_from_instance, recognize_constant, scan_grid, verify_instance

__version__ = "0.1.0"
