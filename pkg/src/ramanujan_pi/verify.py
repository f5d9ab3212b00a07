"""Numeric verification of family instances and recognition of rational * sqrt(d) / pi."""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Union

from .bignum import FixedReal, pi_reference, sqrt_int
from .errors import NoMatch
from .families import Family, FamilyParams, instantiate, sum_series
from .gamma import RecognizedConstant

DEFAULT_SEED = 20240101

# working precision exceeds the reconstruction tolerance by this many digits
RECOGNITION_MARGIN = 20
MAX_DENOMINATOR = 10**12


def floor_log10(x: Fraction) -> int:
    """floor(log10(x)) for x > 0, computed exactly."""
    if x <= 0:
        raise ValueError("x must be positive")
    n, d = x.numerator, x.denominator
    e = len(str(n)) - len(str(d))
    # 10^e <= n/d < 10^(e+1) after at most one correction
    if e >= 0:
        if n < d * 10**e:
            e -= 1
    elif n * 10**-e < d:
        e -= 1
    return e


@dataclass(frozen=True)
class VerificationReport:
    params: FamilyParams
    digits_requested: int
    terms_used: int
    matched: bool
    constant: RecognizedConstant
    residual_exponent: int
    seed: int = DEFAULT_SEED


@dataclass(frozen=True)
class SkipRecord:
    params: FamilyParams
    reason: str


def verify_instance(params: FamilyParams, digits: int, seed: int = DEFAULT_SEED) -> VerificationReport:
    """Sum the instance and compare with its exact constant evaluated via Machin's pi.

    ``residual_exponent`` is floor(log10) of a certified upper bound on
    |sum - constant|, so matched implies residual_exponent <= -digits.
    """
    inst = instantiate(params)
    s = sum_series(inst, digits + 10)
    c = inst.constant.value(s.value.frac_bits)
    bound = s.value.difference_bound(c)
    residual = floor_log10(bound)
    matched = bound < Fraction(1, 10**digits)
    return VerificationReport(params, digits, s.terms_used, matched, inst.constant, residual, seed)


def continued_fraction_convergents(x: Fraction) -> Iterator[Fraction]:
    p0, q0, p1, q1 = 0, 1, 1, 0
    while True:
        a = x.numerator // x.denominator
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        yield Fraction(p1, q1)
        rest = x - a
        if rest == 0:
            return
        x = 1 / rest


def denominator_cap(digits: int) -> int:
    """Largest denominator searched at a given precision.

    Capped at 10^12, and also at 10^((digits-24)/2) so that a generic real
    cannot be matched by chance: a convergent with denominator Q is about
    1/Q^2 away, which must stay well above the tolerance.
    """
    return min(MAX_DENOMINATOR, 10 ** max((digits - RECOGNITION_MARGIN - 4) // 2, 1))


def recognize_constant(s: FixedReal, digits: int) -> RecognizedConstant:
    """Find rat, d with s = rat * sqrt(d) / pi, trying d = 1, 2, 3 in order."""
    if digits < 40:
        raise ValueError("recognition needs at least 40 digits")
    if s.error_bound() > Fraction(1, 10**digits):
        raise ValueError(f"input carries fewer than {digits} digits")
    tol = Fraction(1, 10 ** (digits - RECOGNITION_MARGIN))
    cap = denominator_cap(digits)
    P = s.frac_bits + 16
    pi = pi_reference(P)
    sw = s.with_frac_bits(P)
    for d in (1, 2, 3):
        x = sw * pi
        if d != 1:
            x = x / sqrt_int(d, P)
        approx, err = x.to_fraction(), x.error_bound()
        for conv in continued_fraction_convergents(approx):
            if conv.denominator > cap:
                break
            if conv != 0 and abs(approx - conv) + err < tol:
                return RecognizedConstant(conv, d, -1)
    raise NoMatch(f"no rational * sqrt(d) / pi with d in (1,2,3) and denominator <= {cap}")


def grid_params(p_max: int, q_max: int, r_max: int) -> Iterator[FamilyParams]:
    """Every (family, p, q[, r]) with 0 <= p <= p_max, |q| <= q_max, 0 <= r <= r_max, in order."""
    for fam in Family:
        rs = range(r_max + 1) if fam.has_r else [None]
        for p, q, r in itertools.product(range(p_max + 1), range(-q_max, q_max + 1), rs):
            yield FamilyParams(fam, p, q, r)


def _verify_job(job):
    params, digits, seed = job
    return verify_instance(params, digits, seed)


def scan_grid(
    p_max: int, q_max: int, r_max: int, digits: int, seed: int = DEFAULT_SEED, jobs: int = 1
) -> list[Union[VerificationReport, SkipRecord]]:
    """Verify every admissible instance in the box; inadmissible ones become skip records."""
    if min(p_max, q_max, r_max) < 0:
        raise ValueError("bounds must be >= 0")
    out: list[Optional[Union[VerificationReport, SkipRecord]]] = []
    todo = []
    for params in grid_params(p_max, q_max, r_max):
        why = params.violation()
        if why:
            out.append(SkipRecord(params, f"violates {why}"))
        else:
            todo.append((len(out), (params, digits, seed)))
            out.append(None)
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_job, [j for _, j in todo]))
    else:
        results = [_verify_job(j) for _, j in todo]
    for (i, _), rep in zip(todo, results):
        out[i] = rep
    return out


@dataclass(frozen=True)
class PiResult:
    value: FixedReal
    digits: int
    terms_used: int

    @property
    def digits_per_term(self) -> float:
        return self.digits / self.terms_used if self.terms_used else float("inf")


def pi_from_instance(params: FamilyParams, digits: int) -> PiResult:
    """pi = rat * sqrt(d) / S, where S sums the instance whose constant is rat * sqrt(d) / pi.

    Precision is raised until at least ``digits`` decimals are certified.
    """
    inst = instantiate(params)
    c = inst.constant
    if c.pi_power != -1:
        raise ValueError(f"{params.label()}: constant {c} has no 1/pi factor")
    extra = 10
    while True:
        s = sum_series(inst, digits + extra)
        P = s.value.frac_bits
        top = FixedReal.from_rational(c.rat, P)
        if c.surd != 1:
            top = top * sqrt_int(c.surd, P)
        pi = top / s.value
        if pi.certified_digits() >= digits:
            return PiResult(pi, digits, s.terms_used)
        extra += 10
