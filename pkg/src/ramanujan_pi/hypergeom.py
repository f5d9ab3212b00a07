"""Exact evaluation of terminating hypergeometric sums and two 7F6 summation identities."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple, Sequence

from .bignum import Rational
from .errors import PoleInSummand
from .pochhammer import pochhammer

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class TerminatingSeries:
    """sum_{k=0}^{n} prod (a_i)_k / (k! prod (b_j)_k) * z^k with some a_i = -n."""

    numerator: tuple[Fraction, ...]
    denominator: tuple[Fraction, ...]
    argument: Fraction
    n: int

    def __post_init__(self):
        object.__setattr__(self, "numerator", tuple(Fraction(a) for a in self.numerator))
        object.__setattr__(self, "denominator", tuple(Fraction(b) for b in self.denominator))
        object.__setattr__(self, "argument", Fraction(self.argument))
        if self.n < 0:
            raise ValueError("termination index must be >= 0")
        if Fraction(-self.n) not in self.numerator:
            raise ValueError(f"no numerator parameter equals -{self.n}")


def pfq_terminating(series: TerminatingSeries) -> Fraction:
    """Exact value via the term recurrence t_{k+1} = t_k * prod(a+k)/prod(b+k) * z/(k+1).

    A vanishing numerator factor ends the sum (all later terms are zero); a
    vanishing denominator factor with a nonzero numerator raises
    :class:`PoleInSummand`.
    """
    total = term = Fraction(1)
    z = series.argument
    for k in range(series.n):
        num = Fraction(1)
        for a in series.numerator:
            num *= a + k
        if num == 0:
            break
        den = Fraction(k + 1)
        for b in series.denominator:
            if b + k == 0:
                raise PoleInSummand(f"denominator parameter {b} vanishes at k={k + 1}", index=k + 1, parameter=b)
            den *= b + k
        term = term * num * z / den
        total += term
    return total


class IdentityCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    equal: bool


def _pochhammer_ratio(num: Sequence[Fraction], den: Sequence[Fraction], n: int) -> Fraction:
    top = Fraction(1)
    for x in num:
        top *= pochhammer(x, n)
    bottom = Fraction(1)
    for x in den:
        v = pochhammer(x, n)
        if v == 0:
            raise PoleInSummand(f"right side: ({x})_{n} vanishes", index=None, parameter=x)
        bottom *= v
    return top / bottom


def gessel_stanton_series(a: Rational, b: Rational, c: Rational, n: int) -> TerminatingSeries:
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    return TerminatingSeries(
        (a, 1 + a / 3, b, 1 - b, c, HALF + a - c + n, Fraction(-n)),
        (a / 3, (2 + a - b) / 2, (1 + a + b) / 2, 1 + a - 2 * c, 1 + a + 2 * n, 2 * c - a - 2 * n),
        Fraction(1),
        n,
    )


def gessel_stanton_rhs_params(a: Rational, b: Rational, c: Rational):
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    num = ((1 + a) / 2, 1 + a / 2, (1 + a + b) / 2 - c, 1 + (a - b) / 2 - c)
    den = ((1 + a + b) / 2, 1 + (a - b) / 2, (1 + a) / 2 - c, 1 + a / 2 - c)
    return num, den


def gessel_stanton_check(a: Rational, b: Rational, c: Rational, n: int) -> IdentityCheck:
    """Both sides of the Gessel-Stanton 7F6 summation, evaluated exactly."""
    lhs = pfq_terminating(gessel_stanton_series(a, b, c, n))
    rhs = _pochhammer_ratio(*gessel_stanton_rhs_params(a, b, c), n)
    return IdentityCheck(lhs, rhs, lhs == rhs)


def gasper_series(a: Rational, b: Rational, n: int) -> TerminatingSeries:
    a, b = Fraction(a), Fraction(b)
    return TerminatingSeries(
        (3 * a, 1 + 3 * a / 4, (1 - 3 * b) / 2, (2 - 3 * b) / 2, 3 * b, 2 * a + b + n, Fraction(-n)),
        (3 * a / 4, (1 + 3 * a + 3 * b) / 2, (3 * a + 3 * b) / 2, 1 + a - b, 1 - 3 * a - 3 * b - 3 * n, 1 + 3 * a + 3 * n),
        Fraction(1),
        n,
    )


def gasper_rhs_params(a: Rational, b: Rational):
    a, b = Fraction(a), Fraction(b)
    third = Fraction(1, 3)
    num = (a + 2 * b, a + third, a + 2 * third, a + 1)
    den = (1 + a - b, a + b, a + b + third, a + b + 2 * third)
    return num, den


def gasper_check(a: Rational, b: Rational, n: int) -> IdentityCheck:
    """Both sides of Gasper's cubic 7F6 summation, evaluated exactly."""
    lhs = pfq_terminating(gasper_series(a, b, n))
    rhs = _pochhammer_ratio(*gasper_rhs_params(a, b), n)
    return IdentityCheck(lhs, rhs, lhs == rhs)


IDENTITIES = ("gessel-stanton", "gasper")


def _hits_pole(params: Sequence[Fraction], n: int) -> bool:
    # (x)_k for k <= n vanishes iff x is an integer in [-(n-1), 0]
    return any(x.denominator == 1 and -(n - 1) <= x <= 0 for x in params)


def random_rational(rng: random.Random, max_den: int = 9, max_abs: int = 5) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-max_abs * den, max_abs * den), den)


@dataclass
class TrialSummary:
    which: str
    trials: int
    n_max: int
    seed: int
    passed: int = 0
    resampled: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.trials


def run_identity_trials(which: str, trials: int, n_max: int, seed: int) -> TrialSummary:
    """Check an identity at ``trials`` seeded random pole-free points with 0 <= n <= n_max.

    Parameters have denominators in 1..9 and magnitude at most 5; draws that
    put a pole in either side are redrawn and counted in ``resampled``.
    """
    if which not in IDENTITIES:
        raise ValueError(f"unknown identity {which!r}; expected one of {IDENTITIES}")
    rng = random.Random(seed)
    summary = TrialSummary(which, trials, n_max, seed)
    done = 0
    while done < trials:
        n = rng.randint(0, n_max)
        if which == "gessel-stanton":
            a, b, c = (random_rational(rng) for _ in range(3))
            series = gessel_stanton_series(a, b, c, n)
            _, rhs_den = gessel_stanton_rhs_params(a, b, c)
            point = (a, b, c, n)
        else:
            a, b = random_rational(rng), random_rational(rng)
            series = gasper_series(a, b, n)
            _, rhs_den = gasper_rhs_params(a, b)
            point = (a, b, n)
        if _hits_pole(series.denominator, n) or _hits_pole(rhs_den, n):
            summary.resampled += 1
            continue
        check = gessel_stanton_check(*point) if which == "gessel-stanton" else gasper_check(*point)
        done += 1
        if check.equal:
            summary.passed += 1
        else:
            summary.failures.append((point, check))
    return summary
