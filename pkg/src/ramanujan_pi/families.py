"""The seven parameterised Ramanujan-type families for 1/pi.

Each family is stored two ways.  The *raw* term is the summand exactly as
the family is stated (shifted Pochhammers with possibly negative index,
factorials of k+m or 2k+m, powers 4^(k+r+1) and so on).  The *canonical*
term is what the worked examples show: plain (x)_k symbols, factorials
(k+m)!, a primitive linear weight and z^k.  The two differ by a rational
scale, and ``sum t_k = constant`` holds for the canonical term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Optional

from .bignum import FixedReal, guard_bits
from .errors import ConstraintViolation, ThresholdNotReached
from .gamma import GammaProduct, RecognizedConstant, gamma_simplify, gasper_limit, gessel_stanton_limit
from .pochhammer import pochhammer, shifted_factorial

HALF = Fraction(1, 2)


class Family(str, Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"

    @property
    def has_r(self) -> bool:
        return self in (Family.T1, Family.T2)

    @property
    def shifted_constraint(self) -> bool:
        """True when the constraint reads min{p+q+1, p-q} >= 0."""
        return self in (Family.T2, Family.T4, Family.T7)


@dataclass(frozen=True, order=True)
class FamilyParams:
    family: Family
    p: int
    q: int
    r: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.family.has_r and self.r is None:
            object.__setattr__(self, "r", 0)
        if not self.family.has_r and self.r is not None:
            raise ConstraintViolation(f"{self.family.value} takes no r parameter")

    def violation(self) -> Optional[str]:
        """Text of the violated constraint, or None when the parameters are admissible."""
        p, q = self.p, self.q
        lower = p + q + 1 if self.family.shifted_constraint else p + q
        if lower < 0:
            return "min{p+q+1, p-q} >= 0 (p+q+1 < 0)" if self.family.shifted_constraint else "min{p+q, p-q} >= 0 (p+q < 0)"
        if p - q < 0:
            return "min{p+q+1, p-q} >= 0 (p-q < 0)" if self.family.shifted_constraint else "min{p+q, p-q} >= 0 (p-q < 0)"
        return None

    def validate(self) -> "FamilyParams":
        msg = self.violation()
        if msg:
            raise ConstraintViolation(f"{self.label()}: violates {msg}")
        return self

    def label(self) -> str:
        if self.family.has_r:
            return f"{self.family.value}({self.p},{self.q},{self.r})"
        return f"{self.family.value}({self.p},{self.q})"


# raw family terms ------------------------------------------------------------


class Poch(NamedTuple):
    """(x)_{mult*k + shift}, in the numerator when ``up`` else the denominator."""

    x: Fraction
    shift: int
    mult: int = 1
    up: bool = True


class Fact(NamedTuple):
    """(mult*k + m)!, always in the denominator."""

    m: int
    mult: int = 1


@dataclass(frozen=True)
class RawTerm:
    scale: Fraction
    pochs: tuple[Poch, ...]
    facts: tuple[Fact, ...]
    weight: tuple[int, int]
    z: Fraction

    def at(self, k: int) -> Fraction:
        """The summand at index k, evaluated straight from the factor list."""
        v = self.scale * (self.weight[0] * k + self.weight[1]) * self.z**k
        for ph in self.pochs:
            val = pochhammer(ph.x, ph.mult * k + ph.shift)
            v = v * val if ph.up else v / val
        for f in self.facts:
            v /= shifted_factorial(f.mult * k + f.m)
        return v


def raw_term(params: FamilyParams) -> RawTerm:
    fam, p, q, r = params.family, params.p, params.q, params.r
    h = HALF
    if fam in (Family.T1, Family.T2):
        s = h if fam is Family.T1 else 3 * h
        lo = h if fam is Family.T1 else -h
        extra = 0 if fam is Family.T1 else 1
        return RawTerm(
            Fraction(1, 4) ** (r + 1),
            (Poch(s, 2 * p), Poch(s, 2 * q), Poch(lo, -2 * q), Poch(h, r), Poch(s, 2 * p - 2 * r, up=False)),
            (Fact(0), Fact(p + q + extra), Fact(p - q)),
            (6, 4 * p + 1 + 2 * extra),
            Fraction(1, 4),
        )
    if fam in (Family.T3, Family.T4):
        s = h if fam is Family.T3 else 3 * h
        lo = h if fam is Family.T3 else -h
        extra = 0 if fam is Family.T3 else 1
        return RawTerm(
            Fraction(1),
            (Poch(s, 2 * p), Poch(s, 2 * q), Poch(lo, -2 * q)),
            (Fact(0), Fact(p + q + extra), Fact(p - q)),
            (6, 4 * p + 1 + 2 * extra),
            Fraction(-1, 8),
        )
    j = {Family.T5: 0, Family.T6: 1, Family.T7: 2}[fam]
    s = h + j
    return RawTerm(
        Fraction(1),
        (Poch(s, 3 * p), Poch(s, 3 * q), Poch(h - j, -3 * q, mult=2)),
        (Fact(0), Fact(p - q), Fact(3 * p + 3 * q + 2 * j, mult=2)),
        (8, 6 * p + 1 + 2 * j),
        Fraction(1, 9),
    )


def stated_value(params: FamilyParams) -> RecognizedConstant:
    """The value of the raw series, in closed form, as stated for the family."""
    fam, p, q, r = params.family, params.p, params.q, params.r
    if fam is Family.T1:
        pre = pochhammer(HALF, p + q - r) * pochhammer(HALF, p - q - r) / pochhammer(HALF, r)
        return RecognizedConstant(1 / pre, 1, -1)
    if fam is Family.T2:
        pre = pochhammer(HALF, p + q - r + 1) * pochhammer(HALF, p - q - r) / pochhammer(HALF, r)
        return RecognizedConstant(1 / pre, 1, -1)
    if fam is Family.T3:
        # 4^(p+1) / (sqrt2 pi) = 4^(p+1)/2 * sqrt2/pi
        return RecognizedConstant(Fraction(4) ** (p + 1) / 2, 2, -1)
    if fam is Family.T4:
        return RecognizedConstant(Fraction(4) ** (p + 2) / 2, 2, -1)
    sign = (-1) ** (q % 2)
    if fam is Family.T5:
        # 2(-1)^q / (3^(3q-1/2) pi) = 2(-1)^q 27^-q * sqrt3/pi
        return RecognizedConstant(sign * 2 * Fraction(27) ** -q / pochhammer(HALF, p + 2 * q), 3, -1)
    if fam is Family.T6:
        return RecognizedConstant(sign * 4 * Fraction(27) ** -q / 3 / pochhammer(HALF, p + 2 * q + 1), 3, -1)
    return RecognizedConstant(sign * 8 * Fraction(27) ** -q / 27 / pochhammer(HALF, p + 2 * q + 2), 3, -1)


# canonical terms ---------------------------------------------------------------


def _remove_common(num: list, den: list) -> tuple[list, list]:
    num, out = list(num), []
    for b in den:
        if b in num:
            num.remove(b)
        else:
            out.append(b)
    return num, out


@dataclass(frozen=True)
class HyperTerm:
    """t_k = (alpha k + beta) * prod (a)_k / prod D_b(k) * z^k.

    D_b(k) is (k+b-1)! when b is a positive integer and (b)_k otherwise, so
    t_0 = beta / prod (b-1)!.
    """

    numerator: tuple[Fraction, ...]
    denominator: tuple[Fraction, ...]
    weight: tuple[int, int]
    z: Fraction

    def at(self, k: int) -> Fraction:
        alpha, beta = self.weight
        v = Fraction(alpha * k + beta) * self.z**k
        for a in self.numerator:
            v *= pochhammer(a, k)
        for b in self.denominator:
            if b.denominator == 1 and b > 0:
                v /= math.factorial(k + int(b) - 1)
            else:
                v /= pochhammer(b, k)
        return v

    def ratio(self, k: int) -> Fraction:
        """t_{k+1} / t_k."""
        alpha, beta = self.weight
        v = self.z * Fraction(alpha * (k + 1) + beta, alpha * k + beta)
        for a in self.numerator:
            v *= a + k
        for b in self.denominator:
            v /= b + k
        return v

    def ratio_roots(self) -> tuple[list[Fraction], list[Fraction]]:
        """Roots with ratio(k) = z * prod(k + a) / prod(k + b), common roots cancelled."""
        alpha, beta = self.weight
        num, den = list(self.numerator), list(self.denominator)
        if alpha:
            shift = Fraction(beta, alpha)
            num.append(shift + 1)
            den.append(shift)
        return _remove_common(num, den)


def canonicalize(raw: RawTerm) -> tuple[HyperTerm, Fraction]:
    """Rewrite a raw term as ``scale * canonical``; returns (canonical, scale)."""
    scale = raw.scale
    z = raw.z
    num: list[Fraction] = []
    den: list[Fraction] = []

    def put(params, up):
        (num if up else den).extend(params)

    for ph in raw.pochs:
        base = pochhammer(ph.x, ph.shift)
        scale = scale * base if ph.up else scale / base
        x = ph.x + ph.shift
        if ph.mult == 1:
            put([x], ph.up)
        else:
            # (x)_{2k} = 4^k (x/2)_k ((x+1)/2)_k
            z = z * 4 if ph.up else z / 4
            put([x / 2, (x + 1) / 2], ph.up)
    for f in raw.facts:
        # (mk+m0)! = m0! (m0+1)_{mk}
        scale /= shifted_factorial(f.m)
        x = Fraction(f.m + 1)
        if f.mult == 1:
            den.append(x)
        else:
            z /= 4
            den.extend([x / 2, (x + 1) / 2])
    num, den = _remove_common(num, den)
    alpha, beta = raw.weight
    g = math.gcd(alpha, beta)
    scale *= g
    # canonical 1/(b)_k for integer b is rendered (k+b-1)!/(b-1)!
    for b in den:
        if b.denominator == 1 and b > 0:
            scale *= math.factorial(int(b) - 1)
    num_sorted = _group(num)
    den_sorted = sorted(den, key=lambda b: (not (b.denominator == 1 and b > 0), b))
    return HyperTerm(tuple(num_sorted), tuple(den_sorted), (alpha // g, beta // g), z), scale


def _group(params: list[Fraction]) -> list[Fraction]:
    # equal values adjacent, in order of first appearance
    order: list[Fraction] = []
    for a in params:
        if a not in order:
            order.append(a)
    return [a for a in order for b in params if b == a]


# substitutions into the limiting 5F4 identities -------------------------------


@dataclass(frozen=True)
class SubstitutionRecord:
    """Parameters of the limiting 5F4; c is None for the c -> -infinity limit."""

    a: Fraction
    b: Fraction
    c: Optional[Fraction]
    source: str  # "gessel-stanton" or "gasper"

    def limit_product(self) -> GammaProduct:
        if self.source == "gessel-stanton":
            return gessel_stanton_limit(self.a, self.b, self.c)
        return gasper_limit(self.a, self.b)

    def series(self) -> HyperTerm:
        """The 5F4 summand as an unweighted HyperTerm.

        Only the ratio structure is meant to be used; integer denominator
        parameters make ``at(0)`` differ from 1.
        """
        a, b, c = self.a, self.b, self.c
        if self.source == "gessel-stanton":
            num = [a, 1 + a / 3, b, 1 - b]
            den = [Fraction(1), a / 3, (2 + a - b) / 2, (1 + a + b) / 2]
            if c is None:
                z = Fraction(-1, 8)
            else:
                num.append(c)
                den.append(1 + a - 2 * c)
                z = Fraction(1, 4)
        else:
            num = [3 * a, 1 + 3 * a / 4, 3 * b, (1 - 3 * b) / 2, (2 - 3 * b) / 2]
            den = [Fraction(1), 3 * a / 4, 1 + a - b, (1 + 3 * a + 3 * b) / 2, (3 * a + 3 * b) / 2]
            z = Fraction(1, 9)
        return HyperTerm(tuple(num), tuple(den), (0, 1), z)


def substitution_map(params: FamilyParams) -> SubstitutionRecord:
    fam, p, q, r = params.family, params.p, params.q, params.r
    h = HALF
    if fam is Family.T1:
        return SubstitutionRecord(h + 2 * p, h + 2 * q, h + r, "gessel-stanton")
    if fam is Family.T2:
        return SubstitutionRecord(3 * h + 2 * p, 3 * h + 2 * q, h + r, "gessel-stanton")
    if fam is Family.T3:
        return SubstitutionRecord(h + 2 * p, h + 2 * q, None, "gessel-stanton")
    if fam is Family.T4:
        return SubstitutionRecord(3 * h + 2 * p, 3 * h + 2 * q, None, "gessel-stanton")
    base = {Family.T5: Fraction(1, 6), Family.T6: h, Family.T7: Fraction(5, 6)}[fam]
    return SubstitutionRecord(base + p, base + q, None, "gasper")


def _same_multiset(x: list, y: list) -> bool:
    return sorted(x) == sorted(y)


class DerivationCheck(NamedTuple):
    params: FamilyParams
    stated: RecognizedConstant
    derived: RecognizedConstant
    equal: bool


def derivation_check(params: FamilyParams) -> DerivationCheck:
    """Compare the stated constant with the Gamma reduction of the limiting 5F4.

    The canonical term must be a constant multiple t_0 of the 5F4 summand
    (checked on the factored term ratio), so its sum is t_0 times the
    5F4 closed form.
    """
    inst = instantiate(params)
    sub = substitution_map(params)
    series = sub.series()
    ours, theirs = inst.term.ratio_roots(), series.ratio_roots()
    if inst.z != series.z or not (_same_multiset(ours[0], theirs[0]) and _same_multiset(ours[1], theirs[1])):
        raise ValueError(f"{params.label()}: term ratio does not match the substituted 5F4")
    derived = gamma_simplify(sub.limit_product()) * inst.term_at(0)
    return DerivationCheck(params, inst.constant, derived, derived == inst.constant)


# instances ---------------------------------------------------------------------


@dataclass(frozen=True)
class SeriesInstance:
    params: FamilyParams
    term: HyperTerm
    constant: RecognizedConstant
    raw: RawTerm
    scale: Fraction  # raw term = scale * canonical term

    @property
    def z(self) -> Fraction:
        return self.term.z

    def term_at(self, k: int) -> Fraction:
        return self.term.at(k)

    def ratio_at(self, k: int) -> Fraction:
        return self.term.ratio(k)

    def terms(self):
        """Exact terms t_0, t_1, ... from the ratio recurrence."""
        t, k = self.term.at(0), 0
        while True:
            yield t
            t = t * self.term.ratio(k)
            k += 1

    @cached_property
    def rho(self) -> Fraction:
        return (abs(self.z) + 1) / 2

    def ratio_sup(self, n: int) -> Optional[Fraction]:
        """An upper bound on |ratio(k)| over all k >= n, or None if n is below every root.

        Each factor (k+a)/(k+b) is monotone once k+a and k+b are positive, so
        its supremum on [n, inf) is max(1, (n+a)/(n+b)).
        """
        num, den = self.term.ratio_roots()
        if any(n + x <= 0 for x in num + den):
            return None
        bound = abs(self.z)
        for a, b in zip(sorted(num), sorted(den)):
            bound *= max(Fraction(1), (n + a) / (n + b))
        return bound

    @cached_property
    def tail_threshold(self) -> int:
        """Smallest N from which |ratio(k)| <= rho for every k >= N."""
        num, den = self.term.ratio_roots()
        n = max([0] + [math.floor(-x) + 1 for x in num + den])
        while True:
            s = self.ratio_sup(n)
            if s is not None and s <= self.rho:
                return n
            n += 1


def instantiate(params: FamilyParams) -> SeriesInstance:
    params = params.validate()
    raw = raw_term(params)
    term, scale = canonicalize(raw)
    constant = stated_value(params) / scale
    return SeriesInstance(params, term, constant, raw, scale)


# summation ---------------------------------------------------------------------


def _to_ulps(x: Fraction, frac_bits: int) -> int:
    return (2 * (x.numerator << frac_bits) + x.denominator) // (2 * x.denominator)


def partial_sum(inst: SeriesInstance, n: int, frac_bits: int) -> FixedReal:
    """sum_{k<n} t_k; each exact term is rounded once, costing at most half an ulp."""
    if n < 0:
        raise ValueError("n must be >= 0")
    total = 0
    for k, t in zip(range(n), inst.terms()):
        total += _to_ulps(t, frac_bits)
    return FixedReal._with_ulps(total, frac_bits, max(n, 1))


def _tail_factor(inst: SeriesInstance, n: int) -> Fraction:
    """1/(1-s) with s = sup_{k>=n} |ratio(k)| <= rho, valid for n >= N0."""
    return 1 / (1 - inst.ratio_sup(n))


def tail_bound(inst: SeriesInstance, n: int, strict: bool = False) -> Fraction:
    """B with |sum_{k>=n} t_k| <= B.

    From the tail threshold N0 on, B = |t_n| / (1 - s) where s <= rho bounds
    every later term ratio.  Below N0 the exact |t_k| for n <= k < N0 are
    added to the bound at N0, unless ``strict`` asks for
    :class:`ThresholdNotReached` instead.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    n0 = inst.tail_threshold
    if n < n0 and strict:
        raise ThresholdNotReached(f"{inst.params.label()}: N={n} is below the tail threshold {n0}")
    m = max(n, n0)
    head = sum((abs(inst.term_at(k)) for k in range(n, m)), Fraction(0))
    return head + abs(inst.term_at(m)) * _tail_factor(inst, m)


@dataclass(frozen=True)
class SeriesSum:
    value: FixedReal
    terms_used: int


def sum_series(inst: SeriesInstance, digits: int, extra_bits: int = 0) -> SeriesSum:
    """Sum until the tail is below 10^-digits / 8; the tail goes into the error budget."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    target = Fraction(1, 8 * 10**digits)
    n0 = inst.tail_threshold
    exact: list[Fraction] = []
    for k, t in enumerate(inst.terms()):
        # the bound from k includes t_k itself, so t_k is left out of the sum
        if k >= n0 and abs(t) <= target:
            tail = abs(t) * _tail_factor(inst, k)
            if tail <= target:
                break
        exact.append(t)
    n = len(exact)
    P = guard_bits(digits, n) + extra_bits
    total = sum(_to_ulps(t, P) for t in exact)
    err = max(n, 1) + math.ceil(tail * (1 << P))
    return SeriesSum(FixedReal._with_ulps(total, P, err), n)


def sum_to_digits(inst: SeriesInstance, digits: int) -> FixedReal:
    """The series value with |result - C| < 10^-digits."""
    return sum_series(inst, digits).value
