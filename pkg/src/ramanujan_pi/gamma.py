"""Products of Gamma values at rational points and their reduction to rational * sqrt(d) * pi^k."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Mapping, Optional

from .bignum import FixedReal, Rational, pi_reference, sqrt_int
from .errors import IrreducibleResidue, PoleEncountered
from .pochhammer import pochhammer

HALF = Fraction(1, 2)

# 1/sin(pi z) for z in (0, 1/2), as (rational, surd) with surd the sqrt multiplier
_INV_SIN = {
    Fraction(1, 6): (Fraction(2), 1),
    Fraction(1, 4): (Fraction(1), 2),
    Fraction(1, 3): (Fraction(2, 3), 3),
}
_ALLOWED_DENOMINATORS = {1, 2, 3, 4, 6}


@dataclass(frozen=True)
class RecognizedConstant:
    """The number ``rat * sqrt(surd) * pi**pi_power``."""

    rat: Fraction
    surd: int = 1
    pi_power: int = -1

    def __post_init__(self):
        object.__setattr__(self, "rat", Fraction(self.rat))
        if self.surd not in (1, 2, 3):
            raise ValueError(f"surd must be 1, 2 or 3, got {self.surd}")
        if self.pi_power not in (-1, 0, 1):
            raise ValueError(f"pi_power must be -1, 0 or 1, got {self.pi_power}")

    def value(self, frac_bits: int) -> FixedReal:
        work = frac_bits + 32 + self.rat.numerator.bit_length()
        x = FixedReal.from_rational(self.rat, work)
        if self.surd != 1:
            x = x * sqrt_int(self.surd, work)
        if self.pi_power == 1:
            x = x * pi_reference(work)
        elif self.pi_power == -1:
            x = x / pi_reference(work)
        return x.with_frac_bits(frac_bits)

    def to_gamma_product(self) -> "GammaProduct":
        return GammaProduct(
            self.rat,
            pi_half_power=2 * self.pi_power,
            surd2_power=1 if self.surd == 2 else 0,
            surd3_power=1 if self.surd == 3 else 0,
        )

    def __mul__(self, r: Rational) -> "RecognizedConstant":
        return RecognizedConstant(self.rat * r, self.surd, self.pi_power)

    __rmul__ = __mul__

    def __truediv__(self, r: Rational) -> "RecognizedConstant":
        return RecognizedConstant(self.rat / r, self.surd, self.pi_power)

    def __str__(self) -> str:
        num, den = self.rat.numerator, self.rat.denominator
        sign = "-" if num < 0 else ""
        num = abs(num)
        tail = ("" if self.surd == 1 else f"√{self.surd}") + ("π" if self.pi_power == 1 else "")
        top = f"{num}{tail}" if (num != 1 or not tail) else tail
        bottom = "π" if self.pi_power == -1 else ""
        if den == 1 and not bottom:
            return f"{sign}{top}"
        if den == 1:
            return f"{sign}{top}/{bottom}"
        return f"{sign}{top}/({den}{bottom})" if bottom else f"{sign}{top}/{den}"


def _merge(factors) -> tuple[tuple[Fraction, int], ...]:
    acc: Counter = Counter()
    items = factors.items() if isinstance(factors, Mapping) else factors
    for arg, exp in items:
        acc[Fraction(arg)] += exp
    return tuple(sorted((a, e) for a, e in acc.items() if e != 0))


@dataclass(frozen=True)
class GammaProduct:
    """coeff * prod Gamma(arg)**exp * sqrt(pi)**pi_half_power * sqrt(2)**surd2_power * sqrt(3)**surd3_power."""

    coeff: Fraction
    factors: tuple[tuple[Fraction, int], ...] = field(default=())
    pi_half_power: int = 0
    surd2_power: int = 0
    surd3_power: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        object.__setattr__(self, "factors", _merge(self.factors))

    @classmethod
    def ratio(cls, numerator_args, denominator_args, coeff: Rational = 1) -> "GammaProduct":
        exps: Counter = Counter()
        for a in numerator_args:
            exps[Fraction(a)] += 1
        for a in denominator_args:
            exps[Fraction(a)] -= 1
        return cls(Fraction(coeff), tuple(exps.items()))


def _shift_into_unit(gp_coeff: Fraction, factors) -> tuple[Fraction, Counter]:
    coeff = gp_coeff
    out: Counter = Counter()
    for x, e in factors:
        if x.denominator == 1:
            if x <= 0:
                raise PoleEncountered(f"Gamma({x}) is a pole")
            base = Fraction(1)
        else:
            base = x - floor(x)
        n = int(x - base)
        # Gamma(x) = Gamma(base) * (base)_n
        coeff *= pochhammer(base, n) ** e
        out[base] += e
    return coeff, out


def gamma_simplify(gp: GammaProduct) -> RecognizedConstant:
    """Reduce a Gamma product to rational * sqrt(surd) * pi^k.

    Rules, in order: shift every argument into (0, 1]; drop Gamma(1);
    Gamma(1/2) = sqrt(pi); reflection Gamma(z)Gamma(1-z) = pi/sin(pi z) for
    z in {1/6, 1/4, 1/3}; duplication for a z, z+1/2 pair when it leaves a
    representable power of two.  Any Gamma factor left over is an error.
    """
    coeff, exps = _shift_into_unit(gp.coeff, gp.factors)
    pi_half, s2, s3 = gp.pi_half_power, gp.surd2_power, gp.surd3_power

    while True:
        exps.pop(Fraction(1), None)
        pi_half += exps.pop(HALF, 0)
        for z in exps:
            if z.denominator not in _ALLOWED_DENOMINATORS:
                raise IrreducibleResidue(f"Gamma({z}): denominator {z.denominator} is outside the supported set")

        for z in sorted(exps):
            if z >= HALF or exps[z] == 0:
                continue
            e1, e2 = exps[z], exps.get(1 - z, 0)
            if e2 == 0 or (e1 > 0) != (e2 > 0):
                continue
            m = min(abs(e1), abs(e2)) * (1 if e1 > 0 else -1)
            r, surd = _INV_SIN[z]
            coeff *= r**m
            pi_half += 2 * m
            if surd == 2:
                s2 += m
            elif surd == 3:
                s3 += m
            exps[z] -= m
            exps[1 - z] -= m
        exps = Counter({z: e for z, e in exps.items() if e != 0})

        # duplication: Gamma(z)Gamma(z+1/2) = 2^(1-2z) sqrt(pi) Gamma(2z); only 2^(1-2z) in 2^(Z/2) is representable
        changed = False
        for z in sorted(exps):
            w = z + HALF
            if z >= HALF or w not in exps or (4 * z).denominator != 1:
                continue
            e1, e2 = exps[z], exps[w]
            if (e1 > 0) != (e2 > 0):
                continue
            m = min(abs(e1), abs(e2)) * (1 if e1 > 0 else -1)
            half_log2 = (1 - 2 * z) * 2 * m  # exponent of sqrt(2)
            s2 += int(half_log2)
            pi_half += m
            exps[z] -= m
            exps[w] -= m
            c2, sub = _shift_into_unit(Fraction(1), [(2 * z, m)])
            coeff *= c2
            exps.update(sub)
            changed = True
            break
        exps = Counter({z: e for z, e in exps.items() if e != 0})
        if not changed:
            break

    if exps:
        residue = " ".join(f"Gamma({z})^{e}" for z, e in sorted(exps.items()))
        raise IrreducibleResidue(f"irreducible Gamma factors remain: {residue}")
    if pi_half % 2:
        raise IrreducibleResidue(f"odd power of sqrt(pi): {pi_half}")
    pi_power = pi_half // 2
    if pi_power not in (-1, 0, 1):
        raise IrreducibleResidue(f"pi power {pi_power} outside [-1, 1]")
    coeff *= Fraction(2) ** (s2 // 2) * Fraction(3) ** (s3 // 2)
    s2, s3 = s2 % 2, s3 % 2
    if s2 and s3:
        raise IrreducibleResidue("sqrt(6) is not a supported surd")
    surd = 2 if s2 else 3 if s3 else 1
    return RecognizedConstant(coeff, surd, pi_power)


def gessel_stanton_limit(a: Rational, b: Rational, c: Optional[Rational] = None) -> GammaProduct:
    """Closed form of the very-well-poised 5F4 at z = 1/4 as a Gamma ratio.

    ``c=None`` gives the c -> -infinity limit, where the four c-dependent
    Gamma factors tend to 1 and the argument becomes -1/8.
    """
    a, b = Fraction(a), Fraction(b)
    num = [(1 + a + b) / 2, 1 + (a - b) / 2]
    den = [(1 + a) / 2, 1 + a / 2]
    if c is not None:
        c = Fraction(c)
        num += [(1 + a) / 2 - c, 1 + a / 2 - c]
        den += [(1 + a + b) / 2 - c, 1 + (a - b) / 2 - c]
    return GammaProduct.ratio(num, den)


def gasper_limit(a: Rational, b: Rational) -> GammaProduct:
    """Closed form of the 5F4 at z = 1/9 obtained from the cubic terminating identity."""
    a, b = Fraction(a), Fraction(b)
    third = Fraction(1, 3)
    num = [1 + a - b, a + b, a + b + third, a + b + 2 * third]
    den = [a + 2 * b, a + third, a + 2 * third, a + 1]
    return GammaProduct.ratio(num, den)


def evaluate_half_integer_product(gp: GammaProduct, frac_bits: int) -> FixedReal:
    """Numeric value of a product whose Gamma arguments are all in (1/2)Z.

    Uses only the shift rule, Gamma(1) = 1 and Gamma(1/2) = sqrt(pi); it is
    deliberately independent of :func:`gamma_simplify`.
    """
    work = frac_bits + 64
    x = FixedReal.from_rational(gp.coeff, work)
    pi_half = gp.pi_half_power
    for arg, e in gp.factors:
        if (2 * arg).denominator != 1:
            raise ValueError(f"Gamma({arg}) is not at a half-integer")
        if arg.denominator == 1:
            if arg <= 0:
                raise PoleEncountered(f"Gamma({arg}) is a pole")
            x = x * pochhammer(1, int(arg) - 1) ** e
        else:
            n = int(arg - HALF)
            x = x * pochhammer(HALF, n) ** e
            pi_half += e
    if pi_half:
        root_pi = pi_reference(work).sqrt()
        f = root_pi if pi_half > 0 else root_pi.reciprocal()
        for _ in range(abs(pi_half)):
            x = x * f
    for d, k in ((2, gp.surd2_power), (3, gp.surd3_power)):
        if k:
            s = sqrt_int(d, work)
            f = s if k > 0 else s.reciprocal()
            for _ in range(abs(k)):
                x = x * f
    return x.with_frac_bits(frac_bits)
