"""Exact rationals, binary fixed-point reals with error budgets, and reference constants.

Integers are Python ints and rationals are :class:`fractions.Fraction`; both
are already canonical (no leading zero limbs, gcd-reduced, positive
denominator).  :class:`FixedReal` is the carrier for everything irrational.
"""

from __future__ import annotations

import math
from functools import lru_cache
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DivisionByZero, NegativeInput

Rational = Union[int, Fraction]

LOG2_10 = math.log2(10)


def rational_arithmetic(x: Rational, y: Rational, op: str):
    """Apply ``op`` in {'add', 'sub', 'mul', 'div', 'cmp'} to two rationals.

    ``cmp`` returns -1, 0 or 1.  Everything else returns a reduced Fraction.
    """
    x, y = Fraction(x), Fraction(y)
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y == 0:
            raise DivisionByZero(f"{x} / 0")
        return x / y
    if op == "cmp":
        return (x > y) - (x < y)
    raise ValueError(f"unknown op {op!r}")


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _round_div(a: int, b: int) -> int:
    """Round a/b to nearest, ties upward (b > 0)."""
    return (2 * a + b) // (2 * b)


def _bits_for(err_ulps: int) -> int:
    # smallest e >= 0 with 2**e >= err_ulps
    return max(0, (err_ulps - 1).bit_length()) if err_ulps > 0 else 0


def guard_bits(digits: int, terms: int = 1) -> int:
    """Working fraction bits for a request of ``digits`` decimals over ``terms`` summands."""
    return math.ceil(digits * LOG2_10) + 64 + math.ceil(10 * math.log2(max(terms, 1)))


@dataclass(frozen=True)
class FixedReal:
    """A real number ``mantissa * 2**-frac_bits`` known to within ``2**(err_bits - frac_bits)``."""

    mantissa: int
    frac_bits: int
    err_bits: int = 0

    def __post_init__(self):
        if self.frac_bits < 0:
            raise ValueError("frac_bits must be >= 0")
        if self.err_bits < 0:
            raise ValueError("err_bits must be >= 0")

    # construction ---------------------------------------------------------

    @classmethod
    def _with_ulps(cls, mantissa: int, frac_bits: int, err_ulps: int) -> "FixedReal":
        return cls(mantissa, frac_bits, _bits_for(err_ulps))

    @classmethod
    def from_rational(cls, r: Rational, frac_bits: int) -> "FixedReal":
        if frac_bits < 0:
            raise ValueError("frac_bits must be >= 0")
        r = Fraction(r)
        m = _round_div(r.numerator << frac_bits, r.denominator)
        return cls(m, frac_bits, 0)

    # inspection -----------------------------------------------------------

    @property
    def err_ulps(self) -> int:
        return 1 << self.err_bits

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 1 << self.frac_bits)

    def error_bound(self) -> Fraction:
        return Fraction(self.err_ulps, 1 << self.frac_bits)

    def interval(self) -> tuple[Fraction, Fraction]:
        v, e = self.to_fraction(), self.error_bound()
        return v - e, v + e

    def __float__(self) -> float:
        return self.mantissa / (1 << self.frac_bits) if self.frac_bits < 1000 else float(self.to_fraction())

    def __repr__(self) -> str:
        return f"FixedReal({self.to_decimal(min(self.certified_digits(), 30))}, frac_bits={self.frac_bits}, err_bits={self.err_bits})"

    # precision changes ----------------------------------------------------

    def with_frac_bits(self, frac_bits: int) -> "FixedReal":
        shift = frac_bits - self.frac_bits
        if shift >= 0:
            return FixedReal(self.mantissa << shift, frac_bits, self.err_bits + shift)
        d = 1 << -shift
        m = _round_div(self.mantissa, d)
        return FixedReal._with_ulps(m, frac_bits, _ceil_div(self.err_ulps, d) + 1)

    def _coerce(self, other) -> "FixedReal":
        if isinstance(other, FixedReal):
            if other.frac_bits != self.frac_bits:
                return other.with_frac_bits(self.frac_bits)
            return other
        if isinstance(other, (int, Fraction)):
            return FixedReal.from_rational(other, self.frac_bits)
        return NotImplemented

    # arithmetic -----------------------------------------------------------

    def __neg__(self) -> "FixedReal":
        return FixedReal(-self.mantissa, self.frac_bits, self.err_bits)

    def __add__(self, other) -> "FixedReal":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FixedReal._with_ulps(self.mantissa + o.mantissa, self.frac_bits, self.err_ulps + o.err_ulps)

    __radd__ = __add__

    def __sub__(self, other) -> "FixedReal":
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other) -> "FixedReal":
        return (-self) + other

    def __mul__(self, other) -> "FixedReal":
        P = self.frac_bits
        if isinstance(other, (int, Fraction)):
            r = Fraction(other)
            m = _round_div(self.mantissa * r.numerator, r.denominator)
            err = _ceil_div(self.err_ulps * abs(r.numerator), r.denominator) + 1
            return FixedReal._with_ulps(m, P, err)
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        e1, e2 = self.err_ulps, o.err_ulps
        m = _round_div(self.mantissa * o.mantissa, 1 << P)
        err = _ceil_div(abs(self.mantissa) * e2 + abs(o.mantissa) * e1 + e1 * e2, 1 << P) + 1
        return FixedReal._with_ulps(m, P, err)

    __rmul__ = __mul__

    def reciprocal(self) -> "FixedReal":
        m, e, P = abs(self.mantissa), self.err_ulps, self.frac_bits
        if m <= e:
            raise DivisionByZero("reciprocal of a value whose interval contains zero")
        r = _round_div(1 << (2 * P), m)
        err = _ceil_div(e << (2 * P), m * (m - e)) + 1
        return FixedReal._with_ulps(r if self.mantissa > 0 else -r, P, err)

    def __truediv__(self, other) -> "FixedReal":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZero("division by exact zero")
            return self * (1 / Fraction(other))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.reciprocal()

    def __rtruediv__(self, other) -> "FixedReal":
        return self.reciprocal() * other

    def sqrt(self) -> "FixedReal":
        m, e, P = self.mantissa, self.err_ulps, self.frac_bits
        if m + e < 0:
            raise NegativeInput("square root of a negative value")
        if m <= e:
            # interval touches zero: only a crude bound is available
            hi = max(m + e, 0)
            s = math.isqrt(hi << P)
            return FixedReal._with_ulps(s // 2, P, s // 2 + 2)
        s = math.isqrt(m << P)
        err = math.isqrt(_ceil_div((e * e) << P, m - e)) + 2
        return FixedReal._with_ulps(s, P, err)

    # comparison -----------------------------------------------------------

    def difference_bound(self, other) -> Fraction:
        """Certified upper bound on |self - other| (true values)."""
        o = other if isinstance(other, FixedReal) else FixedReal.from_rational(other, self.frac_bits)
        if o.frac_bits != self.frac_bits:
            P = max(o.frac_bits, self.frac_bits)
            return self.with_frac_bits(P).difference_bound(o.with_frac_bits(P))
        return Fraction(abs(self.mantissa - o.mantissa) + self.err_ulps + o.err_ulps, 1 << self.frac_bits)

    # decimal output -------------------------------------------------------

    def _round_decimal(self, mantissa: int, digits: int) -> int:
        return (2 * mantissa * 10**digits + (1 << self.frac_bits)) >> (self.frac_bits + 1)

    def certified_digits(self) -> int:
        """Largest d such that every point of the error interval rounds to the same d-decimal value."""
        lo, hi = self.mantissa - self.err_ulps, self.mantissa + self.err_ulps
        d = max(0, math.floor((self.frac_bits - self.err_bits - 1) / LOG2_10))
        while d > 0 and self._round_decimal(lo, d) != self._round_decimal(hi, d):
            d -= 1
        if self._round_decimal(lo, d) != self._round_decimal(hi, d):
            return -1
        return d

    def to_decimal(self, digits: int | None = None) -> str:
        """Round-to-nearest decimal string; never shows more than the certified digits."""
        cert = self.certified_digits()
        d = cert if digits is None else min(digits, cert)
        d = max(d, 0)
        R = self._round_decimal(self.mantissa, d)
        sign = "-" if R < 0 else ""
        R = abs(R)
        ip, fp = divmod(R, 10**d)
        return f"{sign}{ip}.{fp:0{d}d}" if d else f"{sign}{ip}"

    def format_certified(self, digits: int | None = None) -> str:
        cert = self.certified_digits()
        d = cert if digits is None else min(digits, cert)
        return f"{self.to_decimal(d)} | {d} digits certified"


def sqrt_int(d: int, frac_bits: int) -> FixedReal:
    """sqrt(d) to ``frac_bits`` bits, truncated; exact when d is a perfect square."""
    if d < 0:
        raise NegativeInput(f"sqrt of negative integer {d}")
    if frac_bits < 0:
        raise ValueError("frac_bits must be >= 0")
    return FixedReal(math.isqrt(d << (2 * frac_bits)), frac_bits, 0)


def arctan_recip(n: int, frac_bits: int) -> tuple[int, int]:
    """arctan(1/n) * 2**frac_bits as (value, error in ulps), for integer n >= 2.

    Alternating Taylor series; each power is an exact floor, each term adds
    under one ulp of truncation, and the tail is bounded by the first omitted
    term.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    n2 = n * n
    power = (1 << frac_bits) // n
    total, j, sign = 0, 0, 1
    while power:
        total += sign * (power // (2 * j + 1))
        power //= n2
        j += 1
        sign = -sign
    # j truncations of < 1 ulp each, plus the omitted tail (< 1 ulp once power hit 0)
    return total, j + 1


def machin_like(formula: Iterable[tuple[int, int]], frac_bits: int) -> FixedReal:
    """Evaluate sum(coef * arctan(1/n)) for ``formula`` = [(coef, n), ...]."""
    formula = list(formula)
    work = frac_bits + 16 + 2 * len(formula) + max(abs(c) for c, _ in formula).bit_length()
    value, err = 0, 0
    for coef, n in formula:
        v, e = arctan_recip(n, work)
        value += coef * v
        err += abs(coef) * e
    return FixedReal._with_ulps(value, work, err).with_frac_bits(frac_bits)


MACHIN = ((16, 5), (-4, 239))
EULER_ARCTAN = ((4, 2), (4, 3))


@lru_cache(maxsize=64)
def pi_reference(frac_bits: int) -> FixedReal:
    """pi via Machin's formula 16*atan(1/5) - 4*atan(1/239)."""
    if frac_bits < 8:
        raise ValueError("frac_bits must be >= 8")
    return machin_like(MACHIN, frac_bits)
