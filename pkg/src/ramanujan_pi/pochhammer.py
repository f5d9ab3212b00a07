"""Shifted factorials over the rationals, including negative index."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .bignum import Rational
from .errors import PoleEncountered


def pochhammer(x: Rational, n: int) -> Fraction:
    """(x)_n = Gamma(x+n)/Gamma(x).

    For n >= 0 this is x(x+1)...(x+n-1).  For n < 0 it is the reciprocal of
    (x-1)(x-2)...(x-|n|), which is what the Gamma ratio gives when the index
    runs below zero.
    """
    x = Fraction(x)
    if n >= 0:
        num, den = 1, 1
        for j in range(n):
            t = x + j
            num *= t.numerator
            den *= t.denominator
        return Fraction(num, den)
    num, den = 1, 1
    for j in range(1, -n + 1):
        t = x - j
        if t == 0:
            raise PoleEncountered(f"({x})_{n}: factor x-{j} vanishes")
        num *= t.numerator
        den *= t.denominator
    return Fraction(den, num)


def shifted_factorial(m: int) -> int:
    """m! for m >= 0; raises for negative m (a pole of 1/Gamma is not used here)."""
    if m < 0:
        raise PoleEncountered(f"({m})! is a pole")
    return factorial(m)
