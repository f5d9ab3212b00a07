"""Plain-text, LaTeX and JSON renderings of a family instance."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby

from .families import FamilyParams, HyperTerm, instantiate
from .gamma import RecognizedConstant

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _is_factorial(b: Fraction) -> bool:
    return b.denominator == 1 and b > 0


def _runs(params):
    return [(v, len(list(g))) for v, g in groupby(params)]


def _weight(term: HyperTerm) -> str:
    alpha, beta = term.weight
    lead = "k" if alpha == 1 else f"{alpha}k"
    if beta == 0:
        return lead
    return f"{lead}{'+' if beta > 0 else '-'}{abs(beta)}"


def _base(z: Fraction) -> str:
    if z.numerator == 1:
        return f"{z.denominator}^k"
    if z.numerator == -1:
        return f"(-{z.denominator})^k"
    return f"({1 / z})^k"


def _fact_shift(b: Fraction) -> str:
    m = int(b) - 1
    return "k!" if m == 0 else f"(k+{m})!"


# plain text ------------------------------------------------------------------


def _sup(n: int) -> str:
    return "" if n == 1 else str(n).translate(_SUPERSCRIPT)


def _text_poch(x: Fraction, n: int) -> str:
    return f"({x})_k{_sup(n)}"


def _text_den(b: Fraction, n: int) -> str:
    if _is_factorial(b):
        f = _fact_shift(b)
        if n == 1:
            return f
        return f"({f}){_sup(n)}"
    return _text_poch(b, n)


def render_text(params: FamilyParams) -> str:
    inst = instantiate(params)
    t = inst.term
    num = "".join(_text_poch(a, n) for a, n in _runs(t.numerator)) or "1"
    den_parts = [_text_den(b, n) for b, n in _runs(t.denominator)]
    den = "".join(den_parts)
    if len(den_parts) > 1:
        den = f"({den})"
    body = f"{num} / {den} · " if den else f"{num} · "
    return f"{inst.constant} = Σ_{{k≥0}} {body}({_weight(t)})/{_base(t.z)}"


# LaTeX -----------------------------------------------------------------------


def _latex_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"


def _latex_pow(n: int) -> str:
    return "" if n == 1 else f"^{n}"


def _latex_poch(x: Fraction, n: int) -> str:
    return f"({_latex_rational(x)})_k{_latex_pow(n)}"


def _latex_den(b: Fraction, n: int) -> str:
    if _is_factorial(b):
        f = _fact_shift(b)
        return f if n == 1 else f"({f})^{n}"
    return _latex_poch(b, n)


def latex_constant(c: RecognizedConstant) -> str:
    num, den = c.rat.numerator, c.rat.denominator
    sign = "-" if num < 0 else ""
    num = abs(num)
    root = "" if c.surd == 1 else f"\\sqrt{{{c.surd}}}"
    top = root if (num == 1 and root) else f"{num}{root}"
    if c.pi_power == 1:
        top += "\\pi"
    bottom = ("" if den == 1 else str(den)) + ("\\pi" if c.pi_power == -1 else "")
    if not bottom:
        return f"{sign}{top}"
    return f"{sign}\\frac{{{top}}}{{{bottom}}}"


def render_latex(params: FamilyParams) -> str:
    inst = instantiate(params)
    t = inst.term
    num = "".join(_latex_poch(a, n) for a, n in _runs(t.numerator)) or "1"
    den = "".join(_latex_den(b, n) for b, n in _runs(t.denominator)) or "1"
    base = _base(t.z)
    return (
        f"{latex_constant(inst.constant)}=\\sum_{{k=0}}^{{\\infty}}"
        f"\\frac{{{num}}}{{{den}}}\\frac{{{_weight(t)}}}{{{base}}}"
    )


# structured ------------------------------------------------------------------


@dataclass(frozen=True)
class FormulaRendering:
    params: FamilyParams
    latex: str
    plaintext: str
    constant: RecognizedConstant

    def to_dict(self) -> dict:
        d = {
            "family": self.params.family.value,
            "p": self.params.p,
            "q": self.params.q,
            "latex": self.latex,
            "plaintext": self.plaintext,
            "constant": {
                "rat_num": self.constant.rat.numerator,
                "rat_den": self.constant.rat.denominator,
                "surd": self.constant.surd,
                "pi_power": self.constant.pi_power,
            },
        }
        if self.params.family.has_r:
            d["r"] = self.params.r
        return d


def render(params: FamilyParams) -> FormulaRendering:
    inst = instantiate(params)
    return FormulaRendering(params, render_latex(params), render_text(params), inst.constant)
