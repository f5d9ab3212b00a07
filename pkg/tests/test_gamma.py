from fractions import Fraction as F

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ramanujan_pi.errors import IrreducibleResidue, PoleEncountered
from ramanujan_pi.families import Family, FamilyParams, instantiate
from ramanujan_pi.gamma import (
    GammaProduct,
    RecognizedConstant,
    evaluate_half_integer_product,
    gamma_simplify,
    gasper_limit,
    gessel_stanton_limit,
)
from ramanujan_pi.pochhammer import pochhammer

small_rationals = st.builds(F, st.integers(-40, 40), st.integers(1, 12))
indices = st.integers(-8, 8)


def _pole_free(x, n):
    # (x)_n with negative n divides by x-1 ... x-|n|
    return n >= 0 or all(x - j != 0 for j in range(1, -n + 1))


class TestPochhammer:
    def test_examples(self):
        assert pochhammer(F(1, 2), 3) == F(15, 8)
        assert pochhammer(F(7, 3), 0) == 1
        assert pochhammer(F(1, 2), -1) == -2

    def test_pole(self):
        with pytest.raises(PoleEncountered):
            pochhammer(F(2), -3)

    @given(small_rationals, indices, indices)
    def test_composition(self, x, m, n):
        assume(_pole_free(x, m) and _pole_free(x + m, n) and _pole_free(x, m + n))
        assert pochhammer(x, m + n) == pochhammer(x, m) * pochhammer(x + m, n)

    @given(small_rationals, indices)
    def test_inverse(self, x, n):
        assume(_pole_free(x, n) and _pole_free(x + n, -n))
        assume(pochhammer(x, n) != 0)
        assert pochhammer(x, n) * pochhammer(x + n, -n) == 1


class TestSimplify:
    def test_gamma_half_squared(self):
        assert gamma_simplify(GammaProduct.ratio([F(1, 2), F(1, 2)], [])) == RecognizedConstant(1, 1, 1)

    def test_thirds(self):
        # 2 pi / sqrt3 = (2/3) sqrt3 pi
        assert gamma_simplify(GammaProduct.ratio([F(1, 3), F(2, 3)], [])) == RecognizedConstant(F(2, 3), 3, 1)

    def test_sixths_with_shift(self):
        assert gamma_simplify(GammaProduct.ratio([F(5, 6), F(7, 6)], [])) == RecognizedConstant(F(1, 3), 1, 1)

    def test_quarters(self):
        # Gamma(1/4) Gamma(3/4) = pi sqrt2
        assert gamma_simplify(GammaProduct.ratio([F(1, 4), F(3, 4)], [])) == RecognizedConstant(1, 2, 1)

    def test_integer_args(self):
        assert gamma_simplify(GammaProduct.ratio([F(5)], [F(3)])) == RecognizedConstant(12, 1, 0)

    def test_pole_argument(self):
        with pytest.raises(PoleEncountered):
            gamma_simplify(GammaProduct.ratio([F(-2)], []))

    def test_unpaired_residue(self):
        with pytest.raises(IrreducibleResidue):
            gamma_simplify(GammaProduct.ratio([F(1, 3)], []))

    def test_bad_denominator(self):
        with pytest.raises(IrreducibleResidue):
            gamma_simplify(GammaProduct.ratio([F(1, 5), F(4, 5)], []))

    def test_opposite_exponents_do_not_reflect(self):
        with pytest.raises(IrreducibleResidue):
            gamma_simplify(GammaProduct.ratio([F(1, 4)], [F(3, 4)]))

    @given(st.lists(st.integers(-3, 8), min_size=1, max_size=6), st.lists(st.integers(-3, 8), max_size=6))
    def test_value_preserving_half_integers(self, up, down):
        num = [F(2 * u + 1, 2) for u in up]
        den = [F(2 * d + 1, 2) for d in down]
        gp = GammaProduct.ratio(num, den, coeff=F(3, 7))
        net = len(num) - len(den)
        assume(net % 2 == 0 and abs(net) <= 2)
        got = gamma_simplify(gp)
        oracle = evaluate_half_integer_product(gp, 200)
        assert got.value(200).difference_bound(oracle) < F(1, 2**190)

    @pytest.mark.parametrize(
        "c",
        [RecognizedConstant(F(256, 3)), RecognizedConstant(F(-2), 2), RecognizedConstant(F(1024, 405), 3), RecognizedConstant(5, 1, 0)],
    )
    def test_idempotent(self, c):
        assert gamma_simplify(c.to_gamma_product()) == c


class TestLimits:
    def test_ramanujan_quartic_base(self):
        assert gamma_simplify(gessel_stanton_limit(F(1, 2), F(1, 2), F(1, 2))) == RecognizedConstant(4)

    @pytest.mark.parametrize("a,b,c", [(F(1, 2), F(1, 3), F(1, 6)), (F(5, 2), F(1, 2), F(3, 2)), (F(1, 2), F(1, 6), None), (F(1, 2), F(1, 3), None)])
    def test_b_reflection_symmetry(self, a, b, c):
        x = gessel_stanton_limit(a, b, c)
        y = gessel_stanton_limit(a, 1 - b, c)
        try:
            vx = gamma_simplify(x)
        except IrreducibleResidue:
            with pytest.raises(IrreducibleResidue):
                gamma_simplify(y)
            return
        assert vx == gamma_simplify(y)

    def test_second_family_base(self):
        # sum of T2(0,0,0) equals t_0 times the limit; t_0 is exact
        inst = instantiate(FamilyParams(Family.T2, 0, 0, 0))
        assert gamma_simplify(gessel_stanton_limit(F(3, 2), F(3, 2), F(1, 2))) * inst.term_at(0) == inst.constant

    def test_cubic_base(self):
        # the 5F4 at a=b=1/6 is exactly the T5(0,0) canonical series, t_0 = 1
        assert gamma_simplify(gasper_limit(F(1, 6), F(1, 6))) == RecognizedConstant(2, 3)

    @pytest.mark.parametrize("fam,a", [(Family.T6, F(1, 2)), (Family.T7, F(5, 6))])
    def test_cubic_other_bases(self, fam, a):
        inst = instantiate(FamilyParams(fam, 0, 0))
        assert gamma_simplify(gasper_limit(a, a)) * inst.term_at(0) == inst.constant

    def test_str(self):
        assert str(RecognizedConstant(F(256, 3))) == "256/(3π)"
        assert str(RecognizedConstant(F(2), 2)) == "2√2/π"
        assert str(RecognizedConstant(F(1), 1, 1)) == "π"
