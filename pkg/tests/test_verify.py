from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import worked_examples
from ramanujan_pi.bignum import FixedReal
from ramanujan_pi.errors import ConstraintViolation, NoMatch
from ramanujan_pi.families import Family, FamilyParams, instantiate, sum_to_digits
from ramanujan_pi.gamma import RecognizedConstant
from ramanujan_pi.verify import (
    SkipRecord,
    VerificationReport,
    continued_fraction_convergents,
    floor_log10,
    pi_from_instance,
    recognize_constant,
    scan_grid,
    verify_instance,
)


def test_floor_log10():
    assert floor_log10(F(1)) == 0
    assert floor_log10(F(999, 1000)) == -1
    assert floor_log10(F(1, 1000)) == -3
    assert floor_log10(F(10**40 + 1)) == 40
    with pytest.raises(ValueError):
        floor_log10(F(0))


def test_convergents():
    assert list(continued_fraction_convergents(F(355, 113)))[-1] == F(355, 113)
    assert list(continued_fraction_convergents(F(415, 93))) == [4, F(9, 2), F(58, 13), F(415, 93)]


@pytest.mark.parametrize(
    "params,const",
    [
        (FamilyParams(Family.T1, 0, 0, 0), RecognizedConstant(4)),
        (FamilyParams(Family.T5, 1, 1), RecognizedConstant(F(1024, 405), 3)),
        (FamilyParams(Family.T4, 1, 1), RecognizedConstant(F(128, 15), 2)),
    ],
)
def test_verify_examples(params, const):
    rep = verify_instance(params, 30)
    assert rep.matched
    assert rep.constant == const
    assert rep.residual_exponent <= -30


def test_verify_rejects_invalid():
    with pytest.raises(ConstraintViolation):
        verify_instance(FamilyParams(Family.T6, 0, 1), 30)


def _sum(params, digits):
    return sum_to_digits(instantiate(params), digits)


class TestRecognize:
    def test_four_over_pi(self):
        assert recognize_constant(_sum(FamilyParams(Family.T1, 0, 0, 0), 45), 45) == RecognizedConstant(4)

    def test_surd_two(self):
        assert recognize_constant(_sum(FamilyParams(Family.T3, 0, 0), 45), 45) == RecognizedConstant(2, 2)

    def test_half_rejected(self):
        with pytest.raises(NoMatch):
            recognize_constant(FixedReal.from_rational(F(1, 2), 200), 40)

    def test_needs_40_digits(self):
        with pytest.raises(ValueError):
            recognize_constant(FixedReal.from_rational(F(1, 2), 200), 30)

    def test_needs_certified_input(self):
        with pytest.raises(ValueError):
            recognize_constant(FixedReal.from_rational(F(1, 2), 60), 40)

    @pytest.mark.parametrize("params,_", worked_examples())
    def test_round_trip_60(self, params, _):
        inst = instantiate(params)
        assert recognize_constant(sum_to_digits(inst, 60), 60) == inst.constant

    @pytest.mark.parametrize("params", [FamilyParams(Family.T5, 2, 2), FamilyParams(Family.T7, 1, 1), FamilyParams(Family.T2, 1, 1, 3)])
    def test_perturbation(self, params):
        digits = 40
        inst = instantiate(params)
        s = sum_to_digits(inst, digits + 10)
        exact = s.to_fraction()
        P = s.frac_bits
        small = FixedReal.from_rational(exact * (1 + F(1, 10 ** (digits - 10))), P)
        assert recognize_constant(small, digits) == inst.constant
        large = FixedReal.from_rational(exact * (1 + F(1, 10**10)), P)
        with pytest.raises(NoMatch):
            recognize_constant(large, digits)

    def test_random_reals_rejected(self):
        import random

        rng = random.Random(5)
        for _ in range(20):
            x = F(rng.getrandbits(200), 1 << 199)
            with pytest.raises(NoMatch):
                recognize_constant(FixedReal.from_rational(x, 240), 40)


class TestScan:
    def test_origin(self):
        out = scan_grid(0, 0, 0, 30)
        labels = {e.params.label(): e for e in out}
        assert labels["T1(0,0,0)"].matched
        assert labels["T5(0,0)"].matched
        assert all(isinstance(e, VerificationReport) and e.matched for e in out)
        assert len(out) == 7

    def test_skips_and_order(self):
        out = scan_grid(0, 1, 0, 20)
        skipped = [e.params.label() for e in out if isinstance(e, SkipRecord)]
        assert "T1(0,1,0)" in skipped and "T5(0,-1)" in skipped
        assert "T2(0,-1,0)" not in skipped
        assert all("min{" in e.reason for e in out if isinstance(e, SkipRecord))
        assert [e.params for e in out] == sorted(e.params for e in out)

    def test_parallel_matches_serial(self):
        assert scan_grid(1, 1, 1, 20, jobs=2) == scan_grid(1, 1, 1, 20)

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            scan_grid(-1, 0, 0, 20)

    def test_contains_worked_examples(self):
        out = {e.params: e for e in scan_grid(2, 2, 4, 40)}
        for params, _ in worked_examples():
            assert out[params].matched


@settings(max_examples=15, deadline=None)
@given(st.sampled_from(list(Family)), st.integers(0, 2), st.integers(0, 2), st.integers(5, 40), st.integers(1, 40))
def test_monotone_in_digits(fam, p, r, d, extra):
    params = FamilyParams(fam, p, -p if fam.shifted_constraint is False else -p - 1, r if fam.has_r else None)
    lo, hi = verify_instance(params, d), verify_instance(params, d + extra)
    assert lo.matched and hi.matched


def test_pi_from_instance():
    res = pi_from_instance(FamilyParams(Family.T5, 0, 0), 60)
    assert res.value.to_decimal(60).startswith("3.14159265358979323846264338327950288419716939937510582097494")
    assert res.value.certified_digits() >= 60
    assert res.terms_used < 80
