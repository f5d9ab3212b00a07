import random
from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ramanujan_pi.errors import PoleInSummand
from ramanujan_pi.hypergeom import (
    TerminatingSeries,
    gasper_check,
    gasper_rhs_params,
    gasper_series,
    gessel_stanton_check,
    gessel_stanton_rhs_params,
    gessel_stanton_series,
    pfq_terminating,
    run_identity_trials,
)
from ramanujan_pi.pochhammer import pochhammer


def direct_sum(series):
    """O(n^2) oracle: every term from its own Pochhammer products."""
    total = F(0)
    for k in range(series.n + 1):
        t = series.argument**k / factorial(k)
        for a in series.numerator:
            t *= pochhammer(a, k)
        for b in series.denominator:
            t /= pochhammer(b, k)
        total += t
    return total


def product_side(num, den, n):
    v = F(1)
    for x in num:
        v *= pochhammer(x, n)
    for x in den:
        v /= pochhammer(x, n)
    return v


def test_n_zero():
    assert pfq_terminating(TerminatingSeries((F(0), F(3)), (F(5),), F(2), 0)) == 1


def test_binomial():
    assert pfq_terminating(TerminatingSeries((F(-2), F(1)), (F(1),), F(1), 2)) == 0


def test_requires_terminating_parameter():
    with pytest.raises(ValueError):
        TerminatingSeries((F(1),), (F(2),), F(1), 3)


def test_pole_in_summand():
    with pytest.raises(PoleInSummand) as exc:
        pfq_terminating(TerminatingSeries((F(-4), F(1)), (F(-1),), F(1), 4))
    assert exc.value.index == 2
    assert exc.value.parameter == -1


def test_numerator_zero_ends_sum_before_pole():
    # (-1)_k vanishes from k=2, before (-2)_k hits zero at k=3
    s = TerminatingSeries((F(-5), F(-1)), (F(-2),), F(1), 5)
    assert pfq_terminating(s) == 1 + F(-5 * -1, -2)


def test_gessel_stanton_against_oracle():
    s = gessel_stanton_series(1, F(1, 5), F(1, 7), 3)
    lhs = pfq_terminating(s)
    assert lhs == direct_sum(s)
    assert lhs == product_side(*gessel_stanton_rhs_params(1, F(1, 5), F(1, 7)), 3)


def test_checks_at_zero():
    assert gessel_stanton_check(F(2, 3), F(1, 7), F(3, 5), 0) == (1, 1, True)
    assert gasper_check(F(2, 3), F(1, 7), 0) == (1, 1, True)


def test_gessel_stanton_example():
    lhs, rhs, eq = gessel_stanton_check(1, F(1, 3), F(1, 5), 2)
    assert eq
    assert lhs == direct_sum(gessel_stanton_series(1, F(1, 3), F(1, 5), 2))
    assert rhs == product_side(*gessel_stanton_rhs_params(1, F(1, 3), F(1, 5)), 2)


def test_gasper_example():
    lhs, rhs, eq = gasper_check(F(1, 6), F(1, 6), 1)
    assert eq
    assert lhs == direct_sum(gasper_series(F(1, 6), F(1, 6), 1))
    assert rhs == product_side(*gasper_rhs_params(F(1, 6), F(1, 6)), 1)


@pytest.mark.parametrize("which", ["gessel-stanton", "gasper"])
def test_random_trials(which):
    summary = run_identity_trials(which, 200, 12, seed=7)
    assert summary.passed == 200
    assert not summary.failures


def test_trials_reproducible():
    a = run_identity_trials("gasper", 30, 8, seed=3)
    b = run_identity_trials("gasper", 30, 8, seed=3)
    assert (a.passed, a.resampled) == (b.passed, b.resampled)


def test_unknown_identity():
    with pytest.raises(ValueError):
        run_identity_trials("dougall", 1, 1, 0)


rats = st.builds(F, st.integers(-30, 30), st.integers(1, 9))


@settings(max_examples=40)
@given(st.lists(rats, min_size=1, max_size=4), st.lists(rats.filter(lambda b: b.denominator > 1), max_size=4), rats, st.integers(0, 8), st.randoms())
def test_parameter_permutation_invariance(num, den, z, n, rnd):
    num = num + [F(-n)]
    s = TerminatingSeries(tuple(num), tuple(den), z, n)
    shuffled_num, shuffled_den = list(num), list(den)
    rnd.shuffle(shuffled_num)
    rnd.shuffle(shuffled_den)
    t = TerminatingSeries(tuple(shuffled_num), tuple(shuffled_den), z, n)
    assert pfq_terminating(s) == pfq_terminating(t) == direct_sum(s)


def test_b_symmetry_exact():
    rng = random.Random(11)
    checked = 0
    while checked < 50:
        a, b, c = (F(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(3))
        n = rng.randint(0, 10)
        try:
            x = pfq_terminating(gessel_stanton_series(a, b, c, n))
            y = pfq_terminating(gessel_stanton_series(a, 1 - b, c, n))
        except PoleInSummand:
            continue
        assert x == y
        checked += 1
