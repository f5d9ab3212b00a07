"""The two terminating 7F6 identities behind the families, checked exactly."""

from fractions import Fraction

from ramanujan_pi import gasper_check, gessel_stanton_check, run_identity_trials

lhs, rhs, ok = gessel_stanton_check(1, Fraction(1, 3), Fraction(1, 5), 2)
print("gessel-stanton at (1, 1/3, 1/5), n=2:", lhs, "=", rhs, ok)
lhs, rhs, ok = gasper_check(Fraction(1, 6), Fraction(1, 6), 3)
print("gasper at (1/6, 1/6), n=3:", lhs, "=", rhs, ok)

for which in ("gessel-stanton", "gasper"):
    s = run_identity_trials(which, 200, 12, seed=1)
    print(f"{which}: {s.passed}/{s.trials} random rational trials exact ({s.resampled} redrawn at poles)")
