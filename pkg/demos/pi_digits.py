"""Compute pi from one member of each family and compare speeds."""

import time

from ramanujan_pi import Family, FamilyParams, pi_from_instance, pi_reference

DIGITS = 300
ref = pi_reference(1100).to_decimal(DIGITS)

for fam in Family:
    params = FamilyParams(fam, 0, 0)
    t0 = time.perf_counter()
    res = pi_from_instance(params, DIGITS)
    dt = time.perf_counter() - t0
    agree = res.value.to_decimal(DIGITS) == ref
    print(f"{params.label():<10} {res.terms_used:>4} terms  {res.digits_per_term:.3f} digits/term  {dt * 1000:6.1f} ms  agrees={agree}")

print()
print(pi_from_instance(FamilyParams(Family.T5, 0, 0), 60).value.format_certified(60))
