"""Regenerate the worked examples of each family and check them to 40 digits."""

from ramanujan_pi import Family, FamilyParams, recognize_constant, render, sum_series, instantiate, verify_instance

EXAMPLES = [
    (Family.T1, 1, 1, 2), (Family.T1, 2, 2, 4), (Family.T2, 0, 0, 1), (Family.T2, 1, 1, 3),
    (Family.T3, 0, 0, None), (Family.T3, 1, 1, None), (Family.T4, 0, 0, None), (Family.T4, 1, 1, None),
    (Family.T5, 1, 1, None), (Family.T5, 2, 2, None), (Family.T6, 0, 0, None), (Family.T6, 1, 1, None),
    (Family.T7, 0, 0, None), (Family.T7, 1, 1, None),
]

for fam, p, q, r in EXAMPLES:
    params = FamilyParams(fam, p, q, r)
    rep = verify_instance(params, 40)
    # forget the constant and recover it from the digits alone
    guess = recognize_constant(sum_series(instantiate(params), 40).value, 40)
    print(f"{params.label():<11} {'ok ' if rep.matched else 'BAD'} recovered {guess}")
    print("   ", render(params).plaintext)
