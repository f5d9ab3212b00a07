"""Sum the two classical series for 1/pi and watch the partial sums settle."""

import math

from ramanujan_pi import Family, FamilyParams, instantiate, partial_sum, tail_bound

for params in (FamilyParams(Family.T1, 0, 0, 0), FamilyParams(Family.T5, 0, 0)):
    inst = instantiate(params)
    print(f"{params.label()}: sum = {inst.constant}")
    exact = inst.constant.value(240)
    for n in (1, 5, 10, 20, 40):
        s = partial_sum(inst, n, 240)
        err = s.difference_bound(exact)
        bound = tail_bound(inst, n)
        print(f"  N={n:>3}  |C - S_N| <= {float(err):.3e}   tail bound {float(bound):.3e}")
    print()

# the ratio of consecutive terms tends to z, which sets the speed
inst = instantiate(FamilyParams(Family.T5, 0, 0))
print("T5(0,0) term ratios:", [f"{float(inst.ratio_at(k)):.4f}" for k in (0, 10, 100, 1000)], "-> z =", inst.z)
print(f"so each term adds about log10(9) = {math.log10(9):.3f} digits")
