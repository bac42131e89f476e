"""Walk the exact norm curve of a centered indicator.

The centered indicator takes the value 1-p with probability p and -p
otherwise.  Its subgaussian norm has an exact closed form, peaking at
sqrt(1/8) for the fair coin and collapsing to 0 at the endpoints.  This
script prints the curve together with its two companions: the small-p
asymptote 0.5/sqrt(|log p|) and the moment-growth norm.
"""

import math

from subgauss import gls_norm, q_asymptotic, q_norm

print("p        Q(p)       asymptote  moment-growth")
print("-" * 47)
for p in [0.001, 0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5]:
    q = q_norm(p).value
    asym = q_asymptotic(p) if p != 0.5 else float("nan")
    g = gls_norm(p)
    print(f"{p:<8g} {q:.7f}  {asym:.7f}  {g:.7f}")

print()
print("symmetry: Q(0.25) == Q(0.75) ->", q_norm(0.25).value == q_norm(0.75).value)
print("peak:     Q(0.5) == sqrt(1/8) ->", q_norm(0.5).value == math.sqrt(0.125))

# the asymptote becomes exact in the limit; watch the ratio close in
print()
print("p -> 0 ratio Q(p) / asymptote:")
for k in (2, 4, 8, 12):
    p = 10.0 ** -k
    print(f"  p = 1e-{k:<3d} ratio = {q_norm(p).value / q_asymptotic(p):.9f}")

# a cheap ASCII profile of the curve, peak in the middle
print()
width = 56
for p in [i / 20 for i in range(21)]:
    bar = "#" * int(round(q_norm(p).value / math.sqrt(0.125) * width))
    print(f"p={p:4.2f} |{bar}")
