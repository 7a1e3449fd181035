"""
Signs without expanding
=======================

The support and the sign of every coefficient follow from arithmetic on the
exponents alone.  This script checks that against full expansions and then
uses it where expansion is hopeless.
"""

import time

from quadrisig import classify_sign, expand, make_params, signature, su11_signature, support
from quadrisig.signature import step_gcd_sign

# %%
# A mid-sized group: compare predicted and actual signs term by term.
params = make_params(20, 3, 7)
poly = expand(params)
predicted = {(e.r, e.s): e.sign for e in support(params)}
actual = {rs: (1 if c > 0 else -1) for rs, c in poly.terms.items()}
print(len(actual), "terms, all signs predicted:", predicted == actual)

# %%
# A tempting variant of the predicate uses gcd(q1, q2, l) instead of
# gcd(r, s, l).  It marks every term positive here and so misses the -x^6.
six = make_params(6, 2, 3)
for r, s in [(6, 0), (3, 2)]:
    print((r, s), "coefficient", expand(six)[(r, s)],
          "| gcd(r, s, l) rule", classify_sign(six, r, s),
          "| gcd(q1, q2, l) rule", step_gcd_sign(six, r, s))

# %%
# The SU(1,1) family has a closed form; the sign law agrees with it.
for p in (7, 8, 47, 48):
    print(p, tuple(su11_signature(p)), tuple(signature(make_params(p, 1, p - 1, "u11"))))

# %%
# Counting is linear in p, so a million-element group is cheap.
t0 = time.perf_counter()
pair = signature(make_params(10**6, 3, 7))
print(tuple(pair), f"{time.perf_counter() - t0:.3f}s")
