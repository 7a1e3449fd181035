"""
Invariant polynomials of small cyclic groups
============================================

Expand the invariant polynomial of two small groups, read off the signature
pair, and split the terms into the two halves of the CR map.
"""

import numpy as np

from quadrisig import cr_map, expand, expand_modular, make_params, signature

# %%
# The group of order 6 generated by diag(w^2, w^3) in U(2).
params = make_params(6, 2, 3)
phi = expand(params)
print(params, "->", phi)

# %%
# The modular backend reconstructs the same integers from residues mod
# several primes, without ever touching the cyclotomic ring.
assert expand_modular(params) == phi

# %%
# Positive terms feed the target's positive directions, negative ones the
# negative directions.
print("signature pair:", tuple(signature(params)))

# %%
# Order 2 inside U(1,1): the polynomial is (x - y)^2 once x = |z1|^2, y = |z2|^2.
small = make_params(2, 1, 1, "u11")
print(small, "->", expand(small))
cmap = cr_map(small)
for name, comps in (("F", cmap.f_terms), ("G", cmap.g_terms)):
    print(name, [f"{m:.4f} z1^{r} z2^{s}" for m, r, s in comps])

# %%
# ||F||^2 - ||G||^2 reproduces the polynomial at any point.
rng = np.random.default_rng(0)
z1, z2 = rng.normal(size=2) + 1j * rng.normal(size=2)
x, y = abs(z1) ** 2, abs(z2) ** 2
print(cmap.hermitian_value(z1, z2), float(expand(small).evaluate(x, y)))
