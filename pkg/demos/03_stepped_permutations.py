"""
Coefficients as counts of permutations
======================================

The polynomial is one minus the determinant of a circulant matrix with three
nonzero diagonals.  Each monomial collects the permutations that move every
point by 0, q1 or q2; they all share a cycle type and a sign, so the
coefficient is plus or minus their number.
"""

from quadrisig import (SteppedPermutation, canonical_element, circulant_spec, cycle_geometry,
                       cycle_stats, enumerate_T, expand, make_params)

params = make_params(6, 2, 3)
for row in circulant_spec(params).matrix():
    print(" ".join(f"{e:>3}" for e in row))

# %%
# Six permutations with three 2-steps and two 3-steps: the coefficient of x^3 y^2.
perms = enumerate_T(params, 3, 2)
print([str(p) for p in perms], "coefficient", expand(params)[(3, 2)])
stats = cycle_stats(perms[0], params)
print("cycles:", stats.k, "sign:", stats.sign)

# %%
# One member can be written down directly by following a lattice path.
print("constructed:", canonical_element(params, 3, 2))
print("x^6 class:", canonical_element(params, 6, 0))

# %%
# A larger permutation: two 11-cycles in the group of order 24 generated by
# steps 3 and 16, and the traversal sets around its first cycle.
big = make_params(24, 3, 16)
c1 = (20, 23, 2, 18, 21, 24, 3, 19, 22, 1, 4)
c2 = (7, 10, 13, 5, 8, 11, 14, 6, 9, 12, 15)
sigma = SteppedPermutation.from_cycles(big, (c1, c2))
print((sigma.r, sigma.s), "fixed:", sigma.fixed_points())
geo = cycle_geometry(c1, big)
print("d", geo.d_points, "e", geo.e_points)
for v, w in zip(geo.v_sets, geo.w_sets):
    print(sorted(v), sorted(w))
