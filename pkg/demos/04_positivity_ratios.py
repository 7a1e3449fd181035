"""
How the positive share settles down
===================================

For fixed steps (q1, q2) the fraction of positive terms approaches a rational
limit as the group order grows.  The error shrinks like 1/p.
"""

from fractions import Fraction

from quadrisig import convergence_table, limit_ratio

# %%
# Even q1 with odd q2 in U(1,1): odd and even orders settle on different limits.
p_list = [101, 102, 1001, 1002, 10001, 10002, 100001, 100002]
report = convergence_table(2, 3, "u11", p_list)
for row in report.rows:
    print(f"p={row.p:>6}  ratio={float(row.ratio):.6f}  limit={row.limit}  p*err={float(row.error * row.p):.3f}")

# %%
# Across the small cases the worst p*err stays well under q2^2.
for q1, q2 in [(1, 2), (1, 3), (2, 3), (3, 4), (2, 5)]:
    for form in ("u2", "u11"):
        rep = convergence_table(q1, q2, form, range(1000, 1100))
        print(q1, q2, form, "C =", float(rep.fitted_constant()), "budget", 5 * q2 * q2)

# %%
# Consecutive steps in U(2) creep towards 3/4 as q grows.
for q in (1, 3, 9, 33, 99):
    lim = limit_ratio(q, q + 1, "u2")
    print(q, lim, float(lim - Fraction(3, 4)))
