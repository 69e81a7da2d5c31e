# %% [markdown]
# # Exact LP bound
#
# Instead of guessing a polynomial, solve for the best one of bounded degree.
# The LP runs in exact rationals, so its optimum comes with a certificate that
# is checked the same way as the hand-made one.

# %%
from kkdesign import lp_optimize, universal_bound

for n, k in [(6, 2), (4, 1), (7, 1), (9, 2), (11, 3)]:
    for D in sorted({2 * k, n}):
        rep = lp_optimize(n, k, D)
        print(f"n={n:2} k={k} D={D:2}: LP {str(rep.bound):>8}   closed form {universal_bound(n, k)}")

# %% [markdown]
# At odd length the optimum beats the closed form: no (1,1)-design of length 7
# has fewer than 8 words.
