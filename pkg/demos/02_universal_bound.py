# %% [markdown]
# # The universal bound and its certificate
#
# Squaring the adjacent polynomial Q_k^{1,1} gives a polynomial that is
# nonnegative on T_n with the right sign pattern in its Krawtchouk expansion.
# Any such polynomial bounds a (k,k)-design from below by f(1)/f_0.

# %%
from kkdesign import universal_bound, universal_certificate
from kkdesign.bounds import frac_str

for n, k in [(4, 1), (6, 2), (24, 3)]:
    rep = universal_certificate(n, k)
    print(f"n={n:2} k={k}: bound {rep.bound}")
    print("   certificate f_j:", [frac_str(x) for x in rep.expansion.coeffs[: 2 * k + 1]])
    print("   all checks pass:", all(c.passed for c in rep.checks))

# %% [markdown]
# A table of the closed form for small lengths.

# %%
print("n  " + " ".join(f"k={k:<6}" for k in range(1, 5)))
for n in range(2, 17, 2):
    print(f"{n:<3}" + " ".join(f"{universal_bound(n, k):<8}" if k <= n // 2 else " " * 8 for k in range(1, 5)))
