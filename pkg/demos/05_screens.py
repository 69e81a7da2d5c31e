# %% [markdown]
# # Where can tight designs live?
#
# A tight design has all its inner products among the roots of Q_k^{1,1},
# and its size must be divisible by 4^k. Those facts turn into arithmetic
# screens on n.

# %%
from kkdesign import screen_tight

for k in (1, 2, 3):
    hi = {1: 40, 2: 1000, 3: 2000}[k]
    survivors = [n for n in range(2 * k, hi + 1) if screen_tight(n, k).verdict == "open"]
    print(f"k={k}, n<={hi}: {survivors}")

# %% [markdown]
# Each verdict carries its witnesses.

# %%
for n, k in [(24, 3), (7, 1), (27, 2)]:
    r = screen_tight(n, k)
    print(f"({n},{k}) {r.verdict}")
    for c in r.checks:
        flag = "ok  " if c.passed else ("FAIL" if c.counts else "info")
        print(f"   {flag} {c.name:<28} {c.witness}")
