# %% [markdown]
# # Finding tight designs by search
#
# Words whose pairwise inner products are roots of Q_k^{1,1} form cliques in
# a Cayley graph on F_2^n. A branch-and-bound search looks for a clique of the
# bound size, and every hit is re-checked by the full tightness certificate.

# %%
from kkdesign import search_tight
from kkdesign.search import build_graph, find_clique

g = build_graph(6, 2)
print("n=6, k=2: distances", sorted(g.allowed_distances), "|N(0)| =", len(g.vertices))

for n, k in [(4, 1), (6, 2), (8, 1), (12, 1), (7, 1)]:
    rep = search_tight(n, k)
    print(f"({n},{k}): {rep.status:<9} {rep.reason}")

# %% [markdown]
# One word more than the bound is impossible, and the search proves it
# quickly.

# %%
print(find_clique(g, 17))
