# %% [markdown]
# # Moments, strength and (k,k)-designs
#
# A binary code is judged by its moments: sums of Krawtchouk polynomials over
# all ordered pairs of codewords. They are never negative, a code is a
# t-design when M_1..M_t vanish, and a (k,k)-design when the even moments
# M_2, ..., M_2k vanish.

# %%
from kkdesign import BinaryCode, design_strength, kk_level, moments
from kkdesign.codes import antipodal_halve, combinatorial_strength
from kkdesign.constructions import even_weight_code

c = BinaryCode.from_strings(["000", "011", "101", "110"])
print("moments of the [3,2] parity code:", [str(m) for m in moments(c).values])
print("strength:", design_strength(c), "| column-tuple count agrees:", combinatorial_strength(c))

# %% [markdown]
# The even-weight code of length 6 is a 5-design. It is antipodal, so we can
# keep one word from each complementary pair. Odd moments are lost, but the
# even ones only shrink by a factor of four, so the half is a (2,2)-design.

# %%
d = even_weight_code(6)
half = antipodal_halve(d)
print("full:", len(d), "words, strength", design_strength(d))
print("half:", len(half), "words, kk_level", kk_level(half))
for i in (2, 4, 6):
    print(f"  M_{i}: full {moments(d)[i]}, half {moments(half)[i]}")
