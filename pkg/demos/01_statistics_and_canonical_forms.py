# %% [markdown]
# # Statistics and canonical forms
#
# A signed permutation is written in window notation.  Products act on the
# right: `compose(x, y)(i) = x(y(i))`.

# %%
from signedeven import canonical, parse_window, statistics_record
from signedeven.group_core import compose, eval_word, parse_word
from signedeven.statistics import ell_L

sigma = parse_window("5,-1,2,-3,4")
rec = statistics_record(sigma)
for key in ("inv", "ltrm", "neg_inv", "ell_B", "ell_L", "des_S", "maj_B", "rmaj_B",
            "des_A", "rmaj_L", "nrmaj_L"):
    print(f"{key:8} {getattr(rec, key)}")

# %% [markdown]
# Every element has one canonical presentation per style.  The B style gives
# a reduced word, so its length is `ell_B`.

# %%
for style in ("B", "L"):
    p = canonical(sigma, style)
    print(style, p, "tokens:", len(p.flattened), "evaluates back:", p.evaluate() == sigma)

# %% [markdown]
# The L style need not be reduced: here a four-letter word does the job of
# the five-letter canonical one.

# %%
pi = parse_window("-3,1,-2")
print(canonical(pi, "L"), eval_word(parse_word("a1 a0 a1 a0", 3)) == pi)

# %% [markdown]
# `ell_L` is not a length function: it is not subadditive under products.

# %%
x, y = parse_window("3,1,2"), parse_window("-1,2,3")
print(ell_L(x), ell_L(y), ell_L(compose(x, y)))
