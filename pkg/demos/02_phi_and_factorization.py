# %% [markdown]
# # The involution phi and the factorization of L_m
#
# `phi` swaps `maj_B` and `rmaj_B` and keeps the negative positions of the
# inverse.

# %%
from signedeven import enumerate_group, parse_window
from signedeven.statistics import des_A, maj_B, neg_inv, rmaj_B
from signedeven.structure_maps import main_lemma_factor, phi

sigma = parse_window("5,-1,2,-3,4")
print(phi(sigma), maj_B(sigma), rmaj_B(phi(sigma)))

# %%
bad = [x for x in enumerate_group("B", 5)
       if phi(phi(x)) != x or maj_B(x) != rmaj_B(phi(x)) or neg_inv(x) != neg_inv(phi(x))]
print("violations on B_5:", len(bad))

# %% [markdown]
# Every `pi` in `L_m` splits as `sigma * u` with `u` even and `sigma` free of
# A-descents.  Which of two constructions applies depends on the parity of
# the sorted word.

# %%
f = main_lemma_factor(parse_window("3,5,-4,2,-1"))
print("case", f.case, "sigma", f.sigma, "u", f.u)

# %%
T = [x for x in enumerate_group("L", 4) if des_A(x) == 0]
print(len(T), "descent-free elements in L_4, one per subset of {1,2,3,4}")
