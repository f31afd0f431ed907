# %% [markdown]
# # Line bundles on curves in P1 x P1
#
# For a curve C of type (a, b) with equation F, h0 and h1 of O_C(h, k) are the
# kernel and cokernel dimensions of a contraction matrix built from F.

# %%
from mulcon import FieldDescriptor, QQ
from mulcon import cohomology as coh

gf = FieldDescriptor.prime(65537)

# %% [markdown]
# A random curve of type (2, 2) is an elliptic curve.  At (h, k) = (3, -3) the
# bundle has degree 0, and the general curve has no sections there.

# %%
F = coh.make_curve("random", 2, 2, gf, seed=1)
print(coh.h0_h1(F, 3, -3))

# %% [markdown]
# Curves containing the line y0 = 0 break the pattern.  The matrix factors
# through a smaller space, so both groups are nonzero.

# %%
G = coh.line_degenerate_curve(2, 2, gf, seed=1)
res = coh.h0_h1(G, 3, -3)
print(res.h0, res.h1, coh.check_theorem(G, 3, -3))

# %% [markdown]
# Pairs with h < a or k > -2 are handled by duality and the ruling swap.
# The routed call picks a computable form of the question.

# %%
(sa, sb), (sh, sk), Fs = coh.swap_rulings(2, 3, 4, -3, coh.make_curve("random", 2, 3, gf, 3))
print((sa, sb), (sh, sk), coh.h0_h1_routed(Fs, sh, sk))

# %% [markdown]
# Exact rational arithmetic works too. A general (3, 3) curve at (3, -3) has
# an injective matrix, so all of the Euler characteristic sits in h1.

# %%
print(coh.h0_h1(coh.make_curve("random", 3, 3, QQ, seed=2), 3, -3))
