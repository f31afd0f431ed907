# %% [markdown]
# # Multiplication and contraction on bigraded tensors
#
# A form sigma of bidegree (a, b) acts on S^r V (x) S^t W* by multiplying the
# V-part and contracting the W*-part.  We build the matrix, look at its rank,
# and then certify generic maximal rank for a small parameter sweep.

# %%
from mulcon import (
    BasisIndexer,
    BiForm,
    FieldDescriptor,
    build_diff_matrix,
    build_mulcon_matrix,
    generic_rank_certificate,
    rank,
)

gf = FieldDescriptor.prime(65537)

# %% [markdown]
# The basis ordering is graded-lex with the x-part major.  Index 0 is the
# monomial x0^r y0*^t.

# %%
source = BasisIndexer(1, 1, 1, 2, dual=True)
print([str(m) for m in source])

# %% [markdown]
# The form x0*y0 + x1*y1 is the simplest witness: for (r, t) = (0, 1) it gives
# a 2x2 matrix of full rank.

# %%
sigma = BiForm.from_exponents({((1, 0), (1, 0)): 1, ((0, 1), (0, 1)): 1}, gf)
M = build_mulcon_matrix(sigma, 0, 1)
print(M.to_dense(), rank(M))

# %% [markdown]
# Differentiation scales each entry by a falling factorial.  Over a prime field
# with p > t those scalars are units, so the rank does not change.

# %%
D = build_diff_matrix(sigma, 0, 1)
print(rank(D) == rank(M))

# %% [markdown]
# A certificate samples random forms until one attains the dimension bound.
# One success proves the generic statement, since rank drops only on a closed set.

# %%
for r, t in [(0, 2), (1, 3), (2, 4)]:
    cert = generic_rank_certificate(2, 2, r, t, field=gf, base_seed=11)
    print((r, t), cert.verdict, cert.achieved_rank, "of", cert.target_rank)

# %% [markdown]
# A monomial sigma has tiny support and cannot reach the bound, so the verdict
# comes back inconclusive.

# %%
mono = lambda a, b, field, seed, nvars=(1, 1): BiForm.from_exponents({((a, 0), (b, 0)): 1}, field)
cert = generic_rank_certificate(2, 2, 1, 3, field=gf, max_trials=1, escalate=False, sampler=mono)
print(cert.verdict, cert.achieved_rank, cert.target_rank)
