# %% [markdown]
# # Reductions, grid curves and Z subsets

# %%
from mulcon import QQ
from mulcon import cohomology as coh
from mulcon.grid import Grid, bipartite_graph, construct_Z, verify_Z
from mulcon.reduction import classify, critical_band

# %% [markdown]
# Every admissible (h, k) reduces to one with degree in the critical band.
# The chain records each move taken.

# %%
print(critical_band(3, 4))
res = classify(3, 4, 3, -9)
for step in res.chain:
    print(step)
print(res.kind, res.decomposition)

# %% [markdown]
# When alpha = beta = -1 and m = n + 1 the grid curve is the witness.  It passes
# through all a*b points of the grid and has vanishing cohomology.

# %%
F = coh.grid_curve(2, 3, QQ, seed=4)
print(classify(2, 3, 3, -4).kind, coh.h0_h1(F, 3, -4))

# %% [markdown]
# The other case needs a subset Z of the grid.  When neither full subgrid fits,
# points are spread along a balanced bipartite graph.

# %%
g = bipartite_graph(3, 2, 5)
print(sorted(g.edges), g.left_degrees(), g.right_degrees())

grid = Grid.make(5, 4, QQ)
z = construct_Z(grid, 2, 0)
print(sorted(z.indices), verify_Z(z))
