# # Cubes, dashings and matrices
#
# The n-cube with vertices labelled by bit strings is the basic example. An
# edge of color i joins x and x + e_i; it is dashed when left multiplication
# by G_i picks up a minus sign.

# %%
import numpy as np

from cliffordinkra import cube, to_matrices, validate, verify_clifford, vertex_switch

g = cube(3)
print(g)
for e in g.edges()[:6]:
    print(e.color, g.labels[e.u], g.labels[e.v], "dashed" if e.dashed else "solid")

# %% [markdown]
# Bosons are the even-weight words and come first. Each color becomes a
# symmetric signed permutation matrix that swaps the two blocks.

# %%
mats = to_matrices(g)
print(mats[0].dense())
print("relations hold:", verify_clifford(mats))

# anticommutators by hand, to see the relations in plain numpy
dense = [m.dense() for m in mats]
for i in range(3):
    for j in range(3):
        ac = dense[i] @ dense[j] + dense[j] @ dense[i]
        assert (ac == 2 * (i == j) * np.eye(8, dtype=int)).all()

# %% [markdown]
# Flipping every dash at one vertex keeps each square's dash count odd.

# %%
h = vertex_switch(g, [0, 5])
print(validate(h).ok, sum(e.dashed for e in g.edges()), "->", sum(e.dashed for e in h.edges()))
