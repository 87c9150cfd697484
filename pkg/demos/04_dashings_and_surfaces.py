# # Counting dashings, gluing surfaces
#
# Dashings are 1-cochains. Totally odd ones solve d1(mu) = 1 on the squares,
# and switching moves a solution by the image of d0, so classes are counted
# by H^1.

# %%
from cliffordinkra import QuotientSpec, cube, quotient, standard_code
from cliffordinkra.cohomology import build_complex, cohomology_dims, count_dashings, solve_totally_odd
from cliffordinkra.construct import quotient_topology
from cliffordinkra.geometry import Rainbow, genus_formula, geometrize

for name, g in (("cube 4", cube(4)),
                ("d_4", quotient(QuotientSpec.make(4, standard_code("d_4")))),
                ("d_6", quotient(QuotientSpec.make(6, standard_code("d_6")))),
                ("e_8", quotient(QuotientSpec.make(8, standard_code("e_8"))))):
    cx = build_complex(g)
    total, classes = count_dashings(cx)
    print(f"{name:7} cells={cx.counts} H={cohomology_dims(cx)} dashings={total} classes={classes}")

# %% [markdown]
# Folding by a code with a weight-2 or weight-6 word leaves no totally odd
# dashing at all.

# %%
for word in ("110000", "111111"):
    print(word, solve_totally_odd(build_complex(quotient_topology(6, [word]))))

# %% [markdown]
# Gluing squares only for neighbouring colors in a cyclic order gives a
# closed surface; its genus does not depend on the order chosen.

# %%
for n, code in ((3, None), (4, None), (4, "d_4"), (6, "d_6"), (8, "e_8")):
    g = cube(n) if code is None else quotient(QuotientSpec.make(n, standard_code(code)))
    k = 0 if code is None else standard_code(code).dimension
    s = geometrize(g, Rainbow.standard(n))
    print(n, code or "cube", s.record(), "formula:", genus_formula(n, k))
