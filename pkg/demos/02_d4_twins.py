# # The two folds of the 4-cube
#
# Projecting with (1 +/- G_1111)/2 identifies each G_y with +/- G_{y+1111}.
# The two signs give graphs with the same shape that are not related by any
# relabelling plus vertex switch.

# %%
from cliffordinkra import QuotientSpec, is_isomorphic, quotient, recover_code, standard_code
from cliffordinkra.construct import identification_pairs

d4 = standard_code("d_4")
a = quotient(QuotientSpec.make(4, d4, "+"))
b = quotient(QuotientSpec.make(4, d4, "-"))

for spec_sign, g in (("+", a), ("-", b)):
    spec = QuotientSpec.make(4, d4, spec_sign)
    rows = [f"{y} = {'+' if s > 0 else '-'}{z}" for y, s, z in identification_pairs(spec)
            if str(y) < str(z)]
    print(spec_sign, ", ".join(rows))

# %% [markdown]
# Both graphs remember their code, and the isomorphism search says they
# differ.

# %%
print(recover_code(a).rows, recover_code(b).rows)
print("a ~ b:", is_isomorphic(a, b))
print("a ~ a:", is_isomorphic(a, a))
