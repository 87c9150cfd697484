# # Smallest graded representations
#
# A maximal doubly even code gives the smallest quotient, and the vertex
# count is the dimension of the representation. Lengths past 8 reuse e_8.

# %%
from cliffordinkra import minimal_representation, verify_clifford

print(f"{'n':>3} {'k':>2} {'code':<18} {'dim':>4}")
for n in range(1, 17):
    rep = minimal_representation(n)
    ok = verify_clifford(rep.matrices)
    print(f"{n:>3} {rep.code.dimension:>2} {rep.code.name:<18} {rep.dimension:>4}  {'ok' if ok else 'FAIL'}")

# %% [markdown]
# Sign choices on the projectors give further representations of the same
# size.

# %%
rep = minimal_representation(8, "-+++")
print(rep.code.rows, rep.dimension, verify_clifford(rep.matrices))
