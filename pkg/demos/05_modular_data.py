# %% [markdown]
# # Braidings, S and T matrices
#
# A braided category is fixed by the level k and a label l coprime to 4(k+2), with
# s = zeta_{4(k+2)}^l. From s we get the twists, the S-matrix and the T-matrix.

# %%
from anfield.cyclotomic import approx_complex
from anfield.modular import (
    BraidingParams,
    conductor,
    galois_orbits,
    is_modular,
    modular_matrices,
    modularity_rank,
    verlinde_check,
)


def show(matrix):
    for row in matrix:
        print("  ".join(f"{approx_complex(x, 4)[0]:+f}{approx_complex(x, 4)[1]:+f}i" for x in row))


bp = BraidingParams(2, 1)
mm = modular_matrices(bp)
print("S for k=2, l=1 (Ising type):")
show(mm.S)
print("T diagonal:", [str(mm.T[a][a]) for a in range(3)])

# %% [markdown]
# Modular cases recover the fusion rules from S through the Verlinde formula.

# %%
print("modular:", is_modular(bp), " verlinde:", verlinde_check(bp))

# %% [markdown]
# At odd k with odd l the S-matrix degenerates to rank (k+1)/2.

# %%
for ell in (1, 2, 3, 4):
    b = BraidingParams(5, ell)
    print(f"k=5 l={ell}: rank {modularity_rank(b)} of 6, conductor {conductor(b)}")

# %% [markdown]
# Galois conjugation permutes the labels l; the orbits at k = 3 split by l mod 4.

# %%
print("k=3 Galois orbits:", galois_orbits(3))
