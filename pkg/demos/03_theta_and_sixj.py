# %% [markdown]
# # Theta symbols and 6j symbols
#
# The closed-form theta and 6j symbols are checked against two independent evaluations:
# the diagrammatic theta network, and the strand (spin-chain) representation.

# %%
from anfield.fusion import CategoryParams, qdim, six_j, sixj_oracle, theta_oracle, theta_symbol
from anfield.cyclotomic import approx_complex
from anfield.symbolic import DELTA
from anfield.temperley_lieb import evaluate_closed_network, tetrahedral_network, theta_network

p = CategoryParams(3, 1)
print(p, " delta =", p.delta)

# %% [markdown]
# The theta network evaluated symbolically in delta, then compared with the formula.

# %%
net = evaluate_closed_network(theta_network(2, 2, 2, DELTA))
print("theta(2,2,2) as a function of delta:", net)
print("specialised:", net.evaluate(p.delta), " formula:", theta_symbol(p, 2, 2, 2))
print("oracle     :", theta_oracle(p, 2, 2, 2))

# %% [markdown]
# The "-" pivotal structure flips theta by (-1)^((a+b+c)/2).

# %%
minus = CategoryParams(3, 1, -1)
print("theta(2,2,2) for + and -:", theta_symbol(p, 2, 2, 2), "|", theta_symbol(minus, 2, 2, 2))

# %% [markdown]
# The F-matrix of X_1 (x) X_1 (x) X_1 -> X_1, as 6j symbols, and its orthogonality.

# %%
F = [[six_j(p, 1, 1, e, 1, 1, f) for f in (0, 2)] for e in (0, 2)]
for row in F:
    print([f"{approx_complex(x, 6)[0]:f}" for x in row])
print("oracle agrees:", all(F[i][j] == sixj_oracle(p, 1, 1, e, 1, 1, f) for i, e in enumerate((0, 2)) for j, f in enumerate((0, 2))))

# %% [markdown]
# The tetrahedral network is the 6j symbol times two thetas over a dimension.

# %%
tet = evaluate_closed_network(tetrahedral_network(1, 1, 2, 1, 1, 2, p.delta))
print("Tet == 6j theta theta / dim:", tet == six_j(p, 1, 1, 2, 1, 1, 2) * theta_symbol(p, 1, 1, 2) ** 2 / qdim(p, 2))
