# %% [markdown]
# # Exact arithmetic with roots of unity
#
# Every structure constant in these categories lives in a cyclotomic field Q(zeta_N).
# `CyclotomicNumber` stores an element in the power basis modulo the N-th cyclotomic
# polynomial, so equality is exact and never depends on floating point.

# %%
from anfield.cyclotomic import (
    approx_complex,
    cyclotomic_polynomial,
    quantum_integer,
    root_of_unity,
)

# %% [markdown]
# The golden ratio appears as the loop value at level k = 3: 2cos(pi/5).

# %%
z = root_of_unity(10)
phi = z + z.inverse()
print("phi           =", phi)
print("phi^2 - phi   =", phi * phi - phi)
print("approximately =", approx_complex(phi, 20)[0])

# %% [markdown]
# Numbers from different fields are compared by embedding both into a common field.

# %%
i = root_of_unity(4)
print("zeta_8^2 == i:", root_of_unity(8, 2) == i)
print("Phi_12(x)    :", cyclotomic_polynomial(12))

# %% [markdown]
# Galois automorphisms act by zeta -> zeta^j. The norm lands in Q; the trace is
# normalised by the field degree so it does not depend on the ambient field.

# %%
print("conjugate of phi:", phi.galois_apply(3), "~", approx_complex(phi.galois_apply(3), 6)[0])
print("norm(phi) =", phi.norm(), " normalised trace(phi) =", phi.trace())

# %% [markdown]
# Quantum integers [n] = (s^2n - s^-2n)/(s^2 - s^-2) at s = zeta_20^6 (level 3, l = 1):
# [4] vanishes, which is why level 3 stops at X_3.

# %%
s = root_of_unity(20, 6)
for n in range(1, 6):
    print(f"[{n}] =", quantum_integer(n, s))

# %% [markdown]
# The order of a root of unity is computed exactly.

# %%
print("order of zeta_12^4:", root_of_unity(12, 4).multiplicative_order())
