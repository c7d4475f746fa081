# %% [markdown]
# # Temperley-Lieb diagrams and Jones-Wenzl projectors
#
# Morphisms are linear combinations of planar matchings. Coefficients can be symbolic
# rational functions of the loop value delta, or exact cyclotomic numbers.

# %%
from anfield.fusion import CategoryParams
from anfield.symbolic import DELTA
from anfield.temperley_lieb import (
    all_diagrams,
    cap,
    chebyshev,
    compose,
    cup,
    generator,
    identity,
    jones_wenzl,
    level_equal,
    markov_trace,
    TLMorphism,
)

# %% [markdown]
# A closed circle evaluates to delta. The number of diagrams with 2n boundary points is
# the Catalan number.

# %%
print("cap o cup =", compose(cap(DELTA), cup(DELTA)).scalar())
print("diagram counts:", [len(all_diagrams(n, n)) for n in range(6)])

# %% [markdown]
# The generators satisfy e_i^2 = delta e_i and e_i e_{i+1} e_i = e_i.

# %%
e1, e2 = generator(3, 1, DELTA), generator(3, 2, DELTA)
print("e1 e1 == delta e1:", e1 @ e1 == e1 * DELTA)
print("e1 e2 e1 == e1   :", e1 @ e2 @ e1 == e1)

# %% [markdown]
# The Jones-Wenzl projector f^(n) is the idempotent killed by every e_i. Its trace is
# the Chebyshev polynomial Delta_n(delta).

# %%
f3 = jones_wenzl(3, DELTA)
print(f3)
print("idempotent   :", f3 @ f3 == f3)
print("e_i f = 0    :", all((generator(3, i, DELTA) @ f3).is_zero() for i in (1, 2)))
print("trace        :", markov_trace(f3), "=", chebyshev(3, DELTA))

# %% [markdown]
# At a root of unity the recursion stops. At k = 2 the trace of f^(3) is zero, so f^(3)
# is negligible and f^(4) cannot be formed.

# %%
delta = CategoryParams(2, 1).delta
f3 = jones_wenzl(3, delta)
print("tr f^(3) at k=2:", markov_trace(f3))
print("f^(3) negligible:", level_equal(f3, TLMorphism.zero(3, 3, delta)))
try:
    jones_wenzl(4, delta)
except ZeroDivisionError as exc:
    print("f^(4) at k=2:", exc)
