# %% [markdown]
# # Dimension of the vortex Hilbert space
#
# For N vortices on a genus g surface of area A = 4πk the quantum line bundle
# has c_1(L) = (k - N)η + Σσ_i.  Hirzebruch-Riemann-Roch in the reduced ring
# and the binomial C(k, N) agree on every integral k.

# %%
from math import comb

from vortex_quant import (
    ModuliParams,
    euler_characteristic,
    kahler_class,
    line_bundle_class,
    tangent_chern,
    vortex_dimension,
)

p = ModuliParams(genus=2, vortices=3, area_quanta=5)
print("Kähler class / 4π :", kahler_class(p))
print("c_1(TX)           :", tangent_chern(p))
print("sum               :", kahler_class(p) + tangent_chern(p))
r = vortex_dimension(p)
print("dimension         :", r.dimension, "= C(5, 3) =", comb(5, 3))

# %% [markdown]
# The value does not depend on the genus, only the range where it is a
# dimension does.

# %%
for g in range(6):
    q = ModuliParams(g, 3, 5)
    r = vortex_dimension(q)
    print(g, r.euler_characteristic, r.vanishing_guaranteed)

# %% [markdown]
# A small table, genus 0 compared with the count C(N + l, l) on projective space.

# %%
for n in range(1, 5):
    row = [vortex_dimension(ModuliParams(0, n, n + l)).dimension for l in range(1, 7)]
    print(n, row, [comb(n + l, l) for l in range(1, 7)])

# %% [markdown]
# Tensor powers of L are handled by the ring route alone.

# %%
p = ModuliParams(1, 2, 4)
for mu in range(1, 5):
    print(mu, euler_characteristic(line_bundle_class(p) * mu, p))
