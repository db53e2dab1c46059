# %% [markdown]
# # The reduced cohomology ring of Sym^N
#
# Even-degree classes on the N-th symmetric product of a genus g curve are
# modelled by polynomials in η and σ_1..σ_g with σ_i² = 0, truncated above
# complex degree N.  Integration reads off the top-degree coefficients.

# %%
from vortex_quant.ring import RingElement, RingParams, exp, integrate, monomials

p = RingParams(genus=2, points=2)
eta = RingElement.eta(p)
s1, s2 = RingElement.sigma(p, 1), RingElement.sigma(p, 2)

print("(η + σ1)(η + σ2) =", (eta + s1) * (eta + s2))
print("σ1² =", s1 * s1)
print("η³  =", eta**3, "(above the dimension)")

# %% [markdown]
# Exponentials of nilpotent classes terminate after N + 1 terms.

# %%
x = 3 * eta + s1 + s2
print("exp(3η + σ1 + σ2) =", exp(x))
print("∫ exp(3η + σ1 + σ2) =", integrate(exp(x)))

# %% [markdown]
# Every top-degree monomial integrates to 1.

# %%
for m in monomials(p):
    print(f"{str(m):10s} ->", integrate(RingElement.monomial(p, m)))
