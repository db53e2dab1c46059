# %% [markdown]
# # The Todd series t / (1 - e^{-t})
#
# Computed by inverting (1 - e^{-t}) / t; its coefficients are signed
# Bernoulli numbers over factorials.

# %%

from vortex_quant import series

t = series.todd_series(12)
for m, c in enumerate(t):
    print(f"t^{m:<2d} {c}")

# %% [markdown]
# Powers of it appear in the Todd class of Sym^N.

# %%
print(series.pow(series.todd_series(4), 3))
print(series.pow(series.todd_series(4), -2))
