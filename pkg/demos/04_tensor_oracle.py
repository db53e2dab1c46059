# %% [markdown]
# # Checking the reduced ring against H*(Σ^N)
#
# The oracle builds the full graded-commutative ring of the N-fold product,
# lifts η = Σβ_k and σ_i = ζ_i ζ_{i+g}, and integrates over Σ^N / N!.

# %%
from vortex_quant.oracle import lift, oracle_integrate, verify_reduced_ring
from vortex_quant.ring import RingElement, RingParams

p = RingParams(1, 2)
s1 = RingElement.sigma(p, 1)
print("lift(σ1) =", lift(s1).terms)
print("∫ lift(η σ1) / 2! =", oracle_integrate(lift(RingElement.eta(p) * s1)))

# %%
for g, n in [(0, 3), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2)]:
    rep = verify_reduced_ring(g, n)
    print(f"g={g} N={n}: {rep.pairs_checked:4d} pairs, {len(rep.discrepancies)} discrepancies")
