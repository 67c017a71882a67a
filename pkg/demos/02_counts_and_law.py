# %% [markdown]
# # How often does each gcd occur?
#
# Over Z/p^eZ the gcd of p^e with a product of r residues is p^d for some
# d <= e. The counts have a closed form; here they are set against an
# exhaustive tally, then assembled into the full law of gcd(n, k1...kr).

# %%
from gcdmoment import count_brute, count_closed, pmf

for p, e, r in [(2, 2, 2), (3, 2, 3), (2, 5, 2)]:
    closed = count_closed(p, e, r).counts
    brute = count_brute(p, e, r).counts
    print(f"p={p} e={e} r={r}: {closed}  matches enumeration: {closed == brute}  total {sum(closed.values())}")

# %% [markdown]
# The law over Z/nZ is a product of the local laws, one per prime of n.

# %%
law = pmf(12, 2)
for f, m in law.mass.items():
    print(f"P[X = {f:2d}] = {m}")
print("sum", sum(law.mass.values()), " mean", law.expectation(1), " E[X^2]", law.expectation(2))
