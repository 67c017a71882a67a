# %% [markdown]
# # Cost: n^r terms versus a product over primes
#
# Enumeration touches n^r tuples. The closed form does O(r) work per prime of n.
# The bench helper times both and fits closed-form time against r.

# %%
from gcdmoment.cli import bench

small = bench(6, 1, range(1, 9), guard=10**6, repeat=1)
for row in small["rows"]:
    brute = "skipped" if row["brute_seconds"] is None else f"{row['brute_seconds']:.2e}"
    print(f"r={row['r']}  closed {row['closed_seconds']:.2e}  brute {brute}")

# %%
big = bench(720720, 3, range(100, 1001, 100))
for row in big["rows"]:
    print(f"r={row['r']:5d}  closed {row['closed_seconds'] * 1e3:.2f} ms")
print("fit:", big["fit"])
