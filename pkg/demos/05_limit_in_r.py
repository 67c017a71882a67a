# %% [markdown]
# # Letting r grow
#
# As r grows the product k1...kr picks up every prime of n with overwhelming
# probability, so gcd(n, k1...kr) -> n and E[X^w] -> n^w.

# %%
from gcdmoment import convergence_condition, convergence_table

rep = convergence_table(2, 1, [1, 2, 3, 4, 10, 50])
for row in rep.rows:
    print(row.r, row.value.value, "gap", row.gap)

# %%
rep = convergence_table(6, 2, [1, 5, 10, 20, 43, 100, 200])
print("limit", rep.limit, "guaranteed", rep.guaranteed)
for row in rep.rows:
    print(f"r={row.r:4d}  gap {float(row.gap):.3e}")

# %% [markdown]
# Two sufficient conditions are reported per prime: |p^w - 1| > 1 and the
# stricter |p^(w-1) - 1| > 1. At p = 2, w = 1.5 they disagree, yet the table
# still converges.

# %%
cond = convergence_condition(2, 1.5)
print(cond)
for row in convergence_table(2, 1.5, [1, 10, 30, 60]).rows:
    print(row.r, row.value.method, f"{row.gap:.3e}")
