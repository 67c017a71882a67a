# %% [markdown]
# # The average gcd, three ways
#
# For n = 12 and a single uniform k in {1..12}, the mean of gcd(12, k) is 10/3.
# With two draws from {1..6}, the mean of gcd(6, k1*k2) is 133/36.
# We get both numbers by enumeration, by the per-prime product, and by the
# specialised r = 1 and w = 1 formulas.

# %%
from math import gcd

from gcdmoment import moment_brute, moment_closed, moment_kurokawa, moment_kurokawa_ochiai

print([gcd(12, k) for k in range(1, 13)], "sum", sum(gcd(12, k) for k in range(1, 13)))

# %%
for label, res in [
    ("enumeration", moment_brute(12, 1, 1)),
    ("closed form", moment_closed(12, 1, 1)),
    ("r = 1 product", moment_kurokawa(12)),
]:
    print(f"{label:15s} {res.value}  ({res.method})")

# %% [markdown]
# The r = 2 case factors as 7/4 * 19/9: one factor per prime of 6.

# %%
for label, res in [
    ("enumeration", moment_brute(6, 2, 1)),
    ("closed form", moment_closed(6, 2, 1)),
    ("w = 1 product", moment_kurokawa_ochiai(6, 2)),
]:
    print(f"{label:15s} {res.value}")
print("per prime:", moment_closed(2, 2, 1).value, "*", moment_closed(3, 2, 1).value)
