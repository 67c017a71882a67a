# %% [markdown]
# # Higher and complex moments
#
# The same per-prime machinery gives E[X^w] for any integer w exactly and for
# complex w in floating point. At exponents where 1 = p^(w-1) the branch formula
# divides by zero; the two-polynomial form is still finite there.

# %%
import math

from gcdmoment import moment_brute, moment_closed, moment_universal, variance

n, r = 12, 3
for w in (-1, 0, 1, 2, 3):
    print(f"E[X^{w:2d}] = {moment_closed(n, r, w).value}")
print("V[X] =", variance(n, r), "~", float(variance(n, r)))

# %%
w = 0.5 + 0.5j
print("closed ", moment_closed(n, 2, w).value)
print("brute  ", moment_brute(n, 2, w).value)
print("2nd form", moment_closed(n, 2, w, form=2).value)

# %% [markdown]
# For n = 8 every gcd is a power of 2, so at w = 1 + 2*pi*i/ln 2 we have
# gcd^w = gcd and the moment must equal the w = 1 value.

# %%
w = 1 + 2j * math.pi / math.log(2)
res = moment_closed(8, 3, w)
print(res.method, res.value, "vs", moment_universal(8, 3, 1).value)
