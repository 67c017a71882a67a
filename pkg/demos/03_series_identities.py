# %% [markdown]
# # The truncated series f_e^r
#
# f_e^r(x) is the degree e-1 truncation of (1-x)^(-r). Three identities tie it
# to binomials and to its "dual" f_r^e(1-x); we check them exactly at random
# rational points, then look at what double precision does with the same sums.

# %%
import random
from fractions import Fraction

from gcdmoment.numth import binomial
from gcdmoment.repcomb import eval_f, f_at_one, residual_10b, residual_10c

print("f_3^2(x) at x = 1/3:", eval_f(3, 2, Fraction(1, 3)))
print("f_5^4(1) =", f_at_one(5, 4), "= C(8, 4) =", binomial(8, 4))

# %%
rng = random.Random(0)
points = [Fraction(rng.randint(-50, 50), rng.choice([d for d in range(-50, 51) if d])) for _ in range(50)]
nonzero = sum(residual_10c(e, r, x) != 0 for e in range(1, 9) for r in range(1, 9) for x in points)
nonzero += sum(residual_10b(e, r, x, y) != 0 for e in range(1, 9) for r in range(1, 9)
               for x, y in zip(points, reversed(points)))
print("nonzero exact residuals:", nonzero)

# %% [markdown]
# In floating point the identity is a cancellation between large terms, so the
# residual grows with |x|, e and r even though the exact value is zero.

# %%
for x in (0.25 + 0.1j, 1.2 - 0.4j, -1.9 + 0.1j):
    print(x, [f"{abs(residual_10c(k, k, x)):.1e}" for k in (2, 6, 12)])
