"""Counts N^r(f) of r-tuples with gcd(n, k_1...k_r) = f, and the law of that gcd.

Over Z/p^eZ the count is nonzero only at f = p^d (0 <= d <= e):

    d < e :  p^(r(e-1)-d) (p-1)^r rH_d
    d = e :  p^(e(r-1)) sum_{l<r} eH_l (1 - 1/p)^l

Over Z/nZ the law factors across the prime powers of n, so the pmf is a product
over valuation vectors (d_p)_{p|n}.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError, GuardExceeded
from .numth import factorize, is_prime, repeated_combination
from .repcomb import eval_f

__all__ = [
    "DEFAULT_GUARD",
    "resolve_guard",
    "CountHistogram",
    "Pmf",
    "count_prime_power",
    "count_closed",
    "count_brute",
    "pmf",
]

DEFAULT_GUARD = 10**8


def resolve_guard(guard: int | None = None) -> int:
    """Explicit guard, else $GCDMOMENT_GUARD, else DEFAULT_GUARD."""
    if guard is not None:
        return int(guard)
    env = os.environ.get("GCDMOMENT_GUARD")
    return int(env) if env else DEFAULT_GUARD


@dataclass
class CountHistogram:
    n: int
    r: int
    counts: dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())


@dataclass
class Pmf:
    n: int
    r: int
    mass: dict[int, Fraction] = field(default_factory=dict)

    def expectation(self, w: int = 1) -> Fraction:
        return sum((m * Fraction(f) ** w for f, m in self.mass.items()), Fraction(0))


def _check_pos(name, v):
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise DomainError(f"{name} must be a positive integer, got {v!r}")


def _check_prime_power(p, e, r):
    _check_pos("e", e)
    _check_pos("r", r)
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise DomainError(f"p must be prime, got {p!r}")


def count_prime_power(p: int, e: int, r: int, d: int) -> int:
    """N^r(p^d) over Z/p^eZ, as an exact integer."""
    _check_prime_power(p, e, r)
    if isinstance(d, bool) or not isinstance(d, int) or not 0 <= d <= e:
        raise DomainError(f"d must lie in [0, {e}], got {d!r}")
    if d < e:
        # r(e-1) >= e-1 >= d, so the power of p is a nonnegative integer
        return p ** (r * (e - 1) - d) * (p - 1) ** r * repeated_combination(r, d)
    value = p ** (e * (r - 1)) * eval_f(r, e, 1 - Fraction(1, p))
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral count {value} at p={p}, e={e}, r={r}")
    return value.numerator


def count_closed(p: int, e: int, r: int) -> CountHistogram:
    counts = {p**d: count_prime_power(p, e, r, d) for d in range(e + 1)}
    return CountHistogram(p**e, r, {f: c for f, c in counts.items() if c})


def count_brute(p: int, e: int, r: int, guard: int | None = None) -> CountHistogram:
    """Classify every tuple in {1..p^e}^r by gcd(p^e, k_1...k_r).

    The product is never formed: only min(e, sum of ord_p(k_i)) is tracked.
    """
    _check_prime_power(p, e, r)
    q = p**e
    guard = resolve_guard(guard)
    if q**r > guard:
        raise GuardExceeded(q**r, guard)
    vals = []
    for k in range(1, q + 1):
        v = 0
        while v < e and k % p == 0:
            k //= p
            v += 1
        vals.append(v)
    by_d = [0] * (e + 1)
    for combo in itertools.product(vals, repeat=r):
        s = 0
        for v in combo:
            s += v
            if s >= e:
                s = e
                break
        by_d[s] += 1
    return CountHistogram(q, r, {p**d: c for d, c in enumerate(by_d) if c})


def pmf(n: int, r: int) -> Pmf:
    """Exact law of gcd(n, k_1...k_r) for uniform (k_1, ..., k_r) in {1..n}^r."""
    _check_pos("n", n)
    _check_pos("r", r)
    fac = factorize(n)
    local = []
    for p, e in fac:
        size = p ** (r * e)
        local.append([(p**d, Fraction(count_prime_power(p, e, r, d), size)) for d in range(e + 1)])
    mass: dict[int, Fraction] = {}
    for choice in itertools.product(*local):
        f = math.prod(f for f, _ in choice)
        m = math.prod((m for _, m in choice), start=Fraction(1))
        if m:
            mass[f] = m
    return Pmf(n, r, dict(sorted(mass.items())))
