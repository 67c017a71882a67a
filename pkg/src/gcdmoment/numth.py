"""Arithmetic primitives: factorization, valuations, gcd and multiset coefficients."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .errors import DomainError

__all__ = [
    "Factorization",
    "factorize",
    "ord_p",
    "gcd",
    "binomial",
    "repeated_combination",
    "is_prime",
]

TRIAL_LIMIT = 10**6

# Deterministic for n < 3.3e24; a strong probable-prime test above that.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of n as ``(prime, exponent)`` pairs, ascending by prime."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        last = 1
        for p, e in self.entries:
            if p <= last or e < 1:
                raise DomainError(f"malformed factorization entry ({p}, {e})")
            last = p

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    @property
    def value(self) -> int:
        return math.prod(p**e for p, e in self.entries)

    def exponent(self, p: int) -> int:
        for q, e in self.entries:
            if q == p:
                return e
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __eq__(self, other):
        if isinstance(other, dict):
            return self.as_dict() == other
        if isinstance(other, Factorization):
            return self.entries == other.entries
        return NotImplemented

    __hash__ = object.__hash__


def _check_int(name: str, value, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < minimum:
        raise DomainError(f"{name} must be >= {minimum}, got {value}")
    return value


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set; exact below 3.3e24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """Return a nontrivial factor of the odd composite n."""
    for c in range(1, n):
        y, m, g, q, r = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # the batched product overshot; step one at a time from the saved point
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise ArithmeticError(f"Pollard rho failed on {n}")


def _split(n: int, out: dict[int, int]) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


def factorize(n: int) -> Factorization:
    """Factor n >= 1.

    Trial division by 2, 3 and then 6k +/- 1 up to 10**6; any cofactor left over
    is certified with Miller-Rabin or split with Brent's variant of Pollard rho.
    """
    n = _check_int("n", n, 1)
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    while d <= TRIAL_LIMIT and d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        if d * d > n:
            out[n] = out.get(n, 0) + 1
        else:
            _split(n, out)
    return Factorization(tuple(sorted(out.items())))


def ord_p(n: int, p: int) -> int:
    """The exponent of the prime p in n."""
    n = _check_int("n", n, 1)
    p = _check_int("p", p, 2)
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def gcd(a: int, b: int) -> int:
    a = _check_int("a", a, 0)
    b = _check_int("b", b, 0)
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); zero when k > n."""
    n = _check_int("n", n, 0)
    k = _check_int("k", k, 0)
    if k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        # out * (n - k + i) is divisible by i at every step
        out = out * (n - k + i) // i
    return out


def repeated_combination(m: int, r: int) -> int:
    """Number of degree-r monomials in m variables, i.e. C(m + r - 1, r)."""
    m = _check_int("m", m, 0)
    r = _check_int("r", r, 0)
    if r == 0:
        return 1
    if m == 0:
        return 0
    return binomial(m + r - 1, r)
