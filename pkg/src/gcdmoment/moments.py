"""Moments E[X^w] of X = gcd(n, k_1 k_2 ... k_r), (k_1, ..., k_r) uniform on {1..n}^r.

Every evaluator factors over the primes of n. Writing e = ord_p(n),
a = 1 - 1/p, x = p^(w-1) and c = 1 - x, the local factor is

    w = 1     :  sum_{l=0}^{r} eH_l a^l
    w != 1    :  (a/c)^r + x^e sum_{l<r} eH_l (a^l - (a/c)^r c^l)           (form 1)
              =  (a/c)^r + x^e a^r sum_{l<r} eH_l (a^(l-r) - c^(l-r))       (form 2)
    any w     :  a^r f_e^r(x) + x^e f_r^e(a)                                 (universal)

so the cost is linear in r, against n^r terms for direct enumeration.

Exponents are either Python ``int`` (exact path, results are ``Fraction``) or
``complex``/``float`` (floating path, results are ``complex``). A complex value with
zero imaginary part is not promoted to the exact path.
"""

from __future__ import annotations

import cmath
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

import numpy as np

from .counting import resolve_guard
from .errors import DomainError, GuardExceeded
from .numth import factorize, repeated_combination
from .repcomb import eval_f

__all__ = [
    "Exponent",
    "MomentResult",
    "METHODS",
    "SINGULAR_TOL",
    "as_exponent",
    "power",
    "moment_brute",
    "moment_closed",
    "moment_universal",
    "moment_kurokawa_ochiai",
    "moment_kurokawa",
    "variance",
    "monte_carlo",
    "splitmix64",
]

Exponent = Union[int, complex]
Value = Union[Fraction, complex]

METHODS = ("closed-branch", "closed-universal", "brute", "kurokawa-ochiai", "kurokawa", "monte-carlo")

# the w != 1 branch divides by 1 - p^(w-1); below this modulus the universal form is used
SINGULAR_TOL = 1e-6


@dataclass(frozen=True)
class MomentResult:
    value: Value
    method: str
    samples: Optional[int] = None
    stderr: Optional[float] = None

    def __post_init__(self):
        if self.method not in METHODS:
            raise DomainError(f"unknown method label {self.method!r}")
        if (self.stderr is not None) != (self.method == "monte-carlo"):
            raise DomainError("a standard error accompanies monte-carlo results only")

    @property
    def exact(self) -> bool:
        return isinstance(self.value, Fraction)


def as_exponent(w) -> Exponent:
    if isinstance(w, bool):
        raise DomainError("w must be an integer or complex number, not bool")
    if isinstance(w, int):
        return w
    if isinstance(w, (float, complex)):
        w = complex(w)
        if not (cmath.isfinite(w)):
            raise DomainError(f"w must be finite, got {w}")
        return w
    raise DomainError(f"w must be an int (exact) or complex (floating), got {w!r}")


def power(base: int, w: Exponent) -> Value:
    """base^w for a positive integer base: exact for int w, principal branch otherwise."""
    if isinstance(w, int):
        return Fraction(base) ** w
    if base == 1:
        return 1 + 0j
    return cmath.exp(w * math.log(base))


def _check_nr(n, r):
    for name, v in (("n", n), ("r", r)):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise DomainError(f"{name} must be a positive integer, got {v!r}")


def _one(w: Exponent) -> Value:
    return Fraction(1) if isinstance(w, int) else 1 + 0j


def _a(p: int, w: Exponent) -> Value:
    """1 - 1/p in the arithmetic of w's path."""
    return 1 - Fraction(1, p) if isinstance(w, int) else complex(1 - 1 / p)


# -- local factors -----------------------------------------------------------

def _local_w1(p, e, r):
    return eval_f(r + 1, e, 1 - Fraction(1, p))


def _local_form1(p, e, r, w):
    a = _a(p, w)
    x = power(p, w - 1)
    c = 1 - x
    big_a = (a / c) ** r
    # sum_{l<r} eH_l (a^l - A^r c^l) = f_r^e(a) - A^r f_r^e(c)
    return big_a + x**e * (eval_f(r, e, a) - big_a * eval_f(r, e, c))


def _local_form2(p, e, r, w):
    a = _a(p, w)
    x = power(p, w - 1)
    c = 1 - x
    ia, ic = 1 / a, 1 / c
    pa, pc = ia**r, ic**r  # a^(l-r), c^(l-r) at l = 0
    coef = 1
    s = _one(w) * 0
    for l in range(r):
        s += coef * (pa - pc)
        coef = coef * (e + l) // (l + 1)
        pa *= a
        pc *= c
    return (a / c) ** r + x**e * a**r * s


def _local_universal(p, e, r, w):
    a = _a(p, w)
    x = power(p, w - 1)
    return a**r * eval_f(e, r, x) + x**e * eval_f(r, e, a)


def _product(fac, fn) -> Value:
    out = None
    for p, e in fac:
        v = fn(p, e)
        out = v if out is None else out * v
    return out


# -- evaluators --------------------------------------------------------------

def moment_universal(n: int, r: int, w) -> MomentResult:
    """E[X^w] from the two-polynomial form; finite for every w."""
    _check_nr(n, r)
    w = as_exponent(w)
    fac = factorize(n)
    if not len(fac):
        return MomentResult(_one(w), "closed-universal")
    return MomentResult(_product(fac, lambda p, e: _local_universal(p, e, r, w)), "closed-universal")


def singular_primes(n: int, w, tol: float = SINGULAR_TOL) -> list[int]:
    """Primes p | n where |1 - p^(w-1)| < tol (the w != 1 branch is unusable there)."""
    w = as_exponent(w)
    if isinstance(w, int):
        return [p for p, _ in factorize(n)] if w == 1 else []
    return [p for p, _ in factorize(n) if abs(1 - power(p, w - 1)) < tol]


def moment_closed(n: int, r: int, w, form: int = 1, tol: float = SINGULAR_TOL) -> MomentResult:
    """E[X^w] from the per-prime branch formula.

    ``form`` picks which of the two equivalent w != 1 expressions is evaluated.
    Exact w = 1 takes the w = 1 branch; on the floating path a prime with
    |1 - p^(w-1)| < tol hands the whole evaluation to moment_universal.
    """
    _check_nr(n, r)
    w = as_exponent(w)
    if form not in (1, 2):
        raise DomainError(f"form must be 1 or 2, got {form!r}")
    fac = factorize(n)
    if not len(fac):
        return MomentResult(_one(w), "closed-branch")
    if isinstance(w, int) and w == 1:
        return MomentResult(_product(fac, lambda p, e: _local_w1(p, e, r)), "closed-branch")
    if not isinstance(w, int) and singular_primes(n, w, tol):
        return moment_universal(n, r, w)
    local = _local_form1 if form == 1 else _local_form2
    return MomentResult(_product(fac, lambda p, e: local(p, e, r, w)), "closed-branch")


def moment_kurokawa_ochiai(n: int, r: int) -> MomentResult:
    """E[X] = prod_p sum_{l=0}^{r} ord_p(n)H_l (1 - 1/p)^l, exactly."""
    _check_nr(n, r)
    out = Fraction(1)
    for p, e in factorize(n):
        a = 1 - Fraction(1, p)
        out *= sum((repeated_combination(e, l) * a**l for l in range(r + 1)), Fraction(0))
    return MomentResult(out, "kurokawa-ochiai")


def moment_kurokawa(n: int) -> MomentResult:
    """(1/n) sum_{k<=n} gcd(n, k) = prod_p (1 + (1 - 1/p) ord_p(n))."""
    _check_nr(n, 1)
    out = Fraction(1)
    for p, e in factorize(n):
        out *= 1 + (1 - Fraction(1, p)) * e
    return MomentResult(out, "kurokawa")


def gcd_histogram(n: int, r: int, guard: int | None = None) -> Counter:
    """Exhaustive count of gcd(n, k_1...k_r) over {1..n}^r.

    Each k contributes its valuation vector (ord_p(k))_{p|n}; the gcd is
    prod p^min(ord_p(n), sum of valuations), so the product is never formed.
    """
    _check_nr(n, r)
    guard = resolve_guard(guard)
    if n**r > guard:
        raise GuardExceeded(n**r, guard)
    fac = factorize(n)
    primes = fac.primes
    caps = tuple(e for _, e in fac)
    vecs = []
    for k in range(1, n + 1):
        v = []
        for p, e in fac:
            d = 0
            while d < e and k % p == 0:
                k //= p
                d += 1
            v.append(d)
        vecs.append(tuple(v))
    by_vec = Counter(
        tuple(min(cap, sum(col)) for cap, col in zip(caps, zip(*combo)))
        for combo in itertools.product(vecs, repeat=r)
    )
    hist = Counter()
    for vec, cnt in by_vec.items():
        hist[math.prod(p**d for p, d in zip(primes, vec))] += cnt
    return hist


def moment_brute(n: int, r: int, w, guard: int | None = None) -> MomentResult:
    """E[X^w] by enumerating all n^r tuples."""
    w = as_exponent(w)
    hist = gcd_histogram(n, r, guard)
    if isinstance(w, int):
        total = sum((cnt * Fraction(g) ** w for g, cnt in hist.items()), Fraction(0))
        return MomentResult(total / n**r, "brute")
    total = sum(cnt * power(g, w) for g, cnt in sorted(hist.items()))
    return MomentResult(complex(total) / n**r, "brute")


def variance(n: int, r: int) -> Fraction:
    """V[X] = E[X^2] - E[X]^2, exactly."""
    m1 = moment_closed(n, r, 1).value
    m2 = moment_closed(n, r, 2).value
    return m2 - m1 * m1


# -- Monte Carlo -------------------------------------------------------------

_MASK64 = (1 << 64) - 1
_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def splitmix64(seed: int, start: int, count: int) -> np.ndarray:
    """Outputs start+1 .. start+count of SplitMix64 seeded with ``seed``.

    Output i is mix(seed + i * 0x9E3779B97F4A7C15 mod 2^64) with
    mix(z) = z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
             z *= 0x94D049BB133111EB; z ^= z >> 31   (all mod 2^64).
    """
    idx = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    z = np.uint64(seed & _MASK64) + idx * _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


_CHUNK = 1 << 18


def _draw_gcds(n: int, r: int, seed: int, first: int, size: int) -> np.ndarray:
    # sample s takes stream outputs s*r+1 .. s*r+r; k = 1 + (output mod n)
    raw = splitmix64(seed, first * r, size * r).reshape(size, r)
    if n < 1 << 31:
        ks = (raw % np.uint64(n)).astype(np.int64) + 1
        m = ks[:, 0] % n
        for i in range(1, r):
            m = (m * ks[:, i]) % n
        return np.gcd(m, n)
    out = np.empty(size, dtype=object)
    for s in range(size):
        m = 1
        for z in raw[s]:
            m = m * (int(z) % n + 1) % n
        out[s] = math.gcd(m, n)
    return out


def monte_carlo(n: int, r: int, w, samples: int, seed: int) -> MomentResult:
    """Sample mean of gcd(n, k_1...k_r)^w with its standard error.

    Deterministic for a fixed seed. Chunks are reduced in order with the
    pairwise mean/variance update, so the result does not depend on memory.
    The modulo mapping to {1..n} carries a bias below n / 2^64.
    """
    _check_nr(n, r)
    w = as_exponent(w)
    if isinstance(samples, bool) or not isinstance(samples, int) or samples < 1:
        raise DomainError(f"samples must be a positive integer, got {samples!r}")
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise DomainError(f"seed must be an integer, got {seed!r}")
    count, mean, m2 = 0, 0j, 0.0
    for first in range(0, samples, _CHUNK):
        size = min(_CHUNK, samples - first)
        g = _draw_gcds(n, r, seed, first, size).astype(np.float64)
        if isinstance(w, int):
            x = (g ** float(w)).astype(np.complex128)
        else:
            x = np.exp(w * np.log(g))
        cmean = complex(x.mean())
        cm2 = float(np.sum(np.abs(x - cmean) ** 2))
        total = count + size
        delta = cmean - mean
        mean = mean + delta * size / total
        m2 = m2 + cm2 + abs(delta) ** 2 * count * size / total
        count = total
    stderr = math.sqrt(m2 / (count - 1) / count) if count > 1 else 0.0
    return MomentResult(complex(mean), "monte-carlo", samples=count, stderr=stderr)
