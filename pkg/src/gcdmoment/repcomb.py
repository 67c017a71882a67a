"""Truncated series f_e^r(x) = sum_{k<e} rH_k x^k and the identities it satisfies.

Scalars come in two kinds and are never mixed:

* exact: ``int`` or ``fractions.Fraction``, normalised to ``Fraction``;
* floating: ``float`` or ``complex``, normalised to ``complex``.

The identity checks return residuals (left side minus right side) rather than
booleans, so the floating path can report how far off it is.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

from .errors import DomainError
from .numth import binomial

__all__ = [
    "Scalar",
    "as_scalar",
    "is_exact",
    "coefficients",
    "eval_f",
    "eval_f_abs",
    "f_at_one",
    "residual_10a",
    "residual_10b",
    "residual_10c",
]

Scalar = Union[Fraction, complex]


def as_scalar(x) -> Scalar:
    if isinstance(x, bool):
        raise DomainError("booleans are not scalars")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, (float, complex)):
        return complex(x)
    raise DomainError(f"unsupported scalar {x!r}")


def is_exact(x: Scalar) -> bool:
    return isinstance(x, Fraction)


def _same_kind(*xs) -> list[Scalar]:
    out = [as_scalar(x) for x in xs]
    if len({is_exact(x) for x in out}) > 1:
        raise DomainError("cannot mix exact and floating scalars")
    return out


def _check_index(name: str, v) -> int:
    if isinstance(v, bool) or not isinstance(v, int) or v < 1:
        raise DomainError(f"{name} must be a positive integer, got {v!r}")
    return v


def coefficients(e: int, r: int) -> list[int]:
    """The e coefficients rH_0, ..., rH_{e-1}, built by consecutive ratios."""
    e = _check_index("e", e)
    r = _check_index("r", r)
    out = [1]
    c = 1
    for k in range(1, e):
        # rH_k = rH_{k-1} * (r + k - 1) / k, exact at every step
        c = c * (r + k - 1) // k
        out.append(c)
    return out


def _horner(coeffs: list[int], x: Scalar) -> Scalar:
    if is_exact(x):
        # integer Horner on num/den, one normalisation at the end
        num, den = x.numerator, x.denominator
        acc = coeffs[-1]
        dpow = 1
        for c in reversed(coeffs[:-1]):
            dpow *= den
            acc = acc * num + c * dpow
        return Fraction(acc, dpow)
    acc = complex(coeffs[-1])
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def eval_f(e: int, r: int, x) -> Scalar:
    """Evaluate f_e^r at x, exactly for exact x."""
    return _horner(coefficients(e, r), as_scalar(x))


def eval_f_abs(e: int, r: int, x) -> float:
    """sum_k rH_k |x|^k, the magnitude scale of eval_f(e, r, x) in floating point."""
    ax = abs(complex(as_scalar(x)))
    return float(sum(c * ax**k for k, c in enumerate(coefficients(e, r))))


def f_at_one(e: int, r: int) -> int:
    """f_e^r(1) in closed form: C(e + r - 1, r)."""
    e = _check_index("e", e)
    r = _check_index("r", r)
    return binomial(e + r - 1, r)


def residual_10a(e: int, r: int) -> int:
    """f_e^r(1) summed term by term, minus its closed form."""
    total = eval_f(e, r, 1)
    return int(total) - f_at_one(e, r)


def residual_10c(e: int, r: int, x) -> Scalar:
    """(1-x)^r f_e^r(x) + x^e f_r^e(1-x) - 1, identically zero."""
    e = _check_index("e", e)
    r = _check_index("r", r)
    x = as_scalar(x)
    one = Fraction(1) if is_exact(x) else 1.0
    return (one - x) ** r * eval_f(e, r, x) + x**e * eval_f(r, e, one - x) - one


def residual_10b(e: int, r: int, x, y) -> Scalar:
    """Left minus right side of

        (1-x)^r f_e^r(y) + y^e f_r^e(1-x)
            = (1-x)^r (f_e^r(y) - y^e f_e^r(1)) + y^e f_{r+1}^e(1-x)
    """
    e = _check_index("e", e)
    r = _check_index("r", r)
    x, y = _same_kind(x, y)
    one = Fraction(1) if is_exact(x) else 1.0
    u = one - x
    fy = eval_f(e, r, y)
    lhs = u**r * fy + y**e * eval_f(r, e, u)
    rhs = u**r * (fy - y**e * f_at_one(e, r)) + y**e * eval_f(r + 1, e, u)
    return lhs - rhs
