"""Behaviour of E[X^w] as r grows: the limit n^w and tables of the gap to it."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .errors import DomainError
from .moments import (
    Exponent,
    MomentResult,
    as_exponent,
    moment_closed,
    moment_universal,
    power,
    singular_primes,
)
from .numth import factorize

__all__ = [
    "ConvergenceCondition",
    "ConvergenceRow",
    "ConvergenceReport",
    "limit_value",
    "convergence_condition",
    "convergence_table",
]


@dataclass(frozen=True)
class ConvergenceCondition:
    """``guaranteed``: w = 1 or |p^w - 1| > 1 for every p | n.
    ``conservative``: w = 1 or |1 - p^(w-1)| > 1 for every p | n.

    ``per_prime`` maps p to {"abs_pw_minus_1": |p^w - 1|, "abs_pw1_minus_1": |p^(w-1) - 1|}.
    """

    guaranteed: bool
    conservative: bool
    per_prime: dict[int, dict[str, float]] = field(default_factory=dict)


@dataclass(frozen=True)
class ConvergenceRow:
    r: int
    value: MomentResult
    gap: Union[Fraction, float]


@dataclass
class ConvergenceReport:
    n: int
    w: Exponent
    limit: Union[Fraction, complex]
    guaranteed: bool
    conservative: bool
    rows: list[ConvergenceRow] = field(default_factory=list)


def limit_value(n: int, w) -> Union[Fraction, complex]:
    """n^w, exact for integer w."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    return power(n, as_exponent(w))


def convergence_condition(n: int, w) -> ConvergenceCondition:
    w = as_exponent(w)
    per_prime = {}
    for p, _ in factorize(n):
        per_prime[p] = {
            "abs_pw_minus_1": abs(complex(power(p, w)) - 1),
            "abs_pw1_minus_1": abs(complex(power(p, w - 1)) - 1),
        }
    exact_one = isinstance(w, int) and w == 1
    guaranteed = exact_one or all(d["abs_pw_minus_1"] > 1 for d in per_prime.values())
    conservative = exact_one or all(d["abs_pw1_minus_1"] > 1 for d in per_prime.values())
    return ConvergenceCondition(guaranteed, conservative, per_prime)


def _unstable_branch(n: int, w: complex) -> bool:
    # (a/c)^r grows without bound when |1 - p^(w-1)| < 1 - 1/p; the branch form
    # then relies on cancellation that floating point cannot deliver
    return any(abs(1 - power(p, w - 1)) <= 1 - 1 / p for p, _ in factorize(n))


def convergence_table(n: int, w, r_values) -> ConvergenceReport:
    """Evaluate E[X^w] at each r and its distance to n^w."""
    w = as_exponent(w)
    r_values = list(r_values)
    if not r_values:
        raise DomainError("r_values must be nonempty")
    if any(isinstance(r, bool) or not isinstance(r, int) or r < 1 for r in r_values):
        raise DomainError("every r must be a positive integer")
    if any(b <= a for a, b in zip(r_values, r_values[1:])):
        raise DomainError("r_values must be strictly increasing")
    limit = limit_value(n, w)
    cond = convergence_condition(n, w)
    universal = not isinstance(w, int) and (singular_primes(n, w) or _unstable_branch(n, w))
    rows = []
    for r in r_values:
        res = moment_universal(n, r, w) if universal else moment_closed(n, r, w)
        gap = abs(res.value - limit)
        rows.append(ConvergenceRow(r, res, gap if isinstance(w, int) else float(gap)))
    return ConvergenceReport(n, w, limit, cond.guaranteed, cond.conservative, rows)
