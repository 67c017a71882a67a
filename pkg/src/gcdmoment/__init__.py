"""Moments of gcd(n, k_1 k_2 ... k_r) over uniform tuples in {1..n}^r.

Closed-form Euler-product evaluation (linear in r), an exhaustive oracle
(exponential in r), a seeded Monte Carlo estimator, the exact law of the gcd,
and the r -> infinity limit.
"""

from .convergence import (
    ConvergenceReport,
    convergence_condition,
    convergence_table,
    limit_value,
)
from .counting import CountHistogram, Pmf, count_brute, count_closed, count_prime_power, pmf
from .errors import DomainError, GuardExceeded
from .moments import (
    MomentResult,
    moment_brute,
    moment_closed,
    moment_kurokawa,
    moment_kurokawa_ochiai,
    moment_universal,
    monte_carlo,
    variance,
)
from .numth import Factorization, binomial, factorize, gcd, ord_p, repeated_combination
from .repcomb import eval_f, f_at_one, residual_10a, residual_10b, residual_10c

__version__ = "0.1.0"
