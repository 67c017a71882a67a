import math
from fractions import Fraction
from itertools import product

import pytest

from gcdmoment.errors import DomainError, GuardExceeded
from gcdmoment.moments import (
    MomentResult,
    moment_brute,
    moment_closed,
    moment_kurokawa,
    moment_kurokawa_ochiai,
    moment_universal,
    monte_carlo,
    power,
    splitmix64,
    variance,
)
from gcdmoment.numth import is_prime


def mean_over_window(n, r, w, width):
    # average over {1..width}^r with plain integer products
    total = Fraction(0)
    for ks in product(range(1, width + 1), repeat=r):
        total += Fraction(math.gcd(n, math.prod(ks))) ** w
    return total / width**r


def rel(a, b):
    return abs(complex(a) - complex(b)) / max(1.0, abs(complex(b)))


def test_worked_examples():
    assert moment_brute(12, 1, 1).value == Fraction(10, 3)
    assert moment_brute(6, 2, 1).value == Fraction(133, 36)
    assert moment_brute(4, 1, 2).value == Fraction(11, 2)
    assert moment_closed(6, 2, 1).value == Fraction(133, 36) == Fraction(7, 4) * Fraction(19, 9)
    assert moment_closed(4, 1, 2).value == Fraction(11, 2)
    assert moment_universal(12, 1, 1).value == Fraction(10, 3)


def test_w0_is_one():
    for n in (1, 2, 12, 360):
        for r in (1, 3, 10):
            assert moment_closed(n, r, 0).value == 1
            assert moment_universal(n, r, 0).value == 1


def test_n1_is_one():
    for w in (-2, 0, 3, 0.5 + 2j):
        assert moment_universal(1, 5, w).value == 1
        assert moment_closed(1, 5, w).value == 1


def test_oracle_equivalence():
    for n in range(1, 31):
        for r in range(1, 4):
            for w in (-2, -1, 0, 1, 2, 3):
                closed = moment_closed(n, r, w).value
                assert closed == moment_universal(n, r, w).value
                assert closed == moment_brute(n, r, w).value
                assert isinstance(closed, Fraction)


def test_brute_matches_product_oracle():
    for n, r, w in [(12, 2, 1), (18, 2, 2), (8, 3, -1), (30, 1, 3)]:
        assert moment_brute(n, r, w).value == mean_over_window(n, r, w, n)


def test_specialization_chain():
    for n in range(1, 10**4 + 1):
        a = moment_kurokawa(n).value
        assert a == moment_kurokawa_ochiai(n, 1).value == moment_closed(n, 1, 1).value


def test_kurokawa_examples():
    assert moment_kurokawa(12).value == Fraction(10, 3)
    assert moment_kurokawa(1).value == 1
    for p in filter(is_prime, range(2, 200)):
        assert moment_kurokawa(p).value == Fraction(2 * p - 1, p)
    assert moment_kurokawa_ochiai(6, 2).value == Fraction(133, 36)
    assert moment_kurokawa_ochiai(12, 1).value == Fraction(10, 3)
    assert moment_kurokawa_ochiai(1, 5).value == 1


def test_multiplicativity():
    for n1 in range(1, 101):
        for n2 in range(n1, 101):
            if math.gcd(n1, n2) != 1:
                continue
            for r in (1, 2, 3):
                for w in (1, 2):
                    assert moment_closed(n1 * n2, r, w).value == (
                        moment_closed(n1, r, w).value * moment_closed(n2, r, w).value
                    )


def test_periodicity_window():
    for n in range(1, 21):
        assert mean_over_window(n, 2, 1, 2 * n) == moment_brute(n, 2, 1).value


def test_two_forms_agree():
    for n in range(1, 31):
        for r in range(1, 5):
            for w in (2, 3, -1):
                assert moment_closed(n, r, w, form=1).value == moment_closed(n, r, w, form=2).value
            for w in (0.5 + 0.5j, 2 + 3j):
                assert rel(moment_closed(n, r, w, form=1).value, moment_closed(n, r, w, form=2).value) < 1e-10


def test_complex_path_matches_exact():
    for n in range(1, 21):
        for r in range(1, 4):
            exact = moment_closed(n, r, 2).value
            approx = moment_closed(n, r, 2 + 0j).value
            assert isinstance(approx, complex)
            assert rel(approx, exact) < 1e-10


def test_complex_closed_matches_brute():
    for n in (6, 12, 20):
        for r in (1, 2):
            for w in (0.5 + 0.5j, -1.5 + 2j, 2.5):
                assert rel(moment_closed(n, r, w).value, moment_brute(n, r, w).value) < 1e-10
                assert rel(moment_universal(n, r, w).value, moment_brute(n, r, w).value) < 1e-10


def test_singular_exponent_delegates():
    w = 1 + 2j * math.pi / math.log(2)
    exact = moment_universal(8, 2, 1).value
    res = moment_closed(8, 2, w)
    assert res.method == "closed-universal"
    assert rel(res.value, exact) < 1e-9
    # complex w = 1 is singular for every prime
    assert moment_closed(12, 3, 1 + 0j).method == "closed-universal"
    assert rel(moment_closed(12, 3, 1 + 0j).value, moment_closed(12, 3, 1).value) < 1e-12


def test_variance_examples():
    assert variance(1, 4) == 0
    assert variance(4, 1) == Fraction(3, 2)
    assert variance(2, 1) == Fraction(1, 4)


def test_variance_nonnegative_and_matches_brute():
    for n in range(1, 25):
        for r in (1, 2):
            v = variance(n, r)
            assert v >= 0
            assert v == moment_brute(n, r, 2).value - moment_brute(n, r, 1).value ** 2


def test_power_branch():
    assert power(4, -1) == Fraction(1, 4)
    assert abs(power(2, 0.5) - math.sqrt(2)) < 1e-15


def test_rejects_bad_arguments():
    for args in [(0, 1, 1), (3, 0, 1), (3, 1, Fraction(1, 2)), (3, 1, True)]:
        with pytest.raises(DomainError):
            moment_closed(*args)
    with pytest.raises(DomainError):
        moment_closed(6, 2, 2, form=3)
    with pytest.raises(GuardExceeded):
        moment_brute(30, 6, 1)
    with pytest.raises(DomainError):
        MomentResult(Fraction(1), "closed-branch", stderr=0.1)


def test_splitmix64_reference_values():
    # first outputs for seed 1234567, as published with the generator
    out = splitmix64(1234567, 0, 5)
    assert [int(x) for x in out] == [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ]


def test_monte_carlo_trivial_and_deterministic():
    one = monte_carlo(1, 4, 2.5 + 1j, 1000, 5)
    assert one.value == 1 and one.stderr == 0
    a = monte_carlo(30, 3, 2, 50_000, 42)
    b = monte_carlo(30, 3, 2, 50_000, 42)
    assert a == b
    assert monte_carlo(30, 3, 2, 50_000, 43) != a


def test_monte_carlo_statistics():
    for n, r, w in [(6, 2, 1), (12, 3, 2), (10, 2, 0.5 + 1j)]:
        exact = moment_closed(n, r, w).value
        res = monte_carlo(n, r, w, 200_000, 11)
        assert res.samples == 200_000
        assert abs(res.value - complex(exact)) < 5 * res.stderr


def test_monte_carlo_large_modulus_fallback():
    n = (1 << 31) + 11
    res = monte_carlo(n, 2, 1, 200, 3)
    assert res.value.real >= 1
