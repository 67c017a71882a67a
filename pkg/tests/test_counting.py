import math
from fractions import Fraction
from itertools import product

import pytest

from gcdmoment.counting import (
    DEFAULT_GUARD,
    count_brute,
    count_closed,
    count_prime_power,
    pmf,
    resolve_guard,
)
from gcdmoment.errors import DomainError, GuardExceeded
from gcdmoment.moments import moment_closed


def histogram_by_products(n, r):
    # independent oracle: full products, plain gcd
    h = {}
    for ks in product(range(1, n + 1), repeat=r):
        g = math.gcd(n, math.prod(ks))
        h[g] = h.get(g, 0) + 1
    return dict(sorted(h.items()))


def test_r1_counts():
    assert [count_prime_power(2, 2, 1, d) for d in range(3)] == [2, 1, 1]
    assert [count_prime_power(3, 1, 1, d) for d in range(2)] == [2, 1]


def test_small_histogram():
    assert [count_prime_power(2, 2, 2, d) for d in range(3)] == [4, 4, 8]
    assert count_brute(2, 2, 2).counts == {1: 4, 2: 4, 4: 8}
    assert histogram_by_products(4, 2) == {1: 4, 2: 4, 4: 8}


@pytest.mark.parametrize("q", [2, 4, 8, 16, 32, 3, 9, 27, 5, 25, 7, 11, 13, 31])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_closed_matches_brute(q, r):
    fac = [(p, e) for p in (2, 3, 5, 7, 11, 13, 31) for e in range(1, 6) if p**e == q][0]
    p, e = fac
    brute = count_brute(p, e, r)
    assert brute.counts == count_closed(p, e, r).counts
    assert brute.total() == q**r


def test_brute_matches_plain_gcd_oracle():
    for p, e, r in [(2, 3, 2), (3, 2, 3), (5, 1, 3), (2, 4, 2)]:
        assert count_brute(p, e, r).counts == histogram_by_products(p**e, r)


def test_r1_reproduces_first_layer_formula():
    # r = 1: p^(e-d) - p^(e-d-1) for d < e, and 1 at d = e
    for p in (2, 3, 5, 7, 11):
        for e in range(1, 8):
            if p**e > 128:
                break
            for d in range(e):
                assert count_prime_power(p, e, 1, d) == p ** (e - d) - p ** (e - d - 1)
            assert count_prime_power(p, e, 1, e) == 1


def test_partition_identity():
    for p in (2, 3, 5):
        for e in range(1, 7):
            for r in range(1, 7):
                assert sum(count_prime_power(p, e, r, d) for d in range(e + 1)) == p ** (e * r)


def test_domain_errors():
    with pytest.raises(DomainError):
        count_prime_power(2, 3, 1, 4)
    with pytest.raises(DomainError):
        count_prime_power(4, 3, 1, 0)
    with pytest.raises(DomainError):
        count_prime_power(2, 0, 1, 0)


def test_guard(monkeypatch):
    with pytest.raises(GuardExceeded, match="guard of 100"):
        count_brute(2, 4, 2, guard=100)
    monkeypatch.setenv("GCDMOMENT_GUARD", "10")
    assert resolve_guard() == 10
    with pytest.raises(GuardExceeded):
        count_brute(2, 2, 2)
    monkeypatch.delenv("GCDMOMENT_GUARD")
    assert resolve_guard() == DEFAULT_GUARD


def test_pmf_examples():
    assert pmf(1, 3).mass == {1: 1}
    assert pmf(4, 2).mass == {1: Fraction(1, 4), 2: Fraction(1, 4), 4: Fraction(1, 2)}
    assert pmf(6, 1).mass == {1: Fraction(1, 3), 2: Fraction(1, 3), 3: Fraction(1, 6), 6: Fraction(1, 6)}


def test_pmf_matches_enumeration():
    for n in (6, 12, 18, 30):
        for r in (1, 2):
            expected = {f: Fraction(c, n**r) for f, c in histogram_by_products(n, r).items()}
            assert pmf(n, r).mass == expected


def test_pmf_sums_to_one():
    for n in range(1, 201):
        for r in range(1, 6):
            law = pmf(n, r)
            assert sum(law.mass.values()) == 1
            assert all(n % f == 0 and m > 0 for f, m in law.mass.items())


def test_pmf_moments_match_closed_form():
    for n in range(1, 101):
        for r in range(1, 5):
            law = pmf(n, r)
            for w in (-1, 1, 2):
                assert law.expectation(w) == moment_closed(n, r, w).value
