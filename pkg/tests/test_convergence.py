from fractions import Fraction

import pytest

from gcdmoment.convergence import convergence_condition, convergence_table, limit_value
from gcdmoment.errors import DomainError
from gcdmoment.moments import moment_closed


def test_limit_value():
    assert limit_value(6, 1) == 6
    assert limit_value(2, 2) == 4
    assert all(limit_value(n, 0) == 1 for n in (1, 7, 100))
    assert abs(limit_value(4, 0.5) - 2) < 1e-15
    assert all(limit_value(n, 1) == n for n in range(1, 10**6 + 1, 997))


def test_condition_examples():
    c = convergence_condition(6, 2)
    assert c.guaranteed
    assert c.per_prime[2]["abs_pw_minus_1"] == pytest.approx(3)
    assert c.per_prime[3]["abs_pw_minus_1"] == pytest.approx(8)
    assert convergence_condition(360, 1).guaranteed
    assert not convergence_condition(2, 0.5).guaranteed


def test_condition_flags_disagree_at_w_1_5():
    c = convergence_condition(2, 1.5)
    assert c.guaranteed and not c.conservative
    assert c.per_prime[2]["abs_pw1_minus_1"] == pytest.approx(2**0.5 - 1)


def test_table_n2_w1():
    rep = convergence_table(2, 1, range(1, 5))
    assert [row.value.value for row in rep.rows] == [Fraction(3, 2), Fraction(7, 4), Fraction(15, 8), Fraction(31, 16)]
    assert [row.gap for row in rep.rows] == [Fraction(1, 2**r) for r in range(1, 5)]


def test_table_n1():
    for w in (1, 3, 0.5 + 0.5j):
        rep = convergence_table(1, w, [1, 5, 9])
        assert all(row.value.value == 1 and row.gap == 0 for row in rep.rows)


def test_w1_gaps_strictly_decrease():
    for n in (2, 6, 12, 60):
        gaps = [row.gap for row in convergence_table(n, 1, range(1, 51)).rows]
        assert all(g > 0 for g in gaps)
        assert all(b < a for a, b in zip(gaps, gaps[1:]))
    assert convergence_table(2, 1, [50]).rows[0].gap == Fraction(1, 2**50) < Fraction(2, 1000)


def test_gap_halves_when_guaranteed():
    for w in (2, 3, 1 + 1j):
        for n in range(2, 31):
            if not convergence_condition(n, w).guaranteed:
                continue
            g10, g60 = (row.gap for row in convergence_table(n, w, [10, 60]).rows)
            assert g60 <= g10 / 2


def test_n6_w2_reaches_limit():
    rep = convergence_table(6, 2, range(1, 201))
    assert rep.limit == 36
    gaps = [row.gap for row in rep.rows]
    assert min(gaps) < Fraction(1, 10**6)
    assert all(b < a for a, b in zip(gaps, gaps[1:]))


def test_unstable_branch_uses_universal():
    # at p = 2, w = 1.5 the branch form's (a/c)^r grows like 1.2^r
    rep = convergence_table(2, 1.5, [10, 100, 200])
    assert {row.value.method for row in rep.rows} == {"closed-universal"}
    assert rep.rows[-1].gap < 1e-12
    assert rep.rows[0].value.value == pytest.approx(moment_closed(2, 10, 1.5).value, rel=1e-10)


def test_table_validation():
    with pytest.raises(DomainError):
        convergence_table(6, 1, [])
    with pytest.raises(DomainError):
        convergence_table(6, 1, [3, 2])
    with pytest.raises(DomainError):
        convergence_table(6, 1, [0, 1])
