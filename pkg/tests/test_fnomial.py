"""F-factorials, falling factorials, and F-nomial coefficients.

Oracles used here: math.comb for F = nat, the q-Pascal recurrence for
Gaussian coefficients, and the Fibonacci-Pascal recurrence
(n k) = F_{k+1} (n-1 k) + F_{n-k-1} (n-1 k-1) for fibonomials.
"""
from fractions import Fraction
from functools import lru_cache
import math

import pytest

from cobweb import FNomialTable, NonIntegralError, parse_sequence


def table(spec: str, max_n: int) -> FNomialTable:
    return FNomialTable(parse_sequence(spec), max_n)


def test_f_factorial_values():
    t = table("fib", 6)
    assert [t.f_factorial(n) for n in range(7)] == [1, 1, 1, 2, 6, 30, 240]


def test_f_factorial_nat_is_factorial():
    t = table("nat", 10)
    for n in range(11):
        assert t.f_factorial(n) == math.factorial(n)


def test_f_factorial_const1():
    t = table("const:1", 8)
    assert all(t.f_factorial(n) == 1 for n in range(9))


def test_falling_is_a_pure_product():
    t = table("fib", 8)
    # F_5 * F_4 = 5 * 3
    assert t.falling(5, 2) == 15
    assert t.falling(8, 3) == 21 * 13 * 8
    assert t.falling(6, 0) == 1
    assert t.falling(6, 6) == t.f_factorial(6)


def test_fnomial_examples():
    assert table("fib", 5).fnomial(5, 2) == 15
    assert table("nat", 6).fnomial(6, 3) == 20
    assert table("gauss:2", 4).fnomial(4, 2) == 35
    assert table("const:1", 9).fnomial(9, 4) == 1


def test_fnomial_edges():
    t = table("fib", 12)
    for n in range(13):
        assert t.fnomial(n, 0) == 1
        assert t.fnomial(n, n) == 1


def test_fnomial_symmetry():
    for spec in ("nat", "fib", "gauss:2", "even1"):
        t = table(spec, 12)
        for n in range(13):
            for k in range(n + 1):
                assert t.fnomial(n, k) == t.fnomial(n, n - k)


def test_nat_fnomial_is_binomial():
    t = table("nat", 20)
    for n in range(21):
        for k in range(n + 1):
            assert t.fnomial(n, k) == math.comb(n, k)


def _gauss_oracle(q: int, max_n: int) -> dict[tuple[int, int], int]:
    """q-Pascal: [n k] = [n-1 k-1] + q^k [n-1 k]."""
    g = {(0, 0): 1}
    for n in range(1, max_n + 1):
        for k in range(n + 1):
            g[(n, k)] = g.get((n - 1, k - 1), 0) + q ** k * g.get((n - 1, k), 0)
    return g


@pytest.mark.parametrize("q", [2, 3])
def test_gaussian_against_q_pascal(q):
    oracle = _gauss_oracle(q, 12)
    t = table(f"gauss:{q}", 12)
    for n in range(13):
        for k in range(n + 1):
            assert t.fnomial(n, k) == oracle[(n, k)]


def test_gauss_frozen_value():
    assert _gauss_oracle(2, 5)[(5, 2)] == 155
    assert table("gauss:2", 5).fnomial(5, 2) == 155


def test_fibonomial_against_recurrence():
    fib = parse_sequence("fib")

    @lru_cache(maxsize=None)
    def fibo(n: int, k: int) -> int:
        if k == 0 or k == n:
            return 1
        return fib.value(k + 1) * fibo(n - 1, k) + fib.value(n - k - 1) * fibo(n - 1, k - 1)

    t = table("fib", 15)
    for n in range(16):
        for k in range(n + 1):
            assert t.fnomial(n, k) == fibo(n, k)


def test_eq1_identity():
    """fnomial(n, k) * m_F! == falling(n, m) with m = n - k, exactly."""
    for spec in ("nat", "fib", "gauss:2", "div3"):
        t = table(spec, 16)
        for n in range(17):
            for k in range(n + 1):
                m = n - k
                assert t.fnomial(n, k) * t.f_factorial(m) == t.falling(n, m)


def test_non_integral_error_payload():
    t = table("list:[2,3,4,5]", 4)
    with pytest.raises(NonIntegralError) as info:
        t.fnomial(2, 1)
    err = info.value
    assert (err.n, err.k) == (2, 1)
    assert err.fraction == Fraction(3, 2)
    # reduced form
    assert err.fraction.numerator == 3 and err.fraction.denominator == 2


def test_non_integral_is_arithmetic_error():
    assert issubclass(NonIntegralError, ArithmeticError)


def test_odd_non_integral_at_4_2():
    with pytest.raises(NonIntegralError) as info:
        table("odd", 4).fnomial(4, 2)
    assert info.value.fraction == Fraction(35, 3)


def test_range_errors():
    t = table("fib", 6)
    with pytest.raises(ValueError):
        t.fnomial(5, 6)  # k > n
    with pytest.raises(ValueError):
        t.fnomial(7, 2)  # n > max_n
    with pytest.raises(ValueError):
        t.fnomial(-1, 0)
    with pytest.raises(ValueError):
        t.falling(5, 6)
    with pytest.raises(ValueError):
        t.f_factorial(-2)


def test_table_is_primed_and_stable():
    t = table("fib", 10)
    before = t.fnomial(10, 5)
    assert t.value(7) == 13
    assert t.fnomial(10, 5) == before
