"""Fibonacci indexing, shift-identity coefficients, exact alpha powers."""

from fractions import Fraction as F

from fibrec import ALPHA, QuadRat, alpha_pow, fib, shift_coeffs


def naive_fib_table(lo: int, hi: int) -> dict[int, int]:
    # independent oracle: run the defining recurrence upward and downward
    table = {0: 0, 1: 1}
    for n in range(2, hi + 1):
        table[n] = table[n - 1] + table[n - 2]
    for n in range(-1, lo - 1, -1):
        table[n] = table[n + 2] - table[n + 1]
    return table


def test_fib_examples():
    assert fib(10) == 55
    assert fib(-4) == -3
    assert fib(0) == 0
    assert fib(1) == 1
    assert fib(-1) == 1


def test_fib_matches_naive_recurrence():
    table = naive_fib_table(-50, 50)
    for n in range(-50, 51):
        assert fib(n) == table[n]


def test_fib_recurrence_property():
    for n in range(-50, 51):
        assert fib(n) == fib(n - 1) + fib(n - 2)


def test_fib_negative_index_rule():
    for n in range(0, 40):
        assert fib(-n) == (1 if n % 2 else -1) * fib(n)


def test_fib_large_index_fast():
    v = fib(10_000)
    assert v % 10 == 5  # spot digit, and the call returns instantly
    assert len(str(v)) == 2090


def test_shift_coeffs_examples():
    assert shift_coeffs(0) == (1, 0)
    assert shift_coeffs(2) == (1, -1)
    assert shift_coeffs(-1) == (1, 1)
    assert shift_coeffs(-2) == (2, 1)
    assert shift_coeffs(-3) == (3, 2)


def test_shift_identity_property():
    for j in range(-15, 16):
        c_f, c_f1 = shift_coeffs(j)
        for n in range(-15, 16):
            assert fib(n - j) == c_f * fib(n) + c_f1 * fib(n - 1)


def test_alpha_pow_examples():
    assert alpha_pow(0) == 1
    assert alpha_pow(1) == ALPHA
    assert alpha_pow(5) == QuadRat(F(11, 2), F(5, 2))
    assert alpha_pow(-1) == QuadRat(F(-1, 2), F(1, 2))


def test_alpha_pow_multiplicativity():
    powers = {n: alpha_pow(n) for n in range(-20, 21)}
    for m in range(-20, 21):
        for n in range(-20, 21):
            if -20 <= m + n <= 20:
                assert powers[m] * powers[n] == powers[m + n]


def test_alpha_pow_binet_difference():
    # alpha^n - beta^n has no rational part and carries exactly F_n * sqrt(5)
    for n in range(-30, 31):
        a = alpha_pow(n)
        assert a - a.conj() == QuadRat(0, fib(n))
