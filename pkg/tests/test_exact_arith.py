from fractions import Fraction
from itertools import islice

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zetawz.exact_arith import DecimalString, binomial, factorial, pi_digits, rat_make


def spigot_pi_digits():
    """Gibbons' unbounded spigot; independent of the arctangent route."""
    q, r, t, k, n, l = 1, 0, 1, 1, 3, 3
    while True:
        if 4 * q + r - t < n * t:
            yield n
            q, r, t, n = 10 * q, 10 * (r - n * t), t, (10 * (3 * q + r)) // t - 10 * n
        else:
            q, r, t, k, n, l = q * k, (2 * q + r) * l, t * l, k + 1, (q * (7 * k + 2) + r * l) // (t * l), l + 2


def spigot_string(precision):
    d = list(islice(spigot_pi_digits(), precision + 1))
    return f"{d[0]}." + "".join(map(str, d[1:]))


@pytest.mark.parametrize(
    "num, den, expected",
    [(2, 4, (1, 2)), (3, -6, (-1, 2)), (0, 7, (0, 1)), (-4, -8, (1, 2))],
)
def test_rat_make_canonical(num, den, expected):
    r = rat_make(num, den)
    assert (r.numerator, r.denominator) == expected


def test_rat_make_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat_make(1, 0)


def test_division_by_zero_is_an_error():
    with pytest.raises(ZeroDivisionError):
        rat_make(1, 3) / rat_make(0, 5)


rationals = st.builds(rat_make, st.integers(-10**30, 10**30), st.integers(1, 10**30) | st.integers(-10**30, -1))


def _canonical(r: Fraction) -> bool:
    from math import gcd

    return r.denominator > 0 and gcd(abs(r.numerator), r.denominator) == 1


@given(rationals, rationals)
def test_rational_ops_canonical(a, b):
    results = [a + b, a - b, a * b]
    if b != 0:
        results.append(a / b)
    assert all(_canonical(r) for r in results)
    assert (a + b) - b == a


def test_factorial_values():
    assert factorial(0) == 1
    assert factorial(5) == 120
    prod = 1
    for i in range(1, 21):
        prod *= i
    assert prod == 2432902008176640000
    assert factorial(20) == prod


def test_factorial_recurrence():
    for n in range(101):
        assert factorial(n + 1) == (n + 1) * factorial(n)


def test_factorial_negative():
    with pytest.raises(ValueError):
        factorial(-1)


def test_binomial_values():
    assert binomial(4, 1) == 4
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(2 * 2 - 1, 1) == 3


def test_binomial_pascal():
    for n in range(1, 61):
        for k in range(-1, n + 2):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@pytest.mark.parametrize("precision", [1, 5, 10])
def test_pi_digits_examples(precision):
    expected = {1: "3.1", 5: "3.14159", 10: "3.1415926535"}[precision]
    assert pi_digits(precision) == expected
    assert pi_digits(precision) == spigot_string(precision)


def test_pi_digits_long_prefix_against_spigot_and_mpmath():
    p = 1000
    ours = pi_digits(p)
    assert ours == spigot_string(p)
    with mpmath.workdps(p + 20):
        ref = mpmath.nstr(mpmath.pi, p + 15, strip_zeros=False)
    assert ref.startswith(str(ours))
    assert ours.precision == p


@pytest.mark.parametrize("p", [5, 50, 500])
def test_pi_digits_prefix_consistent(p):
    assert pi_digits(p + 10).startswith(pi_digits(p))


def test_pi_digits_max_precision_matches_mpmath():
    p = 10000
    ours = pi_digits(p)
    with mpmath.workdps(p + 20):
        ref = mpmath.nstr(mpmath.pi, p + 15, strip_zeros=False)
    assert ref.startswith(str(ours))


@pytest.mark.parametrize("bad", [0, -3, 10001])
def test_pi_digits_range(bad):
    with pytest.raises(ValueError):
        pi_digits(bad)


def test_decimal_string():
    d = DecimalString.from_scaled(-31415, 4)
    assert d == "-3.1415"
    assert d.precision == 4
    assert DecimalString.from_scaled(7, 3) == "0.007"
    with pytest.raises(ValueError):
        DecimalString("31415")
