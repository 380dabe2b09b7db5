import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kstab.arith import Factorization, as_rational, factorize, format_rational, is_prime

rationals = st.fractions(max_denominator=10**6)


def test_fraction_examples():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert Fraction(1, 2) * 2 == 1
    x = Fraction(3)
    assert (8 - x) / 2 == Fraction(5, 2)


def test_division_by_zero_is_distinct():
    with pytest.raises(ZeroDivisionError):
        Fraction(1, 2) / Fraction(0)


def test_normal_form():
    q = Fraction(-6, -4)
    assert (q.numerator, q.denominator) == (3, 2)
    z = Fraction(0, 7)
    assert (z.numerator, z.denominator) == (0, 1)


@given(rationals, rationals, rationals)
def test_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    if a != 0:
        assert a * (1 / a) == 1
    assert a + (-a) == 0


@pytest.mark.parametrize("text, expected", [("3/2", Fraction(3, 2)), (" -8 ", Fraction(-8)), ("0", Fraction(0)), (5, Fraction(5))])
def test_as_rational(text, expected):
    assert as_rational(text) == expected


@pytest.mark.parametrize("bad", [0.5, True, "x", "1/0", None])
def test_as_rational_rejects(bad):
    with pytest.raises((TypeError, ValueError)):
        as_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(-7, 3)) == "-7/3"
    assert format_rational(Fraction(4)) == "4"


@pytest.mark.parametrize(
    "n, text",
    [
        (12, "2^2 · 3"),
        (1, "1"),
        (-1, "-1"),
        (0, "0"),
        (-40, "-2^3 · 5"),
        (2**4 * 3**9 * 5 * 11, "2^4 · 3^9 · 5 · 11"),
        (2**73 * 19 * 23 * 199 * 1049, "2^73 · 19 · 23 · 199 · 1049"),
    ],
)
def test_factor_rendering(n, text):
    f = factorize(n)
    assert str(f) == text
    assert f.value() == n


def test_zero_and_units():
    assert factorize(0) == Factorization(0, ())
    assert factorize(1) == Factorization(1, ())
    assert factorize(-1) == Factorization(-1, ())


def test_hard_semiprimes():
    # two 15-digit primes: beyond the rho budget, needs the curve method
    p, q = 385495941142747, 506973916392323
    assert factorize(5 * p * q).factors == ((5, 1), (p, 1), (q, 1))
    r = 2**61 - 1
    assert factorize(r * r * 7).factors == ((7, 1), (r, 2))
    # 40-digit input: Mersenne primes 2^89 - 1 and 2^31 - 1
    big = (2**89 - 1) * (2**31 - 1)
    assert factorize(big).factors == ((2**31 - 1, 1), (2**89 - 1, 1))


def test_is_prime_known_values():
    primes = [2, 3, 1049, 2**31 - 1, 2**61 - 1, 2**89 - 1, 2**107 - 1]
    composites = [1, 0, -7, 561, 3215031751, 3825123056546413051, 318665857834031151167461, (2**61 - 1) * (2**67 - 1)]
    assert all(is_prime(p) for p in primes)
    assert not any(is_prime(c) for c in composites)


def test_is_prime_against_trial_division():
    def slow(n):
        return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))

    assert [n for n in range(2000) if is_prime(n)] == [n for n in range(2000) if slow(n)]


@given(st.integers(min_value=-(10**18), max_value=10**18))
def test_factorize_round_trip(n):
    f = factorize(n)
    assert f.value() == n
    primes = [p for p, _ in f.factors]
    assert primes == sorted(set(primes))
    assert all(is_prime(p) and e >= 1 for p, e in f.factors)


def test_factorize_round_trip_40_digits():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randrange(10**39, 10**40)
        # keep the hard part below the budgeted sizes: one large prime cofactor
        n = n - n % 2**20
        assert factorize(n).value() == n
