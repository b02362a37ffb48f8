from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_quadratic_units
from qcayley.modring import (
    Modulus,
    connection_set,
    crt_combine,
    crt_split,
    factorize,
    is_quadratic_unit,
    is_unit,
    minus_one_is_square,
    mod_inverse,
    quadratic_units,
    sqrt_in_units,
    units,
)


def test_factorize_examples():
    assert factorize(360).factors == ((2, 3), (3, 2), (5, 1))
    assert factorize(1).factors == ()
    assert factorize(97).is_prime
    assert factorize(81).is_prime_power and not factorize(81).is_prime
    assert factorize(105).omega == 3


@pytest.mark.parametrize("bad", [0, -3])
def test_factorize_rejects_non_positive(bad):
    with pytest.raises(ValueError):
        factorize(bad)


def test_modulus_validates_factors():
    with pytest.raises(ValueError):
        Modulus(12, ((2, 2), (5, 1)))


def test_quadratic_units_match_enumeration():
    for n in range(2, 400):
        q = brute_quadratic_units(n)
        assert quadratic_units(n) == q, n
        assert all(is_quadratic_unit(r, n) == (r in q) for r in range(n)), n


def test_small_quadratic_unit_sets():
    assert quadratic_units(7) == {1, 2, 4}
    assert quadratic_units(9) == {1, 4, 7}
    assert quadratic_units(8) == {1}
    assert quadratic_units(24) == {1}
    assert connection_set(5) == {1, 4}
    assert quadratic_units(1) == {0}


def test_minus_one_is_square_matches_definition():
    for n in range(2, 300):
        assert minus_one_is_square(n) == ((n - 1) in quadratic_units(n)), n


def test_units_and_inverses():
    for n in range(2, 120):
        us = units(n)
        assert list(us) == [r for r in range(n) if gcd(r, n) == 1]
        for u in us:
            assert u * mod_inverse(u, n) % n == 1
    assert not is_unit(6, 15)
    with pytest.raises(ValueError):
        mod_inverse(6, 15)


@given(st.integers(1, 5000), st.integers(-10**6, 10**6))
def test_crt_round_trip(n, r):
    assert crt_combine(crt_split(r, n), n) == r % n


def test_crt_combine_rejects_wrong_length():
    with pytest.raises(ValueError):
        crt_combine((1,), 15)


def test_sqrt_brute_is_smallest_root():
    for n in range(2, 200):
        for q in quadratic_units(n):
            a = sqrt_in_units(q, n, method="brute")
            assert a * a % n == q and gcd(a, n) == 1
            assert all(x * x % n != q or gcd(x, n) > 1 for x in range(a))


@pytest.mark.parametrize("n", [7, 8, 16, 32, 64, 45, 97, 360, 1009, 2**10, 3**7, 10007 * 3, 99991])
def test_sqrt_fast_gives_unit_roots(n):
    qs = sorted(quadratic_units(n)) if n < 5000 else [x * x % n for x in range(1, 400) if gcd(x, n) == 1]
    for q in qs[:300]:
        a = sqrt_in_units(q, n, method="fast")
        assert a * a % n == q and gcd(a, n) == 1


def test_sqrt_rejects_non_square():
    with pytest.raises(ValueError):
        sqrt_in_units(3, 7)
    with pytest.raises(ValueError):
        sqrt_in_units(1, 7, method="nope")
