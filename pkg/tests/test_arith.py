import random

import pytest
from hypothesis import given, strategies as st

from ordroot.arith import (CostCounter, format_natural, gcd, is_probable_prime,
                           mod_exp, mul_mod, parse_natural)
from ordroot.errors import InvalidModulus, UndefinedGcd


def _trial_division_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))


def test_mul_mod_examples():
    c = CostCounter()
    assert mul_mod(5, 5, 13, c) == 12
    assert c == CostCounter(0, 1)
    assert mul_mod(17, 1, 13) == 4
    assert mul_mod(0, 9, 13) == 0


@pytest.mark.parametrize("m", [1, 0])
def test_bad_modulus(m):
    with pytest.raises(InvalidModulus):
        mul_mod(1, 1, m)
    with pytest.raises(InvalidModulus):
        mod_exp(2, 3, m)


def test_mod_exp_examples():
    assert mod_exp(4, 3, 13) == 12
    assert mod_exp(7, 0, 13) == 1
    assert mod_exp(5, 22, 23) == 1


def test_fresh_counter():
    assert CostCounter().as_dict() == {"exponent_mults": 0, "group_mults": 0}


@given(st.integers(0, 10**30), st.integers(0, 64), st.integers(2, 10**12))
def test_mod_exp_matches_sequential_products(a, e, m):
    c = CostCounter()
    expected = 1 % m
    for _ in range(e):
        expected = mul_mod(expected, a, m)
    assert mod_exp(a, e, m, c) == expected
    assert c.group_mults <= 2 * e.bit_length()


@given(st.integers(0, 2**512), st.integers(0, 2**512), st.integers(2, 2**256))
def test_mod_exp_against_builtin(a, e, m):
    c = CostCounter()
    assert mod_exp(a, e, m, c) == pow(a, e, m)
    assert c.group_mults <= 2 * e.bit_length()


def test_counter_monotone_during_exponentiation():
    seen = []

    class Recording(CostCounter):
        def __setattr__(self, name, value):
            if name == "group_mults" and hasattr(self, name):
                seen.append((getattr(self, name), value))
            super().__setattr__(name, value)

    mod_exp(3, 2**40 + 12345, 1000003, Recording())
    assert seen and all(new >= old for old, new in seen)


def test_gcd():
    assert gcd(12, 8) == 4
    assert gcd(9, 0) == 9
    assert gcd(1, 77) == 1
    with pytest.raises(UndefinedGcd):
        gcd(0, 0)


@pytest.mark.parametrize("n,expected", [(13, True), (1, False), (561, False),
                                        (0, False), (2, True), (97, True),
                                        (9409, False), (10007, True)])
def test_is_probable_prime_examples(n, expected):
    assert is_probable_prime(n, rng=random.Random(1)) is expected


def test_primality_matches_trial_division():
    rng = random.Random(5)
    for n in range(0, 20000):
        assert is_probable_prime(n, rounds=8, rng=rng) == _trial_division_prime(n), n


@pytest.mark.parametrize("n", [561, 1105, 1729, 2465, 2821, 6601, 8911, 41041,
                               3215031751, 3825123056546413051])
def test_carmichael_and_strong_pseudoprimes_rejected(n):
    assert not is_probable_prime(n)


def test_known_large_primes():
    assert is_probable_prime(2**127 - 1)
    assert is_probable_prime(2**521 - 1)
    assert not is_probable_prime((2**61 - 1) * (2**89 - 1))


def test_rounds_must_be_positive():
    with pytest.raises(ValueError):
        is_probable_prime(7, rounds=0)


@given(st.integers(0, 2**300))
def test_natural_round_trip(n):
    assert parse_natural(format_natural(n)) == n
    assert parse_natural(format_natural(n, hexadecimal=True)) == n


@pytest.mark.parametrize("bad", ["", "-3", "0x", "12a", "0xg1", "1.5"])
def test_parse_natural_rejects(bad):
    with pytest.raises(ValueError):
        parse_natural(bad)


def test_parse_natural_hex_case():
    assert parse_natural("0XfF") == 255
