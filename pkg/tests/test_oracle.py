import pytest

from ordroot.errors import AboveLimit, NotAUnit
from ordroot.oracle import (SmallModulusBound, brute_force_order,
                            brute_force_primitive_roots, primes_below,
                            totient_brute, trial_factorize)


@pytest.mark.parametrize("p,a,expected", [(11, 3, 5), (7, 2, 3), (13, 1, 1), (13, 4, 6)])
def test_brute_force_order(p, a, expected):
    assert brute_force_order(p, a) == expected


def test_brute_force_order_errors():
    with pytest.raises(NotAUnit):
        brute_force_order(7, 14)
    with pytest.raises(AboveLimit):
        brute_force_order(101, 2, SmallModulusBound(100))


@pytest.mark.parametrize("p,expected", [(7, {3, 5}), (13, {2, 6, 7, 11}), (3, {2})])
def test_brute_force_roots(p, expected):
    assert brute_force_primitive_roots(p) == expected


@pytest.mark.parametrize("n,pairs", [(12, ((2, 2), (3, 1))), (2, ((2, 1),)),
                                     (210, ((2, 1), (3, 1), (5, 1), (7, 1))),
                                     (1024, ((2, 10),)), (999983, ((999983, 1),))])
def test_trial_factorize(n, pairs):
    f = trial_factorize(n)
    assert f.pairs == pairs and f.product == n


def test_trial_factorize_round_trip():
    for n in range(2, 5000):
        f = trial_factorize(n)
        assert f.product == n
        assert [q for q, _ in f.pairs] == sorted({q for q, _ in f.pairs})
        assert all(e >= 1 for _, e in f.pairs)


def test_trial_factorize_errors():
    with pytest.raises(ValueError):
        trial_factorize(1)
    with pytest.raises(AboveLimit):
        trial_factorize(10**6 + 1)


@pytest.mark.parametrize("n,expected", [(12, 4), (1, 1), (13, 12), (36, 12), (97, 96)])
def test_totient_brute(n, expected):
    assert totient_brute(n) == expected


def test_prime_count():
    assert len(primes_below(100)) == 25
    assert len(primes_below(2000)) == 303
    assert primes_below(3) == [2]
