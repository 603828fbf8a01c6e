import random
from collections import Counter

import pytest

from ordroot.arith import CostCounter, is_probable_prime
from ordroot.errors import IncompatibleK, TooSmall
from ordroot.forge import (generate_factored_group, generate_safe_prime_group,
                           safe_group_from)
from ordroot.order import order_fast, validate_group_spec
from ordroot.primroot import is_primitive_root
from ordroot.ptree import tree_cost


def _verify(group):
    spec, g = group.spec, group.generator
    validate_group_spec(spec)
    assert pow(g, spec.p - 1, spec.p) == 1
    for q in spec.phi_factors.primes:
        assert pow(g, (spec.p - 1) // q, spec.p) != 1
    assert is_primitive_root(spec, g)


def test_safe_from_forced_candidate():
    group = safe_group_from(11, random.Random(0))
    assert group.spec.p == 23
    assert group.spec.phi_factors.pairs == ((2, 1), (11, 1))
    _verify(group)
    assert safe_group_from(13) is None       # 27 is composite
    assert safe_group_from(9) is None


@pytest.mark.parametrize("bits", [8, 9, 16, 32, 64, 128])
def test_safe_prime_bit_length(bits):
    group = generate_safe_prime_group(bits, random.Random(bits))
    assert group.spec.p.bit_length() == bits
    q = (group.spec.p - 1) // 2
    assert is_probable_prime(q)
    _verify(group)


def test_safe_distinct_over_seeds():
    groups = [generate_safe_prime_group(64, random.Random(s)) for s in range(100)]
    assert len({g.spec.p for g in groups}) == 100
    for g in groups:
        _verify(g)


def test_safe_too_small():
    with pytest.raises(TooSmall):
        generate_safe_prime_group(7, random.Random())


@pytest.mark.parametrize("bits,k", [(16, 2), (16, 3), (16, 4), (32, 5), (64, 4),
                                    (64, 16), (128, 8), (256, 16)])
def test_factored_shape(bits, k):
    group = generate_factored_group(bits, k, random.Random(bits * k))
    spec = group.spec
    assert bits - 1 <= spec.p.bit_length() <= bits + 1
    assert spec.phi_factors.product == spec.p - 1
    assert sum(e for _, e in spec.phi_factors.pairs) == k
    assert spec.phi_factors.pairs[0][0] == 2
    _verify(group)


def test_factored_k4_uses_k4_schedule():
    group = generate_factored_group(64, 4, random.Random(7))
    assert len(group.spec.phi_factors) == 4
    c = CostCounter()
    order_fast(group.spec, group.generator, c)
    pre, per = tree_cost(4)
    assert c.exponent_mults == pre + 4 * per


def test_repeated_primes_merge_into_exponents():
    # with 4-bit odd primes {11, 13} repeats are all but certain
    merged = 0
    for s in range(30):
        group = generate_factored_group(16, 4, random.Random(s))
        _verify(group)
        merged += any(e > 1 for q, e in group.spec.phi_factors.pairs if q != 2)
    assert merged > 0


def test_factored_errors():
    with pytest.raises(TooSmall):
        generate_factored_group(15, 2, random.Random())
    with pytest.raises(IncompatibleK):
        generate_factored_group(16, 8, random.Random())
    with pytest.raises(IncompatibleK):
        generate_factored_group(64, 1, random.Random())


def test_generation_reproducible():
    a = generate_factored_group(64, 5, random.Random(3))
    b = generate_factored_group(64, 5, random.Random(3))
    assert a == b


def test_attempts_counted():
    group = generate_safe_prime_group(64, random.Random(1))
    assert group.attempts >= 1 and group.tries >= 1
