"""Oracle sweep behind the ``selftest`` command."""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from . import oracle
from .arith import CostCounter
from .order import GroupSpec, order_classic, order_fast, validate_group_spec
from .primroot import count_primitive_roots, is_primitive_root
from .ptree import k_exponentiation

PAIRS_PER_PRIME = 4


class SelftestMismatch(AssertionError):
    def __init__(self, p: int, a: int, what: str):
        super().__init__(f"mismatch at (p={p}, a={a}): {what}")
        self.p = p
        self.a = a
        self.what = what


@dataclass
class SelftestSummary:
    primes: int = 0
    elements: int = 0
    pairs: int = 0


def unlifted_batched_accepts(spec: GroupSpec, a: int,
                            counter: CostCounter | None = None) -> bool:
    """Generator test that skips the lift when an exponent exceeds 1.

    Wrong whenever p - 1 has a repeated prime factor; kept to demonstrate
    that the sweep catches it.
    """
    powered = k_exponentiation(spec.phi_factors.prime_powers, a, spec.p, counter)
    return all(b != 1 for b in powered)


def _corrected_accepts(spec: GroupSpec, a: int, counter: CostCounter | None = None) -> bool:
    return is_primitive_root(spec, a, counter, check=False)


def check_prime(p: int, unlifted: bool = False) -> tuple[int, int]:
    """Run every check for one prime; return (elements, pairs) checked."""
    if p == 2:
        if oracle.brute_force_order(2, 1) != 1 or oracle.totient_brute(1) != 1:
            raise SelftestMismatch(2, 1, "trivial group")
        return 1, 0

    spec = GroupSpec(p, oracle.trial_factorize(p - 1))
    validate_group_spec(spec)
    orders = oracle.brute_force_orders(p)

    for a in range(1, p):
        classic = order_classic(spec, a, check=False).order
        fast = order_fast(spec, a, check=False).order
        if not classic == fast == orders[a]:
            raise SelftestMismatch(
                p, a, f"order classic={classic} fast={fast} oracle={orders[a]}")

    accepts = unlifted_batched_accepts if unlifted else _corrected_accepts
    for a in range(2, p - 1):
        if accepts(spec, a) != (orders[a] == p - 1):
            raise SelftestMismatch(p, a, f"search predicate disagrees with oracle order {orders[a]}")

    census = sum(1 for a in range(1, p) if is_primitive_root(spec, a, check=False))
    expected = count_primitive_roots(spec)
    brute = oracle.totient_brute(p - 1)
    if not census == expected == brute:
        raise SelftestMismatch(p, 0, f"census {census}, phi(p-1) {expected}, brute {brute}")

    rng = random.Random(p)
    pairs = 0
    for _ in range(PAIRS_PER_PRIME * 8):
        if pairs == PAIRS_PER_PRIME:
            break
        a, b = rng.randrange(1, p), rng.randrange(1, p)
        if gcd(orders[a], orders[b]) != 1:
            continue
        ab = a * b % p
        if order_fast(spec, ab, check=False).order != orders[a] * orders[b]:
            raise SelftestMismatch(p, ab, "order of product of coprime-order elements")
        pairs += 1
    return p - 1, pairs


def run_selftest(max_p: int = 2000, unlifted: bool = False) -> SelftestSummary:
    """Sweep every prime below ``max_p``; raise :class:`SelftestMismatch` on the first failure."""
    summary = SelftestSummary()
    for p in oracle.primes_below(max_p):
        elements, pairs = check_prime(p, unlifted)
        summary.primes += 1
        summary.elements += elements
        summary.pairs += pairs
    return summary
