"""Brute-force reference answers for small moduli.

Nothing here imports the arithmetic, tree or order modules: orders come from
repeated multiplication and counts from direct enumeration, so agreement with
the fast paths is evidence rather than tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import AboveLimit, NotAUnit
from .order import Factorization


@dataclass(frozen=True)
class SmallModulusBound:
    limit: int = 10**6

    def check(self, n: int) -> None:
        if n > self.limit:
            raise AboveLimit(f"{n} exceeds oracle limit {self.limit}")


DEFAULT_BOUND = SmallModulusBound()


def brute_force_order(p: int, a: int, bound: SmallModulusBound = DEFAULT_BOUND) -> int:
    bound.check(p)
    if a % p == 0:
        raise NotAUnit(f"{a} is congruent to 0 mod {p}")
    a %= p
    x, n = a, 1
    while x != 1:
        x = x * a % p
        n += 1
        if n > p:
            raise ValueError(f"{a} has no order mod {p}; is {p} prime?")
    return n


def brute_force_orders(p: int, bound: SmallModulusBound = DEFAULT_BOUND) -> list[int]:
    """``brute_force_order(p, a)`` for every ``a`` in ``1 .. p-1``; index 0 is unused."""
    bound.check(p)
    return [0] + [brute_force_order(p, a, bound) for a in range(1, p)]


def brute_force_primitive_roots(p: int, bound: SmallModulusBound = DEFAULT_BOUND) -> set[int]:
    orders = brute_force_orders(p, bound)
    return {a for a in range(1, p) if orders[a] == p - 1}


def trial_factorize(n: int, bound: SmallModulusBound = DEFAULT_BOUND) -> Factorization:
    bound.check(n)
    if n < 2:
        raise ValueError(f"cannot factor {n}")
    primes = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            primes.append(d)
            n //= d
        d += 1
    if n > 1:
        primes.append(n)
    return Factorization.from_primes(primes)


def totient_brute(n: int, bound: SmallModulusBound = DEFAULT_BOUND) -> int:
    bound.check(n)
    if n < 1:
        raise ValueError("totient is defined for n >= 1")
    return sum(1 for a in range(1, n + 1) if gcd(a, n) == 1)


def primes_below(n: int, bound: SmallModulusBound = DEFAULT_BOUND) -> list[int]:
    """Primes ``< n`` by trial division."""
    bound.check(n)
    return [m for m in range(2, n) if all(m % d for d in range(2, int(m**0.5) + 1))]
