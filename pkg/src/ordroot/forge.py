"""Generate primes p whose p - 1 factorization is known by construction."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .arith import CostCounter, is_probable_prime
from .errors import IncompatibleK, TooSmall
from .order import Factorization, GroupSpec
from .primroot import SearchPolicy, Strategy, search_primitive_root

_SIEVE = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
          71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139)

# smallest bit size allowed for the odd primes of a factored construction
MIN_FACTOR_BITS = 4


@dataclass(frozen=True)
class GeneratedGroup:
    spec: GroupSpec
    generator: int
    attempts: int   # candidate moduli drawn
    tries: int      # candidates examined by the generator search


def _sieved_out(n: int) -> bool:
    for r in _SIEVE:
        if n % r == 0:
            return n != r
    return False


def _finish(p: int, primes: list[int], attempts: int, rng: random.Random,
            counter: CostCounter | None) -> GeneratedGroup:
    spec = GroupSpec.checked(p, Factorization.from_primes(primes))
    found = search_primitive_root(spec, SearchPolicy(Strategy.BATCHED, rng=rng), counter)
    return GeneratedGroup(spec, found.generator, attempts, found.tries)


def safe_group_from(q: int, rng: random.Random | None = None,
                    counter: CostCounter | None = None,
                    attempts: int = 1) -> GeneratedGroup | None:
    """Build the group for ``p = 2q + 1`` if both ``q`` and ``p`` are prime."""
    rng = rng or random.Random(q)
    p = 2 * q + 1
    if q < 3 or not is_probable_prime(q, rng=rng) or not is_probable_prime(p, rng=rng):
        return None
    return _finish(p, [2, q], attempts, rng, counter)


def generate_safe_prime_group(bits: int, rng: random.Random,
                              counter: CostCounter | None = None) -> GeneratedGroup:
    """Random ``bits``-bit safe prime ``p = 2q + 1`` with a generator."""
    if bits < 8:
        raise TooSmall(f"safe primes need bits >= 8, got {bits}")
    attempts = 0
    while True:
        attempts += 1
        q = rng.getrandbits(bits - 1) | (1 << (bits - 2)) | 1
        if _sieved_out(q) or _sieved_out(2 * q + 1):
            continue
        group = safe_group_from(q, rng, counter, attempts)
        if group is not None:
            return group


def _random_prime(bits: int, rng: random.Random) -> int:
    while True:
        n = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if not _sieved_out(n) and is_probable_prime(n, rng=rng):
            return n


def generate_factored_group(bits: int, target_k: int, rng: random.Random,
                            counter: CostCounter | None = None) -> GeneratedGroup:
    """Random ``bits``-bit prime with ``p - 1 = 2 * r_2 * ... * r_k``.

    ``r_2 .. r_{k-1}`` are random primes of ``(bits - 1) // (k - 1)`` bits;
    the last one is chosen from the range that puts ``p`` at exactly
    ``bits`` bits.  Primes drawn twice are merged into an exponent.
    """
    if bits < 16:
        raise TooSmall(f"factored construction needs bits >= 16, got {bits}")
    if target_k < 2:
        raise IncompatibleK(f"target_k must be >= 2, got {target_k}")
    size = (bits - 1) // (target_k - 1)
    if size < MIN_FACTOR_BITS:
        raise IncompatibleK(
            f"{target_k} factors do not fit in {bits} bits "
            f"(each odd prime needs >= {MIN_FACTOR_BITS} bits)")

    lo_p, hi_p = 1 << (bits - 1), (1 << bits) - 1
    attempts = 0
    while True:
        inner = [_random_prime(size, rng) for _ in range(target_k - 2)]
        twice_r = 2
        for r in inner:
            twice_r *= r
        lo = -(-(lo_p - 1) // twice_r)
        hi = (hi_p - 1) // twice_r
        if lo > hi:
            continue
        lo = max(lo, 3)
        for _ in range(64 * bits):
            attempts += 1
            last = rng.randint(lo, hi) | 1
            if last > hi:
                continue
            p = twice_r * last + 1
            if _sieved_out(last) or _sieved_out(p):
                continue
            if is_probable_prime(last, rng=rng) and is_probable_prime(p, rng=rng):
                return _finish(p, [2, *inner, last], attempts, rng, counter)
