"""Multiplicative order in Z*_p given the factorization of p - 1."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .arith import CostCounter, is_probable_prime, mod_exp
from .errors import (BadExponent, CompositeFactor, CompositeModulus, NotAUnit,
                     ProductMismatch, UnsortedFactors)
from .ptree import cofactors_naive, k_exponentiation


@dataclass(frozen=True)
class Factorization:
    """Ordered ``(prime, exponent)`` pairs and their cached product.

    Construction does not check primality or ordering; that is the job of
    :func:`validate_group_spec`, which reports each defect by name.
    """

    pairs: tuple[tuple[int, int], ...]
    product: int = field(init=False, compare=False)

    def __post_init__(self) -> None:
        pairs = tuple((int(p), int(e)) for p, e in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        value = 1
        for p, e in pairs:
            value *= p ** max(e, 0)
        object.__setattr__(self, "product", value)

    @classmethod
    def from_primes(cls, primes: Iterable[int]) -> Factorization:
        """Canonical factorization of a multiset of primes (repeats merged)."""
        return cls(tuple(sorted(Counter(primes).items())))

    @property
    def primes(self) -> list[int]:
        return [p for p, _ in self.pairs]

    @property
    def prime_powers(self) -> list[int]:
        return [p ** e for p, e in self.pairs]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class GroupSpec:
    """A prime modulus ``p`` with the factorization of ``p - 1``."""

    p: int
    phi_factors: Factorization

    @classmethod
    def checked(cls, p: int, phi_factors: Factorization) -> GroupSpec:
        spec = cls(p, phi_factors)
        validate_group_spec(spec)
        return spec


@dataclass(frozen=True)
class OrderResult:
    order: int
    prime_exponents: tuple[tuple[int, int], ...]
    cost: CostCounter


def validate_group_spec(spec: GroupSpec) -> None:
    """Raise a :class:`~ordroot.errors.ValidationError` subclass on the first broken invariant."""
    _validate_cached(spec)


@lru_cache(maxsize=4096)
def _validate_cached(spec: GroupSpec) -> None:
    p = spec.p
    if p < 3 or not is_probable_prime(p):
        raise CompositeModulus(f"p = {p} is not an odd prime")
    prev = 1
    for q, e in spec.phi_factors.pairs:
        if q <= prev:
            raise UnsortedFactors(f"{q} does not follow {prev}")
        if e < 1:
            raise BadExponent(f"exponent {e} of {q} must be >= 1")
        prev = q
    for q, _ in spec.phi_factors.pairs:
        if not is_probable_prime(q):
            raise CompositeFactor(f"{q} is not prime")
    if spec.phi_factors.product != p - 1:
        raise ProductMismatch(
            f"factors multiply to {spec.phi_factors.product}, expected {p - 1}")


def as_unit(spec: GroupSpec, a: int, check: bool = True) -> int:
    """Reduce ``a`` mod p, rejecting zero; optionally validate ``spec`` first."""
    if check:
        validate_group_spec(spec)
    if a % spec.p == 0:
        raise NotAUnit(f"{a} is congruent to 0 mod {spec.p}")
    return a % spec.p


def _result(pairs, jays, counter, start) -> OrderResult:
    order = 1
    for (q, _), j in zip(pairs, jays):
        order *= q ** j
    cost = counter - start
    return OrderResult(order, tuple((q, j) for (q, _), j in zip(pairs, jays)), cost)


def _climb(b: int, q: int, p: int, counter: CostCounter) -> int:
    """Number of ``q``-th powerings needed to bring ``b`` to 1."""
    j = 0
    while b != 1:
        b = mod_exp(b, q, p, counter)
        j += 1
    return j


def order_classic(spec: GroupSpec, a: int, counter: CostCounter | None = None,
                  *, check: bool = True) -> OrderResult:
    """Per-factor method: each cofactor is formed from the other k - 1 prime powers."""
    a = as_unit(spec, a, check)
    counter = counter if counter is not None else CostCounter()
    start = counter.snapshot()
    pairs = spec.phi_factors.pairs
    exps = cofactors_naive(spec.phi_factors.prime_powers, counter)
    jays = []
    for (q, _), n in zip(pairs, exps):
        b = mod_exp(a, n, spec.p, counter)
        jays.append(_climb(b, q, spec.p, counter))
    return _result(pairs, jays, counter, start)


def order_fast(spec: GroupSpec, a: int, counter: CostCounter | None = None,
               *, check: bool = True) -> OrderResult:
    """Batched method: all cofactor powers come from one product tree."""
    a = as_unit(spec, a, check)
    counter = counter if counter is not None else CostCounter()
    start = counter.snapshot()
    pairs = spec.phi_factors.pairs
    powered = k_exponentiation(spec.phi_factors.prime_powers, a, spec.p, counter)
    jays = [_climb(b, q, spec.p, counter) for (q, _), b in zip(pairs, powered)]
    return _result(pairs, jays, counter, start)
