"""Finding and verifying generators of Z*_p."""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .arith import CostCounter, mod_exp
from .errors import TriesExhausted
from .order import GroupSpec, as_unit, order_classic, validate_group_spec
from .ptree import k_exponentiation

DEFAULT_MAX_TRIES = 128


class Strategy(str, enum.Enum):
    FACTOR_TEST = "factor-test"   # a**((p-1)/q) != 1 for each prime q, one exponentiation each
    ORDER_BASED = "order-based"   # full order computation, compare with p - 1
    BATCHED = "batched"           # product-tree exponentiation, then lift


@dataclass
class SearchPolicy:
    strategy: Strategy = Strategy.BATCHED
    max_tries: int = DEFAULT_MAX_TRIES
    rng: random.Random = field(default_factory=lambda: random.Random(0))

    def __post_init__(self) -> None:
        self.strategy = Strategy(self.strategy)
        if self.max_tries < 1:
            raise ValueError("max_tries must be >= 1")


@dataclass(frozen=True)
class SearchResult:
    generator: int
    tries: int


def is_primitive_root(spec: GroupSpec, a: int, counter: CostCounter | None = None,
                      *, check: bool = True) -> bool:
    """True iff ``a**((p-1)/q) != 1`` for every prime ``q`` dividing ``p - 1``.

    The product tree yields ``a**((p-1)/q**e)``; raising that to ``q**(e-1)``
    gives the power actually tested.  Testing the unlifted value alone would
    accept non-generators whenever some ``e > 1``.
    """
    a = as_unit(spec, a, check)
    pairs = spec.phi_factors.pairs
    powered = k_exponentiation(spec.phi_factors.prime_powers, a, spec.p, counter)
    for (q, e), b in zip(pairs, powered):
        if e > 1:
            b = mod_exp(b, q ** (e - 1), spec.p, counter)
        if b == 1:
            return False
    return True


def _factor_test(spec: GroupSpec, a: int, counter: CostCounter | None) -> bool:
    n = spec.p - 1
    return all(mod_exp(a, n // q, spec.p, counter) != 1
               for q in spec.phi_factors.primes)


def _order_based(spec: GroupSpec, a: int, counter: CostCounter | None) -> bool:
    return order_classic(spec, a, counter, check=False).order == spec.p - 1


def _batched(spec: GroupSpec, a: int, counter: CostCounter | None) -> bool:
    return is_primitive_root(spec, a, counter, check=False)


_ACCEPT = {
    Strategy.FACTOR_TEST: _factor_test,
    Strategy.ORDER_BASED: _order_based,
    Strategy.BATCHED: _batched,
}


def search_primitive_root(spec: GroupSpec, policy: SearchPolicy | None = None,
                          counter: CostCounter | None = None) -> SearchResult:
    """Draw candidates uniformly from ``[2, p-2]`` until one is accepted."""
    validate_group_spec(spec)
    policy = policy or SearchPolicy()
    p = spec.p
    if p == 3:
        return SearchResult(2, 1)
    accept = _ACCEPT[policy.strategy]
    for tries in range(1, policy.max_tries + 1):
        a = policy.rng.randint(2, p - 2)
        if accept(spec, a, counter):
            return SearchResult(a, tries)
    raise TriesExhausted(
        f"no primitive root mod {p} after {policy.max_tries} tries")


def find_primitive_root(spec: GroupSpec, policy: SearchPolicy | None = None,
                        counter: CostCounter | None = None) -> int:
    return search_primitive_root(spec, policy, counter).generator


def find_least_primitive_root(spec: GroupSpec,
                              counter: CostCounter | None = None) -> int:
    validate_group_spec(spec)
    a = 2
    while not is_primitive_root(spec, a, counter, check=False):
        a += 1
    return a


def count_primitive_roots(spec: GroupSpec) -> int:
    """Number of generators, ``phi(p - 1)``, read off the factorization."""
    validate_group_spec(spec)
    total = 1
    for q, e in spec.phi_factors.pairs:
        total *= q ** (e - 1) * (q - 1)
    return total
