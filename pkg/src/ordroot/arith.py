"""Instrumented modular arithmetic and Miller-Rabin primality testing.

Integers are plain Python ``int`` values.  Every multiplication performed
inside the group goes through :func:`mul_mod` so that a :class:`CostCounter`
sees it; squarings are counted as ordinary multiplications.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidModulus, UndefinedGcd

DEFAULT_MR_ROUNDS = 64

_DEC_DIGITS = frozenset("0123456789")
_HEX_DIGITS = frozenset("0123456789abcdefABCDEF")

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


@dataclass
class CostCounter:
    """Tally of integer multiplications, split by purpose.

    ``exponent_mults`` counts plain products used to build exponents
    (product-tree nodes, cofactors); ``group_mults`` counts modular
    multiplications inside exponentiations.
    """

    exponent_mults: int = 0
    group_mults: int = 0

    def snapshot(self) -> CostCounter:
        return CostCounter(self.exponent_mults, self.group_mults)

    def __add__(self, other: CostCounter) -> CostCounter:
        return CostCounter(self.exponent_mults + other.exponent_mults,
                           self.group_mults + other.group_mults)

    def __sub__(self, other: CostCounter) -> CostCounter:
        return CostCounter(self.exponent_mults - other.exponent_mults,
                           self.group_mults - other.group_mults)

    def merge(self, other: CostCounter) -> None:
        """Add another counter's tallies into this one in place."""
        self.exponent_mults += other.exponent_mults
        self.group_mults += other.group_mults

    def as_dict(self) -> dict[str, int]:
        return {"exponent_mults": self.exponent_mults,
                "group_mults": self.group_mults}


def _check_modulus(m: int) -> None:
    if m < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {m}")


def mul_mod(x: int, y: int, m: int, counter: CostCounter | None = None) -> int:
    """Return ``x*y mod m``, charging one group multiplication."""
    _check_modulus(m)
    if counter is not None:
        counter.group_mults += 1
    return (x * y) % m


def mul_exp(x: int, y: int, counter: CostCounter | None = None) -> int:
    """Plain integer product used while forming exponents."""
    if counter is not None:
        counter.exponent_mults += 1
    return x * y


def mod_exp(base: int, exponent: int, m: int,
            counter: CostCounter | None = None) -> int:
    """Left-to-right square-and-multiply.

    Uses at most ``2*(bitlen(exponent) - 1)`` group multiplications.
    """
    _check_modulus(m)
    if exponent < 0:
        raise ValueError("negative exponents are not supported")
    if exponent == 0:
        return 1 % m
    base %= m
    result = base
    for bit in bin(exponent)[3:]:
        result = mul_mod(result, result, m, counter)
        if bit == "1":
            result = mul_mod(result, base, m, counter)
    return result


def gcd(a: int, b: int) -> int:
    """Euclid's algorithm on non-negative integers."""
    if a == 0 and b == 0:
        raise UndefinedGcd("gcd(0, 0) is undefined")
    while b:
        a, b = b, a % b
    return a


def is_probable_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS,
                      rng: random.Random | None = None) -> bool:
    """Miller-Rabin test; a composite survives with probability < 4**-rounds.

    Bases are drawn from ``rng``; when it is omitted a generator seeded by
    ``n`` is used so the answer is reproducible.
    """
    if rounds < 1:
        raise ValueError("rounds must be >= 1")
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    if n < _SMALL_PRIMES[-1] ** 2:
        return True
    if rng is None:
        rng = random.Random(n)

    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for _ in range(rounds):
        x = pow(rng.randrange(2, n - 1), d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def parse_natural(text: str) -> int:
    """Parse a decimal or ``0x``-prefixed hexadecimal non-negative integer."""
    s = text.strip().replace("_", "")
    if s[:2].lower() == "0x":
        digits, base = s[2:], 16
    else:
        digits, base = s, 10
    allowed = _HEX_DIGITS if base == 16 else _DEC_DIGITS
    if not digits or not set(digits) <= allowed:
        raise ValueError(f"not a non-negative integer: {text!r}")
    return int(digits, base)


def format_natural(n: int, hexadecimal: bool = False) -> str:
    if n < 0:
        raise ValueError("negative values are not Naturals")
    return hex(n) if hexadecimal else str(n)
