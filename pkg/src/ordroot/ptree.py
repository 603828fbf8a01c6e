"""Product trees and batched cofactor exponentiation.

Given factors ``n_1 .. n_k`` of ``n`` we want every cofactor ``n / n_i``.
Taking each as a product of the other ``k - 1`` factors costs ``k - 2``
multiplications apiece.  A balanced product tree brings that down: after
``k - 2`` precomputed partial products, each cofactor is the product of the
siblings met on the way from its leaf to the top, i.e. ``log2(k) - 1``
multiplications when ``k`` is a power of two.

The tree stops at two nodes (the two half-products).  The full product is
never formed because no cofactor needs it.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Sequence

from .arith import CostCounter, is_probable_prime, mod_exp, mul_exp
from .errors import EmptyInput, InvalidModulus


@dataclass(frozen=True)
class ProductTree:
    """Levels of partial products; ``levels[0]`` holds the leaves.

    Node ``i`` of level ``j`` covers nodes ``2i`` and ``2i + 1`` of level
    ``j - 1``.  When a level has odd length its last node is carried up
    unmultiplied.
    """

    levels: tuple[tuple[int, ...], ...]

    @property
    def leaves(self) -> tuple[int, ...]:
        return self.levels[0]

    def __len__(self) -> int:
        return len(self.levels[0])


def build_product_tree(factors: Sequence[int],
                       counter: CostCounter | None = None) -> ProductTree:
    factors = tuple(factors)
    if not factors:
        raise EmptyInput("cannot build a product tree over zero factors")
    if any(f < 1 for f in factors):
        raise ValueError("factors must be positive")
    levels = [factors]
    while len(levels[-1]) > 2:
        prev = levels[-1]
        nxt = [mul_exp(prev[i], prev[i + 1], counter)
               for i in range(0, len(prev) - 1, 2)]
        if len(prev) % 2:
            nxt.append(prev[-1])
        levels.append(tuple(nxt))
    return ProductTree(tuple(levels))


def _path_siblings(tree: ProductTree, leaf: int) -> list[int]:
    out = []
    idx = leaf
    for level in tree.levels:
        sib = idx ^ 1
        if sib < len(level):
            out.append(level[sib])
        idx //= 2
    return out


def cofactor(tree: ProductTree, i: int, counter: CostCounter | None = None) -> int:
    """``prod(leaves) / leaves[i]``, multiplying path siblings from the leaf upward."""
    sibs = _path_siblings(tree, i)
    if not sibs:
        return 1
    value = sibs[0]
    for s in sibs[1:]:
        value = mul_exp(value, s, counter)
    return value


def cofactors(tree: ProductTree, counter: CostCounter | None = None) -> list[int]:
    return [cofactor(tree, i, counter) for i in range(len(tree))]


def cofactor_naive(factors: Sequence[int], i: int,
                   counter: CostCounter | None = None) -> int:
    """Reference strategy: multiply the other ``k - 1`` factors together."""
    others = tuple(factors[:i]) + tuple(factors[i + 1:])
    if not others:
        return 1
    value = others[0]
    for f in others[1:]:
        value = mul_exp(value, f, counter)
    return value


def cofactors_naive(factors: Sequence[int],
                    counter: CostCounter | None = None) -> list[int]:
    factors = tuple(factors)
    if not factors:
        raise EmptyInput("cannot form cofactors of zero factors")
    return [cofactor_naive(factors, i, counter) for i in range(len(factors))]


def k_exponentiation(factors: Sequence[int], a: int, m: int,
                     counter: CostCounter | None = None) -> list[int]:
    """Return ``[a**(n/n_i) mod m for each factor n_i]`` with ``n = prod(factors)``."""
    if m < 2:
        raise InvalidModulus(f"modulus must be >= 2, got {m}")
    tree = build_product_tree(factors, counter)
    return [mod_exp(a, c, m, counter) for c in cofactors(tree, counter)]


def tree_cost(k: int) -> tuple[int, int]:
    """Closed-form (precompute, per-cofactor) counts for power-of-two ``k``."""
    if k < 1 or k & (k - 1):
        raise ValueError("closed form only holds for powers of two")
    if k == 1:
        return 0, 0
    return k - 2, k.bit_length() - 2


@dataclass
class CostRow:
    k: int
    naive_expmuls: float
    tree_expmuls: float
    naive_groupmuls: float
    tree_groupmuls: float
    naive_ms: float
    tree_ms: float

    @property
    def ratio(self) -> float:
        if self.tree_expmuls == 0:
            return 1.0 if self.naive_expmuls == 0 else float("inf")
        return self.naive_expmuls / self.tree_expmuls


def _random_prime(bits: int, rng: random.Random) -> int:
    while True:
        cand = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_probable_prime(cand, rng=rng):
            return cand


def trial_rng(seed: int, k: int, trial: int) -> random.Random:
    """Per-trial generator derived from the master seed.

    The rule is ``Random(f"{seed}:{k}:{trial}")``, so a trial's inputs do
    not depend on which other trials ran or in which order.
    """
    return random.Random(f"{seed}:{k}:{trial}")


def compare_strategies(k_values: Sequence[int], factor_bits: int, trials: int,
                       seed: int = 0, exponentiate: bool = True) -> list[CostRow]:
    """Average naive-vs-tree costs over ``trials`` random factor lists per ``k``.

    Wall times cover the cofactor stage only, which is where the two
    strategies differ.  With ``exponentiate`` each cofactor is also applied to
    a random base modulo a random ``factor_bits``-bit prime to report group
    multiplications.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if factor_bits < 2:
        raise ValueError("factor_bits must be >= 2")
    rows = []
    for k in k_values:
        if k < 2:
            raise ValueError(f"k must be >= 2, got {k}")
        naive_c, tree_c = CostCounter(), CostCounter()
        naive_t = tree_t = 0.0
        for t in range(trials):
            rng = trial_rng(seed, k, t)
            factors = [rng.getrandbits(factor_bits) | (1 << (factor_bits - 1))
                       for _ in range(k)]

            t0 = time.perf_counter()
            naive = cofactors_naive(factors, naive_c)
            t1 = time.perf_counter()
            tree = cofactors(build_product_tree(factors, tree_c), tree_c)
            t2 = time.perf_counter()
            naive_t += t1 - t0
            tree_t += t2 - t1
            assert naive == tree

            if exponentiate:
                m = _random_prime(max(factor_bits, 3), rng)
                a = rng.randrange(2, m - 1)
                for c in naive:
                    mod_exp(a, c, m, naive_c)
                for c in tree:
                    mod_exp(a, c, m, tree_c)
        rows.append(CostRow(
            k=k,
            naive_expmuls=naive_c.exponent_mults / trials,
            tree_expmuls=tree_c.exponent_mults / trials,
            naive_groupmuls=naive_c.group_mults / trials,
            tree_groupmuls=tree_c.group_mults / trials,
            naive_ms=1000 * naive_t / trials,
            tree_ms=1000 * tree_t / trials,
        ))
    return rows
