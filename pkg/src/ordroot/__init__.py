"""Multiplicative orders and primitive roots in Z*_p from a factored p - 1."""

from .arith import CostCounter, gcd, is_probable_prime, mod_exp, mul_mod
from .forge import GeneratedGroup, generate_factored_group, generate_safe_prime_group
from .order import (Factorization, GroupSpec, OrderResult, order_classic,
                    order_fast, validate_group_spec)
from .primroot import (SearchPolicy, Strategy, count_primitive_roots,
                       find_least_primitive_root, find_primitive_root,
                       is_primitive_root)
from .ptree import (ProductTree, build_product_tree, cofactors, cofactors_naive,
                    k_exponentiation)

__all__ = [
    "CostCounter", "gcd", "is_probable_prime", "mod_exp", "mul_mod",
    "GeneratedGroup", "generate_factored_group", "generate_safe_prime_group",
    "Factorization", "GroupSpec", "OrderResult", "order_classic", "order_fast",
    "validate_group_spec",
    "SearchPolicy", "Strategy", "count_primitive_roots", "find_least_primitive_root",
    "find_primitive_root", "is_primitive_root",
    "ProductTree", "build_product_tree", "cofactors", "cofactors_naive",
    "k_exponentiation",
]
