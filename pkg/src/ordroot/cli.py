"""Command-line front end.

Exit codes: 0 ok, 1 usage, 2 validation, 3 tries exhausted, 4 not a unit,
5 incompatible k, 6 selftest mismatch.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from typing import Sequence

from .arith import CostCounter, parse_natural
from .errors import (IncompatibleK, NotAUnit, TooSmall, TriesExhausted,
                     ValidationError)
from .forge import generate_factored_group, generate_safe_prime_group
from .order import Factorization, GroupSpec, order_classic, order_fast
from .primroot import (SearchPolicy, Strategy, find_least_primitive_root,
                       search_primitive_root)
from .ptree import compare_strategies
from .selftest import SelftestMismatch, run_selftest

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_TRIES = 0, 1, 2, 3
EXIT_NOT_UNIT, EXIT_INCOMPATIBLE_K, EXIT_MISMATCH = 4, 5, 6

CSV_HEADER = ["k", "naive_expmuls", "tree_expmuls", "naive_ms", "tree_ms", "ratio"]


def parse_factor_expression(text: str) -> Factorization:
    """Parse ``"2^2 * 3"`` style text; ``"1"`` is the empty factorization."""
    if text.strip() == "1":
        return Factorization(())
    pairs = []
    for term in text.split("*"):
        base, sep, exp = term.partition("^")
        if not base.strip() or (sep and not exp.strip()):
            raise ValueError(f"malformed factor term {term!r}")
        pairs.append((parse_natural(base), parse_natural(exp) if sep else 1))
    return Factorization(tuple(pairs))


def format_factor_expression(pairs: Sequence[tuple[int, int]]) -> str:
    terms = [f"{p}^{e}" if e > 1 else str(p) for p, e in pairs if e > 0]
    return "*".join(terms) if terms else "1"


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _natural(text: str) -> int:
    try:
        return parse_natural(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _factors(text: str) -> Factorization:
    try:
        return parse_factor_expression(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _k_list(text: str) -> list[int]:
    try:
        ks = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k list {text!r}") from None
    if not ks or any(k < 2 for k in ks):
        raise argparse.ArgumentTypeError("every k must be >= 2")
    return ks


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=False))
        return
    for key, value in report.items():
        if isinstance(value, dict):
            value = " ".join(f"{k}={v}" for k, v in value.items())
        print(f"{key}={value}")


def _seed(args) -> int:
    if args.seed is None:
        args.seed = 0
        print("seed=0 (default)", file=sys.stderr)
    return args.seed


def cmd_order(args) -> int:
    spec = GroupSpec(args.p, args.factors)
    counter = CostCounter()
    method = order_fast if args.method == "fast" else order_classic
    result = method(spec, args.element, counter)
    _emit({
        "p": str(spec.p),
        "factors": format_factor_expression(spec.phi_factors.pairs),
        "element": str(args.element),
        "order": str(result.order),
        "order_factors": format_factor_expression(result.prime_exponents),
        "cost": result.cost.as_dict(),
    }, args.json)
    return EXIT_OK


def cmd_primroot(args) -> int:
    spec = GroupSpec(args.p, args.factors)
    counter = CostCounter()
    if args.method == "least":
        generator = find_least_primitive_root(spec, counter)
        tries = generator - 1
    else:
        policy = SearchPolicy(Strategy(args.method), args.max_tries,
                              random.Random(_seed(args)))
        found = search_primitive_root(spec, policy, counter)
        generator, tries = found.generator, found.tries
    _emit({
        "p": str(spec.p),
        "factors": format_factor_expression(spec.phi_factors.pairs),
        "generator": str(generator),
        "tries": tries,
        "cost": counter.as_dict(),
    }, args.json)
    return EXIT_OK


def cmd_generate(args) -> int:
    rng = random.Random(_seed(args))
    counter = CostCounter()
    if args.method == "safe":
        group = generate_safe_prime_group(args.bits, rng, counter)
    else:
        group = generate_factored_group(args.bits, args.k, rng, counter)
    _emit({
        "p": str(group.spec.p),
        "factors": format_factor_expression(group.spec.phi_factors.pairs),
        "generator": str(group.generator),
        "tries": group.tries,
        "attempts": group.attempts,
        "cost": counter.as_dict(),
    }, args.json)
    return EXIT_OK


def _num(x: float) -> str:
    return str(int(x)) if float(x).is_integer() else f"{x:.4f}"


def cmd_bench(args) -> int:
    rows = compare_strategies(args.k_list, args.bits, args.trials, _seed(args),
                              exponentiate=not args.exponent_only)
    if args.format == "json":
        print(json.dumps({"rows": [{
            "k": r.k,
            "naive_expmuls": r.naive_expmuls, "tree_expmuls": r.tree_expmuls,
            "naive_groupmuls": r.naive_groupmuls, "tree_groupmuls": r.tree_groupmuls,
            "naive_ms": r.naive_ms, "tree_ms": r.tree_ms, "ratio": r.ratio,
        } for r in rows]}))
        return EXIT_OK
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in rows:
        writer.writerow([r.k, _num(r.naive_expmuls), _num(r.tree_expmuls),
                         f"{r.naive_ms:.3f}", f"{r.tree_ms:.3f}", f"{r.ratio:.4f}"])
    sys.stdout.write(buf.getvalue())
    return EXIT_OK


def cmd_selftest(args) -> int:
    if args.max_p > 10**6:
        print("selftest: --max-p exceeds the oracle limit 1000000", file=sys.stderr)
        return EXIT_USAGE
    try:
        summary = run_selftest(args.max_p, unlifted=args.unlifted_batched)
    except SelftestMismatch as exc:
        print(f"FAIL {exc}")
        return EXIT_MISMATCH
    print(f"{summary.primes} primes checked, {summary.elements} elements, "
          f"{summary.pairs} coprime-order pairs, 0 mismatches")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ordroot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def group_args(sp):
        sp.add_argument("-p", type=_natural, required=True, help="prime modulus")
        sp.add_argument("--factors", type=_factors, required=True,
                        help='factorization of p-1, e.g. "2^2*3"')
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("order", help="multiplicative order of an element")
    group_args(sp)
    sp.add_argument("-a", "--element", type=_natural, required=True)
    sp.add_argument("--method", choices=["classic", "fast"], default="fast")
    sp.set_defaults(func=cmd_order)

    sp = sub.add_parser("primroot", help="find a primitive root")
    group_args(sp)
    sp.add_argument("--method", default="batched",
                    choices=[s.value for s in Strategy] + ["least"])
    sp.add_argument("--seed", type=int)
    sp.add_argument("--max-tries", type=int, default=128)
    sp.set_defaults(func=cmd_primroot)

    sp = sub.add_parser("generate", help="generate a prime with factored p-1")
    sp.add_argument("--bits", type=int, default=64)
    sp.add_argument("--method", choices=["safe", "factored"], default="safe")
    sp.add_argument("--k", type=int, default=4, help="prime factors of p-1 (factored)")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser(
        "bench", help="naive vs product-tree cofactor costs",
        description="Trial t for a given k draws its inputs from "
                    'random.Random(f"{seed}:{k}:{t}"), so rows do not depend '
                    "on evaluation order.")
    sp.add_argument("--k-list", type=_k_list, default=[2, 4, 8, 16, 32])
    sp.add_argument("--bits", type=int, default=64, help="bits per factor")
    sp.add_argument("--trials", type=int, default=3)
    sp.add_argument("--format", choices=["csv", "json"], default="csv")
    sp.add_argument("--seed", type=int)
    sp.add_argument("--exponent-only", action="store_true",
                    help="skip the modular exponentiation stage")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("selftest", help="brute-force oracle sweep")
    sp.add_argument("--max-p", type=int, default=2000)
    sp.add_argument("--unlifted-batched", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"validation failed: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NotAUnit as exc:
        print(f"not a unit: {exc}", file=sys.stderr)
        return EXIT_NOT_UNIT
    except TriesExhausted as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_TRIES
    except IncompatibleK as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INCOMPATIBLE_K
    except (TooSmall, ValueError) as exc:
        print(f"usage: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
