"""Command-line interface: ``bqsym <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import compositions as comp
from . import oracle, peak, qsym
from .compositions import CompositionError
from .expression import ParseError, parse_element, parse_index
from .permutations import (
    descent_composition,
    descent_set_b,
    parse_permutation,
    peak_composition,
    peak_composition_b,
    peak_set,
    peak_set_b,
)
from .verify import ALL_CHECKS, DEFAULT_KERNEL, corrupted_kernel, verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out-basis", choices=("M", "F"), default="M", help="basis for printed elements")
    p.add_argument("--max-degree", type=int, default=None, help="degree guard (verify: highest degree swept, default 4)")
    p.add_argument(
        "--notation", choices=("b", "a"), default="b",
        help="print type A elements without their leading 0 part ('a')",
    )
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="bqsym", description="Type A/B quasisymmetric functions and peak algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", parents=[common], help="multiply two elements")
    p.add_argument("lhs")
    p.add_argument("rhs")
    p.add_argument("--check-oracle", action="store_true", help="re-verify against the polynomial product")
    p.add_argument("--truncation", type=int, default=None, help="number of positive variables for the oracle (default: total degree)")

    p = sub.add_parser("coproduct", parents=[common], help="apply a coproduct")
    p.add_argument("expr")
    p.add_argument("--variant", choices=("a", "b", "chow"), default="b")

    p = sub.add_parser("antipode", parents=[common], help="apply an antipode")
    p.add_argument("expr")
    p.add_argument("--variant", choices=("a", "b", "recursive"), default="b")

    p = sub.add_parser("convert", parents=[common], help="rewrite in the M or F basis")
    p.add_argument("expr")
    p.add_argument("--to", choices=("M", "F"), default=None)

    p = sub.add_parser("theta", parents=[common], help="project onto the peak algebra")
    p.add_argument("expr")
    p.add_argument("--type", dest="flavor", choices=("a", "b"), default="b")

    p = sub.add_parser("k", parents=[common], help="expand a peak function K")
    p.add_argument("index", help="e.g. '[1,2]'")
    p.add_argument("--type", dest="flavor", choices=("a", "b"), default="b")

    p = sub.add_parser("stats", parents=[common], help="descent and peak statistics of a signed permutation")
    p.add_argument("permutation", help="e.g. '(-3,2,-4,5,1)'")

    p = sub.add_parser("dims", parents=[common], help="dimension counts in degree n")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", parents=[common], help="run the identity sweeps")
    p.add_argument("--checks", default=None, help=f"comma-separated subset of: {', '.join(ALL_CHECKS)}")
    p.add_argument("--inject-fault", choices=("product", "coproduct", "antipode"), default=None, help=argparse.SUPPRESS)
    return parser


# output helpers ---------------------------------------------------------------

def _emit(args, x) -> None:
    if isinstance(x, qsym.QSymElement):
        x = qsym.to_basis(x, args.out_basis)
    if args.format == "json":
        print(json.dumps(qsym.to_json(x)))
        return
    type_a = args.notation == "a"
    if isinstance(x, qsym.TensorElement):
        print(qsym.format_tensor(x, type_a))
    else:
        print(qsym.format_element(x, type_a))


def _guard(args, *elements) -> None:
    if args.max_degree is None:
        return
    total = sum(qsym.max_degree(x) for x in elements)
    if total > args.max_degree:
        raise UsageError(f"degree {total} exceeds --max-degree {args.max_degree}")


def _fmt_set(s) -> str:
    return "{" + ",".join(str(i) for i in s) + "}"


def _fmt_parts(p) -> str:
    return "(" + ",".join(str(i) for i in p) + ")"


# commands -------------------------------------------------------------------

def cmd_mul(args) -> int:
    x, y = parse_element(args.lhs), parse_element(args.rhs)
    _guard(args, x, y)
    product = qsym.multiply(x, y)
    _emit(args, product)
    if args.check_oracle:
        N = qsym.max_degree(x) + qsym.max_degree(y)
        if args.truncation is not None:
            N = args.truncation
        ok = oracle.expand_element(product, N) == oracle.expand_element(x, N) * oracle.expand_element(y, N)
        print(f"oracle check: {'pass' if ok else 'FAIL'}", file=sys.stderr)
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


def cmd_coproduct(args) -> int:
    x = parse_element(args.expr)
    _guard(args, x)
    _emit(args, qsym.COPRODUCTS[args.variant](x))
    return EXIT_OK


def cmd_antipode(args) -> int:
    x = parse_element(args.expr)
    _guard(args, x)
    _emit(args, qsym.ANTIPODES[args.variant](x))
    return EXIT_OK


def cmd_convert(args) -> int:
    x = parse_element(args.expr)
    _guard(args, x)
    if args.to:
        args.out_basis = args.to
    _emit(args, x)
    return EXIT_OK


def cmd_theta(args) -> int:
    x = parse_element(args.expr)
    _guard(args, x)
    _emit(args, peak.theta(x) if args.flavor == "a" else peak.theta_b(x))
    return EXIT_OK


def cmd_k(args) -> int:
    index = parse_index(args.index)
    if args.max_degree is not None and sum(index) > args.max_degree:
        raise UsageError(f"degree {sum(index)} exceeds --max-degree {args.max_degree}")
    _emit(args, peak.k_function(index, args.flavor.upper()))
    return EXIT_OK


def cmd_stats(args) -> int:
    p = parse_permutation(args.permutation)
    stats = {
        "Des_B": sorted(descent_set_b(p)),
        "C_B": list(descent_composition(p)),
        "Pe_B": sorted(peak_set_b(p)),
        "hatC_B": list(peak_composition_b(p)),
    }
    if all(x > 0 for x in p):
        stats["Pe"] = sorted(peak_set(p))
        stats["hatC"] = list(peak_composition(p))
    if args.format == "json":
        print(json.dumps(stats))
    else:
        for key, value in stats.items():
            shown = _fmt_set(value) if key.startswith(("Des", "Pe")) else _fmt_parts(value)
            print(f"{key} = {shown}")
    return EXIT_OK


def cmd_dims(args) -> int:
    n = args.n
    if n < 0:
        raise UsageError("n must be nonnegative")
    dims = {
        "compositions": len(comp.compositions_of(n)),
        "pseudo": len(comp.pseudo_compositions_of(n)),
        "peakA": len(comp.peak_compositions_of(n)),
        "peakB": len(comp.peak_pseudo_compositions_of(n)),
    }
    if args.format == "json":
        print(json.dumps(dims))
    else:
        for key, value in dims.items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_verify(args) -> int:
    degree = 4 if args.max_degree is None else args.max_degree
    if degree < 0:
        raise UsageError("--max-degree must be nonnegative")
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in checks if c not in ALL_CHECKS]
        if unknown:
            raise UsageError(f"unknown checks: {', '.join(unknown)}")
    kernel = corrupted_kernel(args.inject_fault) if args.inject_fault else DEFAULT_KERNEL
    report = verify(degree, checks, kernel)
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        for c in report["checks"]:
            line = f"{c['status'].upper():4}  {c['name']}  ({c['cases']} cases)"
            if c["counterexample"]:
                line += f"  counterexample: {c['counterexample']}"
            print(line)
    return EXIT_OK if report["ok"] else EXIT_FAIL


COMMANDS = {
    "mul": cmd_mul,
    "coproduct": cmd_coproduct,
    "antipode": cmd_antipode,
    "convert": cmd_convert,
    "theta": cmd_theta,
    "k": cmd_k,
    "stats": cmd_stats,
    "dims": cmd_dims,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, CompositionError, UsageError, qsym.NotTypeAError, ValueError) as exc:
        print(f"bqsym: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
