"""Command-line surface.

Exit codes: 0 success / true verdict, 1 false verdict (not Baxter,
incompatible pair), 2 usage or parse error, 3 internal invariant
violation (count mismatch, theorem counterexample, ambiguous pair).
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .baxter import baxter_number, is_baxter_definition, is_baxter_matrix
from .core import (
    all_permutations,
    format_asm,
    format_permutation,
    parse_asm,
    parse_permutation,
    perm_to_matrix,
)
from .render import RenderOptions, render_tiling
from .smalleralg import smaller_asm
from .tiling import (
    AmbiguousPair,
    IncompatiblePair,
    asm_pair_from_tiling,
    count_tilings,
    enumerate_pairs,
    enumerate_tilings,
    format_tiling,
    parse_tiling,
    tiling_from_asm_pair,
)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

_COUNT_HELP = (
    "Print the number of Baxter permutations of size N.  The closed-form sum"
    " is evaluated with binomial coefficients of N+1 so the value counts"
    " size-N permutations; classical displays of the same sum put N+2 in"
    " every binomial and then count size N+1 instead."
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toadasm",
        description="Domino tilings of Aztec diamonds, ASM pairs, and Baxter permutations.",
    )
    top = parser.add_subparsers(dest="group", required=True)

    baxter = top.add_parser("baxter", help="Baxter permutation tests and counts")
    bsub = baxter.add_subparsers(dest="command", required=True)
    check = bsub.add_parser("check", help="test whether a permutation is Baxter")
    check.add_argument("perm", nargs="+", help="one-line word, e.g. 45123 or 4 5 1 2 3")
    check.add_argument("--witness", action="store_true", help="print one dividing line per row pair")
    count = bsub.add_parser("count", help="count Baxter permutations of size N", description=_COUNT_HELP)
    count.add_argument("n", type=int)
    count.add_argument("--verify", action="store_true", help="cross-check by brute force (needs n <= 7)")

    asm = top.add_parser("asm", help="alternating sign matrix constructions")
    asub = asm.add_subparsers(dest="command", required=True)
    smaller = asub.add_parser("smaller", help="the smaller ASM compatible with a permutation matrix")
    smaller.add_argument("perm", nargs="+")

    tilings = top.add_parser("tilings", help="enumerate and count diamond tilings")
    tsub = tilings.add_subparsers(dest="command", required=True)
    tcount = tsub.add_parser("count", help="exact tiling count (DP vs closed form)")
    tcount.add_argument("n", type=int)
    tenum = tsub.add_parser("enum", help="write every tiling of order N to files")
    tenum.add_argument("n", type=int)
    tenum.add_argument("--render", choices=("ascii", "svg"), help="also write a rendering per tiling")
    tenum.add_argument("--out", default=".", metavar="DIR", help="output directory (default: .)")
    tenum.add_argument("--force", action="store_true", help="allow n > 5 despite the 2^{n(n+1)/2} blow-up")

    pair = top.add_parser("pair", help="convert between tilings and ASM pairs")
    psub = pair.add_subparsers(dest="command", required=True)
    ft = psub.add_parser("from-tiling", help="print the ASM pair of a tiling file (smaller, then larger)")
    ft.add_argument("file")
    tt = psub.add_parser("to-tiling", help="reconstruct the tiling of a smaller/larger ASM file pair")
    tt.add_argument("asm_a", metavar="asmA", help="file holding the order-n ASM")
    tt.add_argument("asm_b", metavar="asmB", help="file holding the order-(n+1) ASM")

    verify = top.add_parser("verify", help="exhaustive checks")
    vsub = verify.add_subparsers(dest="command", required=True)
    theorem = vsub.add_parser(
        "theorem",
        help="sweep all permutations of size n+1: smaller ASM is -1-free iff Baxter",
    )
    theorem.add_argument("n", type=int)

    return parser


def _cmd_baxter_check(args: argparse.Namespace) -> int:
    p = parse_permutation(" ".join(args.perm))
    verdict, witness = is_baxter_matrix(p)
    if verdict != is_baxter_definition(p):
        print("internal error: the two Baxter tests disagree", file=sys.stderr)
        return EXIT_INTERNAL
    print("baxter" if verdict else "not-baxter")
    if args.witness:
        for i, d in enumerate(witness.dividers, start=1):
            print(f"i={i} d={d}" if d is not None else f"FAIL i={i}")
    return EXIT_OK if verdict else EXIT_FALSE


def _cmd_baxter_count(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise ValueError("n must be >= 1")
    value = baxter_number(args.n)
    if not args.verify:
        print(value)
        return EXIT_OK
    if args.n > 7:
        raise ValueError("--verify sweeps all n! permutations; need n <= 7")
    brute = sum(1 for p in all_permutations(args.n) if is_baxter_definition(p))
    ok = value == brute
    print(f"{value} {brute} {'OK' if ok else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_INTERNAL


def _cmd_asm_smaller(args: argparse.Namespace) -> int:
    p = parse_permutation(" ".join(args.perm))
    print(format_asm(smaller_asm(p)))
    return EXIT_OK


def _cmd_tilings_count(args: argparse.Namespace) -> int:
    if not 1 <= args.n <= 16:
        raise ValueError("need 1 <= n <= 16")
    dp = count_tilings(args.n)
    closed = 2 ** (args.n * (args.n + 1) // 2)
    ok = dp == closed
    print(f"{dp} {closed} {'OK' if ok else 'MISMATCH'}")
    return EXIT_OK if ok else EXIT_INTERNAL


def _cmd_tilings_enum(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise ValueError("n must be >= 1")
    if args.n > 5 and not args.force:
        raise ValueError(f"order {args.n} means 2^{args.n * (args.n + 1) // 2} files; pass --force to proceed")
    os.makedirs(args.out, exist_ok=True)
    count = 0
    for index, t in enumerate(enumerate_tilings(args.n)):
        stem = os.path.join(args.out, f"toad-{args.n}-{index}")
        with open(stem, "w", encoding="ascii") as fh:
            fh.write(format_tiling(t) + "\n")
        if args.render:
            opts = RenderOptions(format=args.render)
            suffix = ".svg" if args.render == "svg" else ".txt"
            with open(stem + suffix, "w", encoding="utf-8") as fh:
                fh.write(render_tiling(t, opts) + "\n")
        count += 1
    print(f"wrote {count} tilings to {args.out}")
    return EXIT_OK


def _cmd_pair_from_tiling(args: argparse.Namespace) -> int:
    with open(args.file, encoding="ascii") as fh:
        t = parse_tiling(fh.read())
    smaller, larger = asm_pair_from_tiling(t)
    print(format_asm(smaller))
    print(format_asm(larger))
    return EXIT_OK


def _cmd_pair_to_tiling(args: argparse.Namespace) -> int:
    with open(args.asm_a, encoding="ascii") as fh:
        a = parse_asm(fh.read())
    with open(args.asm_b, encoding="ascii") as fh:
        b = parse_asm(fh.read())
    try:
        t = tiling_from_asm_pair(a, b)
    except IncompatiblePair:
        print("incompatible")
        return EXIT_FALSE
    print(format_tiling(t))
    return EXIT_OK


def _cmd_verify_theorem(args: argparse.Namespace) -> int:
    n = args.n
    if not 1 <= n <= 6:
        raise ValueError("the sweep covers all (n+1)! permutations; need 1 <= n <= 6")
    fibers = enumerate_pairs(n) if n <= 4 else None
    total = 0
    baxter_count = 0
    for p in all_permutations(n + 1):
        total += 1
        negative_free = smaller_asm(p).negative_count() == 0
        by_definition = is_baxter_definition(p)
        by_matrix, _ = is_baxter_matrix(p)
        if not (negative_free == by_definition == by_matrix):
            print(f"counterexample: {format_permutation(p)}")
            return EXIT_INTERNAL
        if fibers is not None and fibers[perm_to_matrix(p)] != frozenset({smaller_asm(p)}):
            print(f"counterexample: {format_permutation(p)} (tiling oracle)")
            return EXIT_INTERNAL
        if by_definition:
            baxter_count += 1
    print(f"{total} permutations, {baxter_count} Baxter, THEOREM HOLDS")
    return EXIT_OK


_HANDLERS = {
    ("baxter", "check"): _cmd_baxter_check,
    ("baxter", "count"): _cmd_baxter_count,
    ("asm", "smaller"): _cmd_asm_smaller,
    ("tilings", "count"): _cmd_tilings_count,
    ("tilings", "enum"): _cmd_tilings_enum,
    ("pair", "from-tiling"): _cmd_pair_from_tiling,
    ("pair", "to-tiling"): _cmd_pair_to_tiling,
    ("verify", "theorem"): _cmd_verify_theorem,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = _HANDLERS[(args.group, args.command)]
    try:
        return handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AmbiguousPair as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
