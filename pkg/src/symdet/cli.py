"""Command-line front end.

Subcommands: betti, classify, schur-rank, partition, verify.  Results go to
standard output, diagnostics to standard error.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify as classify_mod
from . import resolution, schur, verify
from .partitions import Partition
from .resolution import RingParams


def _print_json(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=("json", "table"),
        default="table",
        help="output format (default: table)",
    )


def cmd_betti(args: argparse.Namespace) -> int:
    table = resolution.betti_table(RingParams(args.n, args.t))
    if args.format == "json":
        _print_json(table.to_json_dict())
    else:
        print(table.render_text())
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    if args.family == "pfaffian-square":
        if args.t is not None:
            raise ValueError("the pfaffian-square family takes no --t")
        verdict = classify_mod.classify_pfaffian_square(args.n)
    else:
        if args.t is None:
            raise ValueError(f"--t is required for the {args.family} family")
        if args.family == "symmetric":
            verdict = classify_mod.classify_symmetric(RingParams(args.n, args.t))
        else:
            verdict = classify_mod.classify_hankel(args.n, args.t)
    if args.format == "json":
        _print_json(verdict.to_json_dict())
    else:
        print(verdict.summary())
    return 0


def cmd_schur_rank(args: argparse.Namespace) -> int:
    if args.n < 1:
        raise ValueError("--n must be at least 1")
    shape = Partition.parse(args.shape)
    rank = schur.schur_rank(shape, args.n)
    oracle = None
    if args.oracle_cap is not None:
        oracle = schur.ssyt_count(shape.conjugate(), args.n, cap=args.oracle_cap)
    if args.format == "json":
        doc = {"shape": str(shape), "n": args.n, "rank": str(rank)}
        if oracle is not None:
            doc["oracle"] = str(oracle)
        _print_json(doc)
    else:
        print(rank)
        if oracle is not None:
            print(f"oracle: {oracle}")
    if oracle is not None and oracle != rank:
        print("error: tableau oracle disagrees with the closed form", file=sys.stderr)
        return 1
    return 0


def cmd_partition(args: argparse.Namespace) -> int:
    shape = Partition.parse(args.shape)
    hook = None if shape.diagonal_rank() == 0 else shape.to_hook_notation()
    if args.format == "json":
        _print_json(
            {
                "shape": str(shape),
                "weight": shape.weight,
                "conjugate": str(shape.conjugate()),
                "diagonal_rank": shape.diagonal_rank(),
                "hook_notation": None if hook is None else str(hook),
            }
        )
    else:
        print(f"shape: {shape}")
        print(f"weight: {shape.weight}")
        print(f"conjugate: {shape.conjugate()}")
        print(f"diagonal rank: {shape.diagonal_rank()}")
        print(f"hook notation: {'(none)' if hook is None else hook}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    opts = verify.VerifyOptions(
        n_max=args.n_max, t_max=args.t_max, oracle_cap=args.oracle_cap
    )
    results = verify.run_checks(opts)
    failures = 0
    for name, failure in results:
        if failure is None:
            print(f"PASS {name}")
        else:
            failures += 1
            print(f"FAIL {name}: {failure}")
    print(f"{len(results) - failures} of {len(results)} checks passed")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symdet",
        description=(
            "Exact Betti tables of generic symmetric determinantal rings and "
            "Gorenstein / almost Gorenstein classification by partition "
            "combinatorics."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    betti = sub.add_parser(
        "betti", help="graded Betti table of the symmetric determinantal ring"
    )
    betti.add_argument("--n", type=int, required=True, help="symmetric matrix size")
    betti.add_argument(
        "--t", type=int, required=True, help="minors of size t+1 generate the ideal"
    )
    _add_format(betti)
    betti.set_defaults(func=cmd_betti)

    classify = sub.add_parser(
        "classify", help="Gorenstein / almost Gorenstein verdict for one ring"
    )
    classify.add_argument(
        "--family",
        choices=("symmetric", "hankel", "pfaffian-square"),
        required=True,
    )
    classify.add_argument("--n", type=int, required=True)
    classify.add_argument(
        "--t", type=int, default=None, help="required for symmetric and hankel"
    )
    _add_format(classify)
    classify.set_defaults(func=cmd_classify)

    schur_rank = sub.add_parser(
        "schur-rank", help="rank of the Schur module of a shape"
    )
    schur_rank.add_argument(
        "--shape", required=True, help='comma-separated parts, e.g. "5,4,1"'
    )
    schur_rank.add_argument("--n", type=int, required=True, help="rank of the free module")
    schur_rank.add_argument(
        "--oracle-cap",
        type=int,
        default=None,
        help="also run the tableau-count oracle with this box budget",
    )
    _add_format(schur_rank)
    schur_rank.set_defaults(func=cmd_schur_rank)

    partition = sub.add_parser(
        "partition", help="conjugate, rank and hook notation of a partition"
    )
    partition.add_argument(
        "--shape", required=True, help='comma-separated parts; "" for the empty partition'
    )
    _add_format(partition)
    partition.set_defaults(func=cmd_partition)

    verify_cmd = sub.add_parser(
        "verify", help="run the cross-validation suites over a parameter grid"
    )
    verify_cmd.add_argument("--n-max", type=int, default=6, help="grid bound (default 6)")
    verify_cmd.add_argument(
        "--t-max", type=int, default=None, help="cap t (default: n-1)"
    )
    verify_cmd.add_argument(
        "--oracle-cap", type=int, default=None, help="box budget for the oracles"
    )
    verify_cmd.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
