"""Command-line front end: ``maxmatch {count,enumerate,gen,verify}``.

Exit codes: 0 success, 2 input error, 3 cap exceeded, 4 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import extremal
from .families import FamilySpecError, parse_family_spec
from .oracle import DEFAULT_ORACLE_CAP, enumerate_maximal
from .signs import compute_signs, psi_forest
from .tree_core import (
    DEFAULT_TREE_CAP,
    CapExceeded,
    Forest,
    ParseError,
    RootedTree,
    TreeError,
    format_edge_list,
    parse_edge_list,
)

EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_FAIL = 0, 2, 3, 4


class InputError(Exception):
    pass


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=extremal.DEFAULT_SEED)
    common.add_argument("--cap-oracle", type=_positive, default=DEFAULT_ORACLE_CAP)
    common.add_argument("--cap-search", type=_positive, default=DEFAULT_TREE_CAP)
    common.add_argument("--threads", type=_positive, default=None,
                        help="worker processes for verify (default: $MAXMATCH_THREADS or 1)")
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="maxmatch", description="Count maximal matchings of trees and forests.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="number of maximal matchings")
    p.add_argument("input", nargs="?", help="edge-list file ('-' for stdin)")
    p.add_argument("--family", help="family spec such as spider:1,2,2")
    p.add_argument("--signs", action="store_true", help="also print the (alpha, beta, gamma) table")

    p = sub.add_parser("enumerate", parents=[common], help="list every maximal matching")
    p.add_argument("input", nargs="?")
    p.add_argument("--family")

    p = sub.add_parser("gen", parents=[common], help="write a family member as an edge list")
    p.add_argument("family_spec")

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive verification suite")
    p.add_argument("suite", choices=extremal.SUITES)
    p.add_argument("n_max", type=int)
    return parser


def _load(args) -> tuple[Forest, Optional[int]]:
    """Forest from --family or an input file, plus the family's expected count if any."""
    if args.family and args.input:
        raise InputError("give either an input file or --family, not both")
    if args.family:
        inst = parse_family_spec(args.family)
        return Forest.of(inst.tree), inst.expected_psi
    if not args.input:
        raise InputError("no input: pass an edge-list file or --family")
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.input) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from None
    return parse_edge_list(text), None


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _sign_rows(forest: Forest) -> list[dict]:
    rows = []
    for tree, vmap in zip(forest.components, forest.vertex_maps):
        table = compute_signs(RootedTree.build(tree, 0))
        for local, s in enumerate(table.signs):
            rows.append({"vertex": vmap[local], "alpha": str(s.alpha), "beta": str(s.beta), "gamma": str(s.gamma)})
    rows.sort(key=lambda r: r["vertex"])
    return rows


def cmd_count(args) -> int:
    forest, _ = _load(args)
    value = psi_forest(forest)
    if args.format == "json":
        doc = {"psi": str(value), "order": forest.n, "components": len(forest.components)}
        if args.signs:
            doc["signs"] = _sign_rows(forest)
        _emit(args, json.dumps(doc) + "\n")
        return EXIT_OK
    lines = [str(value)]
    if args.signs:
        lines.append("vertex alpha beta gamma")
        lines += [f"{r['vertex']} {r['alpha']} {r['beta']} {r['gamma']}" for r in _sign_rows(forest)]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    forest, _ = _load(args)
    matchings = [[list(e) for e in m] for m in enumerate_maximal(forest, args.cap_oracle)]
    if args.format == "json":
        _emit(args, json.dumps({"matchings": matchings, "count": len(matchings)}) + "\n")
    else:
        _emit(args, "".join(json.dumps(m) + "\n" for m in matchings) + f"count: {len(matchings)}\n")
    return EXIT_OK


def cmd_gen(args) -> int:
    inst = parse_family_spec(args.family_spec)
    info = {"family": inst.label, "order": inst.tree.n,
            "expected_psi": None if inst.expected_psi is None else str(inst.expected_psi)}
    body = format_edge_list(inst.tree)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
        if args.format == "json":
            print(json.dumps({**info, "out": args.out}))
        else:
            print(f"order: {inst.tree.n}")
            if inst.expected_psi is not None:
                print(f"expected_psi: {inst.expected_psi}")
        return EXIT_OK
    # without --out the metadata rides along as comment lines the parser skips
    header = f"# {inst.label}\n# order: {inst.tree.n}\n"
    if inst.expected_psi is not None:
        header += f"# expected_psi: {inst.expected_psi}\n"
    sys.stdout.write(header + body)
    return EXIT_OK


def cmd_verify(args) -> int:
    threads = args.threads or extremal.default_threads()
    report = extremal.run_suite(args.suite, args.n_max, cap=args.cap_search, oracle_cap=args.cap_oracle,
                                threads=threads, seed=args.seed)
    doc = report.to_dict()
    if args.format == "json":
        _emit(args, json.dumps(doc, indent=2) + "\n")
    else:
        status = "PASS" if report.passed else "FAIL"
        lines = [f"{args.suite} up to n={args.n_max}: {status} ({report.checked} checked, "
                 f"{len(report.violations)} violations)"]
        lines += [json.dumps(v) for v in report.violations]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK if report.passed else EXIT_FAIL


COMMANDS = {"count": cmd_count, "enumerate": cmd_enumerate, "gen": cmd_gen, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except CapExceeded as exc:
        print(f"maxmatch: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, ParseError, FamilySpecError, TreeError) as exc:
        print(f"maxmatch: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
