"""Command-line interface: eval, verify, sequence, table, paths.

Data goes to stdout; timings and progress go to stderr through loguru.
Exit codes: 0 success, 2 usage or domain error, 3 verification mismatch.
"""

import argparse
import csv
import json
import sys
from typing import Optional

from loguru import logger

from . import count
from .config import get_profile
from .detkernel import QueryParams, evaluate_D
from .errors import DomainError, SizeError
from .families import FAMILY_PARAMETERS, FamilySpec, get_family
from .latticepath import DEFAULT_CAP, count_paths_dp, enumerate_paths, l_query
from .methods import METHOD_NAMES
from .sweep import run_sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3


def _configure_logging(verbose: bool, quiet: bool):
    logger.remove()
    level = "DEBUG" if verbose else "WARNING" if quiet else "INFO"
    logger.add(sys.stderr, level=level)


def _write_json(payload):
    sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")


def cmd_eval(args: argparse.Namespace) -> int:
    """Evaluate one quadruple by the requested methods and compare them."""
    requested = args.method or ["det"]
    names = list(METHOD_NAMES) if "all" in requested else list(dict.fromkeys(requested))
    if "all" in requested and args.m + args.n > args.brute_cap:
        # an explicit --method brute still fails on the cap
        logger.info(f"Skipping brute: m+n={args.m + args.n} exceeds cap {args.brute_cap}")
        names.remove("brute")

    results = [count(args.m, args.n, args.u, args.k, method=name, brute_cap=args.brute_cap) for name in names]

    if args.format == "json":
        _write_json([result.to_dict() for result in results])
    else:
        for result in results:
            print(f"{result.method}: {result.value}")

    if len({result.value for result in results}) > 1:
        detail = ", ".join(f"{result.method}={result.value}" for result in results)
        logger.error(f"Methods disagree for {results[0].params}: {detail}")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Run the cross-validation sweep and report mismatches."""
    bounds = get_profile(args.profile, args.config).override(
        u_max=args.u_max,
        k_max=args.k_max,
        n_max=args.n_max,
        m_extra=args.m_extra,
        brute_cap=args.brute_cap,
        reflect_cap=args.reflect_cap,
    )
    report = run_sweep(bounds, workers=args.workers)

    if args.format == "json":
        _write_json(report.to_dict())
    else:
        print(f"instances_checked: {report.instances_checked}")
        print(f"reflection_instances: {report.reflection_instances}")
        print(f"checks_run: {report.checks_run}")
        print(f"mismatches: {len(report.mismatches)}")
        for mismatch in report.mismatches:
            print(f"  {mismatch}")

    if not report.ok:
        logger.error(f"First mismatch: {report.mismatches[0]}")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_sequence(args: argparse.Namespace) -> int:
    """Emit the first terms of a family, each confirmed by the determinant."""
    if args.count < 1:
        raise DomainError(f"count must be ≥ 1 (got {args.count})")

    family = get_family(FamilySpec(args.family, {"k": args.k, "m": args.m}))
    terms = []
    for n in range(1, args.count + 1):
        term = family.term(n)
        query = family.query(n)
        determinant_value = evaluate_D(query)
        if term != determinant_value:
            logger.error(f"{args.family}({n}) = {term} but D{query} = {determinant_value}")
            return EXIT_MISMATCH
        terms.append(term)
    logger.info(f"{len(terms)} terms of {args.family} confirmed against the determinant")

    if args.format == "json":
        _write_json([str(term) for term in terms])
    else:
        for term in terms:
            print(term)
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    """Emit |L(u+1,1;m,n;k)| for u+1 ≤ m ≤ m_max, 2 ≤ n ≤ n_max."""
    table = count_paths_dp(args.u, args.k, args.m_max, args.n_max)

    if args.format == "json":
        _write_json([{"m": m, "n": n, "count": str(value)} for m, n, value in table])
    else:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["m", "n", "count"])
        for m, n, value in table:
            writer.writerow([m, n, value])
    return EXIT_OK


def cmd_paths(args: argparse.Namespace) -> int:
    """List the admissible paths of one quadruple as step strings."""
    params = QueryParams(args.m, args.n, args.u, args.k)
    if params.m + params.n > args.brute_cap:
        raise SizeError(f"paths needs m+n ≤ {args.brute_cap} (got m+n={params.m + params.n})")

    paths = enumerate_paths(l_query(params), cap=args.brute_cap)
    for path in paths[: max(args.limit, 0)]:
        print(str(path))
    print(f"total {len(paths)}")
    return EXIT_OK


def _add_quadruple(parser: argparse.ArgumentParser):
    for name in ("m", "n", "u", "k"):
        parser.add_argument(f"--{name}", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballotdet",
        description="Evaluate and cross-validate D(m,n,u,k), the ballot/Fuss-Catalan determinant.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug diagnostics on stderr")
    parser.add_argument("-q", "--quiet", action="store_true", help="only warnings and errors on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    eval_parser = subparsers.add_parser("eval", help="evaluate one quadruple")
    _add_quadruple(eval_parser)
    eval_parser.add_argument(
        "--method",
        action="append",
        choices=[*METHOD_NAMES, "all"],
        help="counting method, repeatable (default: det)",
    )
    eval_parser.add_argument("--brute-cap", type=int, default=DEFAULT_CAP)
    eval_parser.add_argument("--format", choices=["text", "json"], default="text")
    eval_parser.set_defaults(handler=cmd_eval)

    verify_parser = subparsers.add_parser("verify", help="cross-validate every method over a parameter box")
    verify_parser.add_argument("--profile", default="default", help="named profile from the sweep file")
    verify_parser.add_argument("--config", default=None, help="path to a sweep profile YAML file")
    verify_parser.add_argument("--u-max", type=int)
    verify_parser.add_argument("--k-max", type=int)
    verify_parser.add_argument("--n-max", type=int)
    verify_parser.add_argument("--m-extra", type=int)
    verify_parser.add_argument("--brute-cap", type=int)
    verify_parser.add_argument("--reflect-cap", type=int)
    verify_parser.add_argument("--workers", type=int, default=1)
    verify_parser.add_argument("--format", choices=["json", "text"], default="json")
    verify_parser.set_defaults(handler=cmd_verify)

    sequence_parser = subparsers.add_parser("sequence", help="emit the first terms of a family")
    sequence_parser.add_argument(
        "--family",
        required=True,
        type=lambda name: name.replace("_", "-"),
        choices=sorted(FAMILY_PARAMETERS),
    )
    sequence_parser.add_argument("--count", type=int, required=True)
    sequence_parser.add_argument("--k", type=int)
    sequence_parser.add_argument("--m", type=int)
    sequence_parser.add_argument("--format", choices=["lines", "json"], default="lines")
    sequence_parser.set_defaults(handler=cmd_sequence)

    table_parser = subparsers.add_parser("table", help="emit the grid of path counts")
    table_parser.add_argument("--u", type=int, required=True)
    table_parser.add_argument("--k", type=int, required=True)
    table_parser.add_argument("--m-max", type=int, required=True)
    table_parser.add_argument("--n-max", type=int, required=True)
    table_parser.add_argument("--format", choices=["csv", "json"], default="csv")
    table_parser.set_defaults(handler=cmd_table)

    paths_parser = subparsers.add_parser("paths", help="list explicit paths")
    _add_quadruple(paths_parser)
    paths_parser.add_argument("--limit", type=int, default=20)
    paths_parser.add_argument("--brute-cap", type=int, default=DEFAULT_CAP)
    paths_parser.set_defaults(handler=cmd_paths)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose, args.quiet)

    try:
        return args.handler(args)
    except (DomainError, SizeError) as e:
        logger.error(str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
