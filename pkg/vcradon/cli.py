r"""
Command-line interface.

Exit codes: 0 on success, 1 when a bound check fails or an example line does not match,
2 on usage or input errors, 3 when a resource limit stops the work before it is complete.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Callable, Dict, Sequence

from vcradon.classes import read_class, write_class
from vcradon.cubes import enumerate_cubes, export_complex
from vcradon.errors import GenericityError
from vcradon.gen import (
    gen_arrangement_class,
    gen_ball,
    gen_cube,
    gen_dented_cube,
    gen_random_generic_arrangement,
    gen_shattered_points_arrangement,
    gen_simplex_arrangement,
    gen_singletons,
    gen_tight_d1,
    read_arrangement,
    write_arrangement,
)
from vcradon.harness import (
    FILTERS,
    GOALS,
    Scan,
    check_bounds,
    format_items,
    search_many,
    verify_examples,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

# family -> number of integer parameters
FAMILIES: Dict[str, int] = {
    "cube": 1,
    "dented-cube": 1,
    "singletons": 1,
    "ball": 2,
    "example-d1": 0,
    "arrangement": 2,
    "simplex-arrangement": 1,
    "shattered-points": 1,
}
ARRANGEMENT_FAMILIES = ("arrangement", "simplex-arrangement", "shattered-points")


def _int_at_least(lo: int) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
        if value < lo:
            raise argparse.ArgumentTypeError(f"expected an integer >= {lo}, got {value}")
        return value

    return parse


positive = _int_at_least(1)
nonnegative = _int_at_least(0)


def default_workers() -> int:
    env = os.environ.get("VCRADON_WORKERS")
    if env:
        try:
            return positive(env)
        except argparse.ArgumentTypeError as e:
            raise ValueError(f"VCRADON_WORKERS: {e}")
    return os.cpu_count() or 1


def _emit(text: str):
    sys.stdout.write(text)
    sys.stdout.flush()


def _emit_record(record: dict):
    _emit(json.dumps(record, sort_keys=True) + "\n")


def _source_of(path: str) -> str:
    return "<stdin>" if path == "-" else path


def cmd_analyze(args) -> int:
    C = read_class(args.file)
    report = check_bounds(C, source=_source_of(args.file), radon_limit=args.radon_limit)
    if args.records:
        _emit_record(report.to_record())
    else:
        _emit(report.format_table())
    return EXIT_REFUTED if report.refutations else EXIT_OK


def _family_class(args) -> tuple:
    r"""
    The class of the requested family, its description and the arrangement behind it (or None).
    """
    family, params = args.family, args.params
    if family == "arrangement" and args.arrangement_in is not None:
        if params:
            raise ValueError("generate arrangement takes either D N or --arrangement-in, not both.")
        A = read_arrangement(args.arrangement_in)
        return gen_arrangement_class(A), f"arrangement {_source_of(args.arrangement_in)}", A
    if args.arrangement_in is not None:
        raise ValueError("--arrangement-in only applies to the arrangement family.")
    if len(params) != FAMILIES[family]:
        raise ValueError(f"{family} takes {FAMILIES[family]} integer parameter(s), got {len(params)}.")
    for p in params:
        if p < 1:
            raise ValueError(f"{family} parameters should be positive, got {p}.")
    described = " ".join([family] + [str(p) for p in params])
    if family == "cube":
        return gen_cube(*params), described, None
    if family == "dented-cube":
        return gen_dented_cube(*params), described, None
    if family == "singletons":
        return gen_singletons(*params), described, None
    if family == "ball":
        return gen_ball(*params), described, None
    if family == "example-d1":
        return gen_tight_d1(), described, None
    if family == "arrangement":
        if args.seed is None:
            raise ValueError("generate arrangement needs --seed.")
        A = gen_random_generic_arrangement(params[0], params[1], args.seed)
        described += f" seed {args.seed}"
    elif family == "simplex-arrangement":
        A = gen_simplex_arrangement(params[0])
    else:
        seed = 0 if args.seed is None else args.seed
        A = gen_shattered_points_arrangement(params[0], seed=seed)
        described += f" seed {seed}"
    return gen_arrangement_class(A), described, A


def cmd_generate(args) -> int:
    if args.arrangement_out is not None and args.family not in ARRANGEMENT_FAMILIES:
        raise ValueError("--arrangement-out only applies to arrangement families.")
    C, described, A = _family_class(args)
    write_class(C, args.output, header=described)
    if args.arrangement_out is not None:
        write_arrangement(A, args.arrangement_out)
    logger.info("generated %s: %d concepts over [%d]", described, len(C), C.n)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.resume and args.checkpoint is None:
        raise ValueError("--resume needs --checkpoint.")
    if args.reports is None:
        return _run_scan(args, None)
    if args.reports == "-":
        return _run_scan(args, _emit_record)
    with open(args.reports, "w") as f:
        return _run_scan(args, lambda record: f.write(json.dumps(record, sort_keys=True) + "\n"))


def _run_scan(args, on_report) -> int:
    scan = Scan(
        n=args.n,
        filter=args.filter,
        sample=args.sample,
        seed=args.seed,
        workers=args.workers,
        chunk_size=args.chunk_size,
        checkpoint=args.checkpoint,
        limit=args.limit,
        radon_limit=args.radon_limit,
        max_size=args.max_size,
        on_report=on_report,
    )
    summary = scan.run(resume=args.resume)
    if args.records:
        _emit_record(dict(summary.to_dict(), n=args.n, filter=args.filter))
    else:
        _emit(summary.format_table())
    if summary.refutations:
        return EXIT_REFUTED
    return EXIT_OK if summary.complete else EXIT_LIMIT


def cmd_search(args) -> int:
    seeds = list(range(args.seed, args.seed + args.restarts))
    states = search_many(
        args.goal, args.d, seeds, args.budget, n=args.n, max_size=args.max_size, workers=args.workers
    )
    for state in states:
        if args.records:
            _emit_record(state.to_record())
        else:
            _emit(
                f"seed {state.seed}  best {state.goal} - 2 vc = {state.best_objective}  "
                f"size {len(state.best)}  {' '.join(state.best.to_strings())}\n"
            )
    return EXIT_REFUTED if any(s.refuted for s in states) else EXIT_OK


def cmd_verify(args) -> int:
    if args.records:
        items = verify_examples(
            progress=lambda i: _emit_record(
                {"name": i.name, "expected": repr(i.expected), "observed": repr(i.observed), "passed": i.passed}
            )
        )
    else:
        items = verify_examples()
        _emit(format_items(items))
    return EXIT_OK if all(i.passed for i in items) else EXIT_REFUTED


def cmd_complex(args) -> int:
    C = read_class(args.file)
    Q = enumerate_cubes(C)
    if args.records:
        _emit_record(
            {
                "n": C.n,
                "dim": Q.dim,
                "f_vector": list(Q.f_vector()),
                "cubes": [c.describe() for c in Q],
                "maximal": [c.describe() for c in Q.maximal],
            }
        )
    elif args.output == "-":
        export_complex(Q, sys.stdout)
    else:
        export_complex(Q, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log warnings and errors only")
    common.add_argument("--records", action="store_true", help="print JSON records instead of tables")

    parser = argparse.ArgumentParser(
        prog="vcradon",
        description="VC dimension, dual VC dimension and Radon numbers of finite concept classes.",
    )
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("analyze", parents=[common], help="metrics and bound checks of a class file")
    p.add_argument("file", help="class file, '-' for standard input")
    p.add_argument("--radon-limit", type=positive, default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", parents=[common], help="write a class of a named family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int, help="integer parameters of the family")
    p.add_argument("--seed", type=nonnegative, default=None, help="seed of random arrangements")
    p.add_argument("-o", "--output", default="-", help="class file to write, '-' for standard output")
    p.add_argument("--arrangement-in", default=None, help="arrangement file to take the cells of")
    p.add_argument("--arrangement-out", default=None, help="also write the arrangement to this file")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("enumerate", parents=[common], help="scan all (or sampled) classes over [n]")
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--filter", choices=FILTERS, default="all")
    p.add_argument("--sample", type=positive, default=None, help="number of sampled classes")
    p.add_argument("--seed", type=nonnegative, default=None)
    p.add_argument("--max-size", type=positive, default=None, help="largest sampled class")
    p.add_argument("--checkpoint", default=None, help="JSON progress file")
    p.add_argument("--resume", action="store_true")
    p.add_argument("--limit", type=positive, default=None, help="stop after this many classes")
    p.add_argument("--chunk-size", type=positive, default=None)
    p.add_argument("--radon-limit", type=positive, default=None)
    p.add_argument("--reports", default=None, help="JSON lines file of per-class reports, '-' for standard output")
    p.add_argument("--workers", type=positive, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("search", parents=[common], help="simulated annealing over extremal classes")
    p.add_argument("--goal", choices=GOALS, required=True)
    p.add_argument("--d", type=positive, required=True)
    p.add_argument("--seed", type=nonnegative, required=True)
    p.add_argument("--budget", type=nonnegative, default=1000)
    p.add_argument("--restarts", type=positive, default=1)
    p.add_argument("--n", type=positive, default=None)
    p.add_argument("--max-size", type=positive, default=None)
    p.add_argument("--workers", type=positive, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser(
        "verify-paper", aliases=["verify-examples"], parents=[common], help="reproduce the reference examples"
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("complex", parents=[common], help="export the cube complex of a class file")
    p.add_argument("file", help="class file, '-' for standard input")
    p.add_argument("-o", "--output", default="-", help="file to write, '-' for standard output")
    p.set_defaults(func=cmd_complex)
    return parser


def _configure_logging(args):
    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.getLogger().setLevel(level)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    _configure_logging(args)
    try:
        if getattr(args, "workers", 0) is None:
            args.workers = default_workers()
        return args.func(args)
    except GenericityError as e:
        logger.error("%s", e)
        return EXIT_LIMIT
    except (ValueError, OSError) as e:
        logger.error("%s", e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
