"""Command line interface: ``medians {generate,verify,dual,search,coverage}``

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 arithmetic overflow.
"""

import argparse
import json
import logging
import os
import sys

from . import search
from .__version__ import __version__
from .construction import Route, construct_grid
from .exceptions import MedianError, ParameterError, RecordParseError
from .records import (
    TriangleRecord,
    parse_sextuple,
    read_sextuples,
    write_records,
    write_reports,
)
from .triangle import MedianTriangle, dual, normalize, verify

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_OVERFLOW = 3

ROUTES = {route.value: route for route in Route}


def log_level():
    """``$LOGLEVEL`` if it names a logging level, else WARNING"""
    name = os.environ.get("LOGLEVEL", "WARNING").upper()
    if isinstance(logging.getLevelName(name), int):
        return name
    return "WARNING"


def configure_logging():
    # stdout carries the records, so logs go to stderr
    logging.basicConfig(stream=sys.stderr, level=log_level())


def positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be at least 1")
    return value


def int_range(text):
    """``N`` or ``A..B``, inclusive, both ends at least 1"""
    start, sep, stop = text.partition("..")
    first = positive_int(start)
    last = positive_int(stop) if sep else first
    if last < first:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(first, last + 1)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default="json",
                        help="output format (default: json lines)")
    common.add_argument("--trace", action="store_true",
                        help="include construction intermediates")
    common.add_argument("--primitive-only", action="store_true",
                        help="only emit Valid constructions")
    common.add_argument("--workers", type=positive_int, default=None,
                        help="worker processes (default: $MEDIANS_WORKERS or 1)")
    common.add_argument("-o", "--output", type=argparse.FileType("w"), default=None,
                        help="write to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="medians",
        description="Integer triangles whose medians are integers",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", parents=[common],
                                   help="construct triangles from (f, g)")
    generate.add_argument("--f", type=int_range, required=True, help="N or A..B")
    generate.add_argument("--g", type=int_range, required=True, help="N or A..B")
    generate.add_argument("--route", choices=sorted(ROUTES), default=Route.RATIONAL_PIPELINE.value)
    generate.set_defaults(handler=cmd_generate)

    for name, handler, help_text in (
        ("verify", cmd_verify, "check the median identities"),
        ("dual", cmd_dual, "the triangle whose half-sides are the medians"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("values", nargs="*", help="a b c x y z")
        sub.add_argument("-i", "--input", type=argparse.FileType("r"), default=None,
                         help="read sextuples or records from FILE ('-' for stdin)")
        sub.set_defaults(handler=handler)

    search_cmd = commands.add_parser("search", parents=[common],
                                     help="exhaustive search for primitive triangles")
    search_cmd.add_argument("--max-half-side", type=positive_int, required=True)
    search_cmd.set_defaults(handler=cmd_search)

    coverage = commands.add_parser("coverage", parents=[common],
                                   help="compare the (f, g) grid with the search")
    coverage.add_argument("--max-half-side", type=positive_int, required=True)
    coverage.add_argument("--f-max", type=positive_int, required=True)
    coverage.add_argument("--g-max", type=positive_int, required=True)
    coverage.add_argument("--route", choices=sorted(ROUTES), default=Route.RATIONAL_PIPELINE.value)
    coverage.set_defaults(handler=cmd_coverage)
    return parser


def _sextuples(args):
    if args.values:
        if args.input is not None:
            raise RecordParseError("give either inline values or --input, not both")
        return [(1, parse_sextuple(" ".join(args.values), 1))]
    source = args.input if args.input is not None else sys.stdin
    return list(read_sextuples(source))


def cmd_generate(args):
    workers = args.workers or search.default_workers()
    outcomes = construct_grid(args.f, args.g, ROUTES[args.route], workers=workers)
    records = [
        TriangleRecord.from_outcome(outcome, include_trace=args.trace)
        for _, outcome in outcomes
        if outcome.is_valid or not args.primitive_only
    ]
    logger.info("Generated %d records from %d pairs", len(records), len(outcomes))
    return EXIT_OK, write_records(records, args.format)


def cmd_verify(args):
    results = [(n, sextuple, verify(sextuple)) for n, sextuple in _sextuples(args)]
    failed = sum(1 for _, _, report in results if not report.ok)
    logger.info("Verified %d sextuples, %d failed", len(results), failed)
    return (EXIT_FAILED if failed else EXIT_OK), write_reports(results, args.format)


def cmd_dual(args):
    checked = [(n, sextuple, verify(sextuple)) for n, sextuple in _sextuples(args)]
    invalid = [entry for entry in checked if not entry[2].ok]
    if invalid:
        return EXIT_FAILED, write_reports(invalid, args.format)
    records = [
        TriangleRecord.from_triangle(normalize(dual(MedianTriangle(*sextuple))))
        for _, sextuple, _ in checked
    ]
    return EXIT_OK, write_records(records, args.format)


def cmd_search(args):
    triangles = search.enumerate(args.max_half_side, workers=args.workers)
    return EXIT_OK, write_records([TriangleRecord.from_triangle(t) for t in triangles], args.format)


def cmd_coverage(args):
    report = search.coverage(
        args.max_half_side, args.f_max, args.g_max, ROUTES[args.route], workers=args.workers
    )
    if args.format == "csv":
        records = []
        for triangle in report.oracle:
            pairs = report.provenance.get(triangle) or [(None, None)]
            records.extend(TriangleRecord.from_triangle(triangle, f=f, g=g) for f, g in pairs)
        return EXIT_OK, write_records(records, "csv")

    data = report.as_dict()
    pairs = {tuple(entry["sextuple"]): entry["pairs"] for entry in data["provenance"]}
    head = {"summary": data["summary"], "beyond_bound": data["beyond_bound"]}
    lines = [json.dumps(head, separators=(", ", ": "))]
    for triangle in report.oracle:
        entry = TriangleRecord.from_triangle(triangle).as_dict()
        entry["coverage"] = "hit" if triangle in report.provenance else "miss"
        entry["provenance"] = pairs.get(triangle.as_tuple(), [])
        lines.append(json.dumps(entry, separators=(", ", ": ")))
    return EXIT_OK, "\n".join(lines) + "\n"


def main(argv=None):
    configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, text = args.handler(args)
    except (RecordParseError, ParameterError) as e:
        print(f"medians {args.command}: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OverflowError as e:
        print(f"medians {args.command}: {e}", file=sys.stderr)
        return EXIT_OVERFLOW
    except MedianError as e:
        logger.error("%s failed: %s", args.command, e)
        return EXIT_FAILED
    output = args.output or sys.stdout
    output.write(text)
    output.flush()
    return status
