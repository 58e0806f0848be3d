"""Command-line interface: ``semidirect construct|props|verify|random``.

Output is one JSON object per line (indented with ``--pretty``).  Exit codes:
0 success, 1 a verification check failed, 2 usage, parse, or bounds error.
"""

import argparse
import json
import sys

from .core import MAX_N
from .exceptions import GroundTooLarge, MatroidError
from .io import ParseError, evaluate, matroid_to_json

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SHOW = ("flats", "circuits", "cyclic-flats", "separators", "loops-coloops")


class UsageError(Exception):
    pass


def _emit(obj, pretty, out=None):
    out = out or sys.stdout
    out.write(json.dumps(obj, indent=2 if pretty else None) + "\n")
    out.flush()


def _load(path):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _family(M, masks):
    return sorted(list(M.ground.labels_of(X)) for X in masks)


def cmd_construct(args):
    M = evaluate(_load(args.expr))
    obj = matroid_to_json(M)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(obj, indent=2 if args.pretty else None) + "\n")
    else:
        _emit(obj, args.pretty)
    return EXIT_OK


def cmd_props(args):
    M = evaluate(_load(args.matroid))
    report = {"ground": list(M.labels), "rank": M.rank(), "show": args.show}
    if args.show == "flats":
        report["family"] = _family(M, M.flats())
    elif args.show == "circuits":
        report["family"] = _family(M, M.circuits())
    elif args.show == "cyclic-flats":
        report["family"] = _family(M, M.cyclic_flats())
    elif args.show == "separators":
        report["family"] = _family(M, M.separators())
    else:
        report["loops"] = list(M.ground.labels_of(M.loops()))
        report["coloops"] = list(M.ground.labels_of(M.coloops()))
    _emit(report, args.pretty)
    return EXIT_OK


def cmd_verify(args):
    from .verify import run_suite, suite_ids

    try:
        ids = suite_ids(args.suite)
    except KeyError as exc:
        raise UsageError(f"unknown check {args.suite!r}") from exc
    status = EXIT_OK
    for report in run_suite(ids, seed=args.seed, count=args.count, max_n=args.max_n, jobs=args.jobs):
        _emit(report.to_dict(), args.pretty)
        if not report.passed:
            status = EXIT_FAIL
    return status


def cmd_random(args):
    from .verify.generators import SOURCES, InstanceGen, labels

    if args.n > MAX_N:
        raise GroundTooLarge(f"{args.n} elements exceeds MAX_N={MAX_N}")
    if args.source is not None and args.source not in SOURCES:
        raise UsageError(f"unknown source {args.source!r}; choose from {', '.join(SOURCES)}")
    gen = InstanceGen(args.seed, max_n=max(args.n, 1))
    M = gen.matroid(labels("e", args.n), args.source)
    _emit(matroid_to_json(M), args.pretty)
    return EXIT_OK


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="semidirect", description=__doc__.splitlines()[0])
    parser.add_argument("--pretty", action="store_true", help="indent JSON output")
    # also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS, help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="evaluate a construction expression")
    p.add_argument("expr", help="construction JSON file, or - for stdin")
    p.add_argument("-o", "--out", help="write the rank table here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("props", parents=[common], help="print a structural family of a matroid")
    p.add_argument("matroid", help="matroid source or expression JSON file, or -")
    p.add_argument("--show", choices=SHOW, default="flats")
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("verify", parents=[common], help="run property checks")
    p.add_argument("--suite", default="all", help="'all' or one check id (check_ prefix optional)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=_nonnegative, default=None, help="instances per check")
    p.add_argument("--max-n", type=_nonnegative, default=None, help="size bound per side")
    p.add_argument("--jobs", type=_nonnegative, default=1, help="worker processes")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", parents=[common], help="emit one seeded random matroid")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=_nonnegative, default=4)
    p.add_argument("--source", default=None, help="uniform, transversal, matrix, minor or dual")
    p.set_defaults(func=cmd_random)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, MatroidError) as exc:
        kind = type(exc).__name__
        print(f"semidirect: {kind}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
