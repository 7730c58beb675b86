"""
burstcodes is a CLI tool installed with the package to construct,
verify, extend and exercise optimal burst-erasure codes.

Matrices, codewords and JSON go to stdout; errors and progress go to stderr.
"""

import json
import sys
from argparse import ArgumentParser
from typing import *

from frozendict import frozendict

from .base.limits import LIMITS
from .base.printutils import GREEN, RED, YELLOW, colorize, status
from .codec.codec import decode, encode
from .codec.data_classes.burst import ReceivedWord
from .construct.data_classes.code import Code
from .construct.extenders import (
    dual_generator,
    extend_fixed_dimension,
    extend_fixed_redundancy,
)
from .construct.extension import extension_columns, unique_binary_extension
from .goodness.checks import is_good, is_prefix_good
from .harness.data_classes.channel import ChannelModel
from .harness.matrix_io import format_matrix, parse_matrix
from .harness.simulate import run_simulation
from .harness.sweep import BUILDERS, sweep_constructions
from .help import schema_query
from .linalg.matrix import Matrix
from .exceptions.Exceptions import (
    BurstCodesError,
    ChannelError,
    InputError,
    MatrixFormatError,
)

EXIT_CODES = frozendict({"success": 0, "domain": 1, "input": 2})

INPUT_ERRORS = (MatrixFormatError, InputError, ChannelError)


def _read_input(path: str) -> Matrix:
    if path == "-":
        return parse_matrix(sys.stdin.read())
    try:
        with open(path, "r", encoding="ascii", newline="") as f:
            text = f.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}")
    except UnicodeDecodeError:
        raise InputError(f"{path} is not an ASCII matrix file")
    return parse_matrix(text)


def _emit_matrix(M: Matrix, out: str = None) -> None:
    text = format_matrix(M)
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="ascii", newline="") as f:
            f.write(text)
    except OSError as e:
        raise InputError(f"cannot write {out}: {e.strerror}")
    status(f"Wrote {M.rows}x{M.cols} matrix to {out}.")


def _parse_csv_ints(text: str, p: int, what: str) -> List[int]:
    values = []
    for q, token in enumerate(text.strip().split(","), start=1):
        token = token.strip()
        if not token.isdigit():
            raise InputError(f"{what} symbol {q}: {token!r} is not a non-negative integer.")
        value = int(token)
        if value >= p:
            raise InputError(f"{what} symbol {q}: {value} is outside [0, {p - 1}].")
        values.append(value)
    return values


def _csv(symbols: Iterable) -> str:
    return ",".join(str(int(s)) for s in symbols)


def _column_csv(x: Matrix) -> str:
    return _csv(v for row in x.to_list() for v in row)


def cmd_construct(args) -> int:
    code = BUILDERS[args.method](args.p, args.k, args.n)
    _emit_matrix(code.G, args.out)
    return EXIT_CODES["success"]


def cmd_verify(args) -> int:
    G = _read_input(args.input)
    ok, reports = is_good(G, report=True)
    failing = [r for r in reports if not r.ok]
    prefix_ok = is_prefix_good(G) if args.prefix else None
    passed = ok and (prefix_ok is None or prefix_ok)

    if args.report == "json":
        data = {
            "schema": LIMITS["json_schema_version"],
            "p": G.p,
            "k": G.rows,
            "n": G.cols,
            "good": ok,
            "failing_windows": [r.window_start for r in failing],
            "windows": reports.to_dicts(),
        }
        if prefix_ok is not None:
            data["prefix_good"] = prefix_ok
        print(json.dumps(data, sort_keys=True))
        return EXIT_CODES["success"] if passed else EXIT_CODES["domain"]

    if ok:
        print(colorize(f"good: all {len(reports)} windows have rank {G.rows}", GREEN))
    else:
        print(colorize(f"not good: {len(failing)} of {len(reports)} windows are singular", RED))
        for r in failing:
            print(f"  {r}")
    if prefix_ok is not None:
        if prefix_ok:
            print(colorize("prefix-good: every prefix of at least k columns is good", GREEN))
        else:
            print(colorize("not prefix-good", RED))
    return EXIT_CODES["success"] if passed else EXIT_CODES["domain"]


def cmd_extend(args) -> int:
    G = _read_input(args.input)
    if args.mode == "dimension":
        _emit_matrix(extend_fixed_dimension(G), args.out)
    elif args.mode == "redundancy":
        _emit_matrix(extend_fixed_redundancy(G), args.out)
    elif args.all:
        for x in extension_columns(G, enumerate_limit=args.limit):
            print(_column_csv(x))
    else:
        print(_column_csv(unique_binary_extension(G)))
    return EXIT_CODES["success"]


def cmd_dual(args) -> int:
    _emit_matrix(dual_generator(_read_input(args.input)), args.out)
    return EXIT_CODES["success"]


def cmd_encode(args) -> int:
    code = Code.manual(_read_input(args.input))
    message = _parse_csv_ints(args.message, code.p, "Message")
    print(_csv(encode(code, message)))
    return EXIT_CODES["success"]


def cmd_decode(args) -> int:
    code = Code.manual(_read_input(args.input))
    received = ReceivedWord.from_csv(args.received, code.field)
    codeword, message = decode(code, received)
    print(_csv(codeword))
    status(f"message: {_csv(message)}", args.verbose)
    return EXIT_CODES["success"]


def cmd_simulate(args) -> int:
    code = Code.manual(_read_input(args.input))
    channel = ChannelModel.from_spec(args.channel, seed=args.seed)
    report = run_simulation(
        code, channel, args.trials, threads=args.threads, verbose=args.verbose
    )
    if args.json:
        print(report.to_json(include_timing=args.timing))
    else:
        color = GREEN if report.failures == 0 else YELLOW
        print(colorize(str(report), color))
        if args.timing:
            print(f"wall time: {report.wall_time:.3f}s")
    return EXIT_CODES["success"]


def cmd_enumerate_extensions(args) -> int:
    G = _read_input(args.input)
    for x in extension_columns(G, enumerate_limit=args.limit):
        print(_column_csv(x))
    return EXIT_CODES["success"]


def cmd_sweep(args) -> int:
    df = sweep_constructions(
        args.p, args.max_n, method=args.method, prefix=args.prefix, verbose=args.verbose
    )
    if args.csv:
        df.to_csv(args.csv, index=False)
        status(f"Wrote {len(df)} rows to {args.csv}.")
    failed = 0
    for p, group in df.groupby("p", sort=True):
        bad = int((~group["good"]).sum())
        if args.prefix:
            bad += int((group["good"] & ~group["prefix_good"].astype(bool)).sum())
        failed += bad
        color = GREEN if bad == 0 else RED
        print(colorize(f"p={p}: {len(group)} codes, {bad} failure(s)", color))
    return EXIT_CODES["success"] if failed == 0 else EXIT_CODES["domain"]


def cmd_schema(args) -> int:
    if args.pretty:
        print(schema_query(args.construction, pretty=True))
    else:
        print(json.dumps(schema_query(args.construction), sort_keys=True))
    return EXIT_CODES["success"]


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="burstcodes",
        description="Construct, verify and exercise optimal burst-erasure codes over Z_p",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="Build a good systematic generator matrix")
    p.add_argument("--p", type=int, required=True, help="Field size (a prime)")
    p.add_argument("--k", type=int, required=True, help="Code dimension")
    p.add_argument("--n", type=int, required=True, help="Code length")
    p.add_argument(
        "--method",
        choices=list(BUILDERS.keys()),
        default="recursive",
        help="Which construction to use",
    )
    p.add_argument("--out", help="Write the matrix here instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="Check every cyclic window of a matrix")
    p.add_argument("--in", dest="input", required=True, help="Matrix file, or - for stdin")
    p.add_argument("--prefix", action="store_true", help="Also check prefix-goodness")
    p.add_argument("--report", choices=["json", "text"], default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("extend", help="Extend a good systematic matrix")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument(
        "--mode", choices=["dimension", "redundancy", "column"], default="dimension"
    )
    p.add_argument(
        "--all", action="store_true", help="Column mode: list every extension column"
    )
    p.add_argument(
        "--limit",
        type=int,
        default=LIMITS["default_enumerate_limit"],
        help="Column mode with --all: refuse to list more than this many columns",
    )
    p.add_argument("--out", help="Write the matrix here instead of stdout")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("dual", help="Generator (-P^T I_r) of the dual code")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("encode", help="Encode a message")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--message", required=True, help="Comma-separated message symbols")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="Decode a word with one burst of erasures")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument(
        "--received", required=True, help='Comma-separated symbols, "?" for an erasure'
    )
    p.add_argument("--verbose", action="store_true", help="Print the message to stderr")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="Run the burst-erasure channel simulator")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument(
        "--channel",
        required=True,
        help="fixed:START:LENGTH, uniform:LENGTH or random:MAX",
    )
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", action="store_true", help="Print the report as JSON")
    p.add_argument("--threads", type=int, default=LIMITS["default_threads"])
    p.add_argument(
        "--timing", action="store_true", help="Include wall time in the report"
    )
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser(
        "enumerate-extensions", help="List every column that keeps a matrix good"
    )
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--limit", type=int, required=True)
    p.set_defaults(func=cmd_enumerate_extensions)

    p = sub.add_parser("sweep", help="Build and check every code up to a length")
    p.add_argument(
        "--p", type=int, action="append", required=True, help="Field size; repeatable"
    )
    p.add_argument("--max-n", dest="max_n", type=int, required=True)
    p.add_argument("--method", choices=list(BUILDERS.keys()), default="recursive")
    p.add_argument("--prefix", action="store_true")
    p.add_argument("--csv", help="Also write the full table as CSV")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("schema", help="Describe the available constructions")
    p.add_argument("construction", nargs="?", default=None)
    p.add_argument("--pretty", action="store_true")
    p.set_defaults(func=cmd_schema)

    return parser


def main(argv: Sequence[str] = None) -> int:
    """
    Entry point for the burstcodes CLI tool.

    Returns:
        int: 0 on success, 1 on a domain error or failed check, 2 on malformed input.
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_CODES["input"]

    try:
        return args.func(args)
    except INPUT_ERRORS as e:
        print(colorize(f"error: {e.message}", RED, sys.stderr), file=sys.stderr)
        return EXIT_CODES["input"]
    except BurstCodesError as e:
        print(colorize(f"error: {e.message}", RED, sys.stderr), file=sys.stderr)
        return EXIT_CODES["domain"]
    except ValueError as e:
        print(colorize(f"error: {e}", RED, sys.stderr), file=sys.stderr)
        return EXIT_CODES["input"]


if __name__ == "__main__":
    sys.exit(main())
