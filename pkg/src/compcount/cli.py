"""Command-line front end.

Subcommands: count, weak, matrix, verify, table, bench. Standard output
carries only machine-parseable results (integers, grids, columnar or JSON
reports, CSV); diagnostics go to stderr. Exit codes: 0 success/agreement,
1 identity disagreement, 2 usage or parse error, 3 guard violation,
4 closed form unavailable for the alphabet.

Alphabet mini-grammar (--alphabet):
    all           every positive part value, one color each
    upto:K        values 1..K, one color each
    atleast:K     values K, K+1, ..., one color each
    V[xQ],...     explicit list, e.g. "1x2,3" = two colors of 1 plus one 3
"""

import argparse
import json
import sys
import time

from .alphabet import PartAlphabet
from .enumeration import count_compositions_brute, count_weak_brute
from .errors import (
    AlphabetParseError,
    DomainError,
    GuardExceeded,
    IndexOutOfRange,
    UnsupportedClosedForm,
)
from .hessenberg import build_matrix, charpoly, det_hessenberg, format_matrix, minor_sum_subsets
from .recurrence import count_compositions
from .verify import IDENTITY_NAMES, run_identity
from .weakforms import (
    count_weak_convolution,
    count_weak_minor_sum,
    count_weak_parts12_closed,
    count_weak_unrestricted_closed,
)

EXIT_OK = 0
EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_NO_CLOSED_FORM = 4


def parse_alphabet(text: str) -> PartAlphabet:
    """Parse the alphabet mini-grammar; errors name the offending token."""
    spec = text.strip()
    if spec == "all":
        return PartAlphabet.at_least(1)
    for prefix, builder in (("upto:", PartAlphabet.upto), ("atleast:", PartAlphabet.at_least)):
        if spec.startswith(prefix):
            tail = spec[len(prefix):]
            try:
                return builder(int(tail))
            except (ValueError, DomainError):
                raise AlphabetParseError(f"bad bound {tail!r} in alphabet spec {spec!r}") from None
    parts = []
    for token in spec.split(","):
        token = token.strip()
        value_text, _, mult_text = token.partition("x")
        try:
            value = int(value_text)
            mult = int(mult_text) if mult_text else 1
        except ValueError:
            raise AlphabetParseError(f"bad token {token!r} in alphabet spec {spec!r}") from None
        if value < 1 or mult < 1:
            raise AlphabetParseError(f"bad token {token!r} in alphabet spec {spec!r}")
        parts.append((value, mult))
    try:
        return PartAlphabet(parts=tuple(parts))
    except DomainError as exc:
        raise AlphabetParseError(f"invalid alphabet spec {spec!r}: {exc}") from None


def _alphabet_arg(parser):
    parser.add_argument(
        "--alphabet",
        default="all",
        help="part alphabet: all | upto:K | atleast:K | V[xQ],V[xQ],... (default: all)",
    )


def cmd_count(args) -> int:
    alphabet = parse_alphabet(args.alphabet)
    if args.method == "recurrence":
        value = count_compositions(args.n, alphabet)
    elif args.method == "det":
        value = 1 if args.n == 0 else det_hessenberg(build_matrix(alphabet, args.n))
    else:
        value = count_compositions_brute(args.n, alphabet)
    print(value)
    return EXIT_OK


def cmd_weak(args) -> int:
    alphabet = parse_alphabet(args.alphabet)
    if args.method == "conv":
        value = count_weak_convolution(args.n, args.k, alphabet)
    elif args.method == "minors":
        value = count_weak_minor_sum(args.n, args.k, alphabet)
    elif args.method == "brute":
        value = count_weak_brute(args.n, args.k, alphabet)
    else:
        if alphabet == PartAlphabet.at_least(1):
            value = count_weak_unrestricted_closed(args.n, args.k)
        elif alphabet == PartAlphabet.upto(2):
            value = count_weak_parts12_closed(args.n, args.k)
        else:
            raise UnsupportedClosedForm(
                f"no closed form for alphabet {alphabet}; supported: all, upto:2"
            )
    print(value)
    return EXIT_OK


def cmd_matrix(args) -> int:
    alphabet = parse_alphabet(args.alphabet)
    matrix = build_matrix(alphabet, args.n)
    if args.det:
        print(det_hessenberg(matrix))
    elif args.charpoly:
        print(charpoly(matrix))
    elif args.minorsum is not None:
        print(minor_sum_subsets(matrix, args.minorsum))
    else:
        print(format_matrix(matrix.to_dense()))
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = run_identity(args.identity, args.max_n, args.max_k)
    if args.json:
        print(json.dumps({"reports": [r.to_json_dict() for r in reports]}, indent=2))
    else:
        for report in reports:
            print(report.to_text())
    disagreements = sum(len(r.disagreements()) for r in reports)
    if disagreements:
        print(f"{disagreements} disagreeing grid point(s) found", file=sys.stderr)
        return EXIT_DISAGREEMENT
    return EXIT_OK


def cmd_table(args) -> int:
    alphabet = parse_alphabet(args.alphabet)
    rows = []
    for n in range(1, args.n_max + 1):
        if args.k is None:
            rows.append((n, count_compositions(n, alphabet)))
        else:
            rows.append((n, count_weak_convolution(n, args.k, alphabet)))
    if args.bfile:
        for n, value in rows:
            print(f"{n} {value}")
    elif args.k is None:
        print("n,count")
        for n, value in rows:
            print(f"{n},{value}")
    else:
        print("n,k,count")
        for n, value in rows:
            print(f"{n},{args.k},{value}")
    return EXIT_OK


def cmd_bench(args) -> int:
    alphabet = PartAlphabet.at_least(1)
    started = time.perf_counter()
    if args.suite == "recurrence":
        value = count_compositions(args.n, alphabet)
    elif args.suite == "det":
        value = det_hessenberg(build_matrix(alphabet, args.n))
    else:
        value = count_weak_convolution(args.n, 2, alphabet)
    elapsed = time.perf_counter() - started
    print(f"suite={args.suite} n={args.n} seconds={elapsed:.3f} digits={len(str(value))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compcount",
        description="Exact composition counting by cross-validated independent methods.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count compositions of n")
    p.add_argument("n", type=int)
    _alphabet_arg(p)
    p.add_argument("--method", choices=("recurrence", "det", "brute"), default="recurrence")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("weak", help="count weak compositions of n with exactly k zeros")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    _alphabet_arg(p)
    p.add_argument("--method", choices=("conv", "minors", "closed", "brute"), default="conv")
    p.set_defaults(func=cmd_weak)

    p = sub.add_parser("matrix", help="build the counting matrix and query it")
    p.add_argument("n", type=int)
    _alphabet_arg(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--print", action="store_true", dest="print_grid",
                       help="print the dense grid (default)")
    group.add_argument("--det", action="store_true", help="print the determinant")
    group.add_argument("--charpoly", action="store_true",
                       help="print characteristic polynomial coefficients, ascending")
    group.add_argument("--minorsum", type=int, metavar="R",
                       help="print the sum of all order-R principal minors")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", help="cross-check the counting identities on a grid")
    p.add_argument("--identity", choices=IDENTITY_NAMES + ("all",), default="all")
    p.add_argument("--max-n", type=int, default=8, dest="max_n")
    p.add_argument("--max-k", type=int, default=3, dest="max_k")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="print a count table as CSV (or an OEIS-style b-file)")
    _alphabet_arg(p)
    p.add_argument("--n-max", type=int, required=True, dest="n_max")
    p.add_argument("--k", type=int, default=None,
                   help="fix a zero count and tabulate weak compositions")
    p.add_argument("--bfile", action="store_true",
                   help="emit 'index value' lines, index starting at 1, no header")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bench", help="time one computation kernel")
    p.add_argument("--suite", choices=("recurrence", "det", "conv"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GuardExceeded as exc:
        print(f"compcount: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except UnsupportedClosedForm as exc:
        print(f"compcount: {exc}", file=sys.stderr)
        return EXIT_NO_CLOSED_FORM
    except (AlphabetParseError, DomainError, IndexOutOfRange) as exc:
        print(f"compcount: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())
