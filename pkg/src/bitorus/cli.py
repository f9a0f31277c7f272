"""Command-line interface.

Exit codes: 0 success, 1 usage or domain error, 2 internal
inconsistency (two routes that must agree disagreed).
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import diag_distribution, exceptional_pairs
from .counting import diag_count_reduction, diag_count_string, diag_count_tree
from .diagonals import diag_count_naive
from .errors import CapExceededError, InconsistencyError
from .hamiltonicity import hamiltonian_witness, is_hamiltonian_brute, is_hamiltonian_fast
from .verify import run_verify


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _positive(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return number


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bitorus", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_diag = sub.add_parser("diag", help="number of diagonals of the (n, m) grid")
    p_diag.add_argument("n", type=_positive)
    p_diag.add_argument("m", type=_positive)
    p_diag.add_argument(
        "--method",
        choices=("auto", "naive", "string", "reduction", "tree"),
        default="auto",
    )

    p_ham = sub.add_parser("ham", help="is the (n, m) grid Hamiltonian?")
    p_ham.add_argument("n", type=_positive)
    p_ham.add_argument("m", type=_positive)
    p_ham.add_argument("--method", choices=("auto", "brute", "link"), default="auto")
    p_ham.add_argument(
        "--witness",
        action="store_true",
        help="print an orientation string and cycle when Hamiltonian",
    )

    p_table = sub.add_parser(
        "table", help="coprime pairs with several diagonals but no Hamiltonian cycle"
    )
    p_table.add_argument("--max", type=_positive, required=True, dest="max_m")
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")

    p_census = sub.add_parser("census", help="diagonal-count distribution over coprime pairs")
    p_census.add_argument("--max", type=_positive, required=True, dest="max_h")
    p_census.add_argument("--format", choices=("csv", "json"), default="csv")

    p_verify = sub.add_parser("verify", help="run the internal cross-check suites")
    p_verify.add_argument("--max", type=_positive, default=10, dest="max_k")

    return parser


_DIAG_METHODS = {
    "auto": diag_count_tree,
    "naive": diag_count_naive,
    "string": diag_count_string,
    "reduction": diag_count_reduction,
    "tree": diag_count_tree,
}


def _cmd_diag(args) -> int:
    print(_DIAG_METHODS[args.method](args.n, args.m))
    return 0


def _cmd_ham(args) -> int:
    if args.n == 1 or args.m == 1:
        print(
            f"note: size-1 grids are outside the construction's stated domain; "
            f"({args.n},{args.m}) reported anyway",
            file=sys.stderr,
        )
    witness = None
    if args.method == "brute":
        verdict, witness = is_hamiltonian_brute(args.n, args.m)
    else:
        verdict = is_hamiltonian_fast(args.n, args.m)
    print("true" if verdict else "false")
    if args.witness and verdict:
        if witness is None:
            witness = hamiltonian_witness(args.n, args.m)
        print(witness.orientation)
        for row, col in witness.cycle:
            print(f"{row},{col}")
    return 0


def _cmd_table(args) -> int:
    records = exceptional_pairs(args.max_m)
    if args.format == "csv":
        print("n,m,diag,hamiltonian")
        for rec in records:
            print(f"{rec.n},{rec.m},{rec.diag},{'true' if rec.hamiltonian else 'false'}")
    else:
        for rec in records:
            print(
                json.dumps(
                    {
                        "n": rec.n,
                        "m": rec.m,
                        "diag": rec.diag,
                        "hamiltonian": rec.hamiltonian,
                        "method": rec.method,
                    }
                )
            )
    return 0


def _cmd_census(args) -> int:
    report = diag_distribution(args.max_h)
    if args.format == "csv":
        print("h,pairs,count1,count2,count3,p1,p2,p3")
        print(
            f"{report.h},{report.pairs},{report.count1},{report.count2},{report.count3},"
            f"{float(report.p1):.6f},{float(report.p2):.6f},{float(report.p3):.6f}"
        )
    else:
        print(
            json.dumps(
                {
                    "h": report.h,
                    "pairs": report.pairs,
                    "count1": report.count1,
                    "count2": report.count2,
                    "count3": report.count3,
                    "p1": float(report.p1),
                    "p2": float(report.p2),
                    "p3": float(report.p3),
                }
            )
        )
    return 0


def _cmd_verify(args) -> int:
    results = run_verify(args.max_k)
    failed = False
    for res in results:
        mark = "ok" if res.ok else "FAIL"
        print(f"{mark} {res.name} ({res.detail})")
        failed = failed or not res.ok
    if failed:
        print("internal inconsistency detected", file=sys.stderr)
        return 2
    return 0


_COMMANDS = {
    "diag": _cmd_diag,
    "ham": _cmd_ham,
    "table": _cmd_table,
    "census": _cmd_census,
    "verify": _cmd_verify,
}


def cli_main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
