"""Command line interface: ``tangled {count,table,enumerate,map,verify}``.

Exit status is 0 on success, 1 when a verification check fails, and 2 for
usage errors or invalid input.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from tangled.bijection import ALL_MOVES, Move, VacillatingTableau, beta, beta_inv, check_vt
from tangled.enumeration import (
    DEFAULT_DIAGRAM_BOUND,
    count_all,
    count_brute,
    count_by_vt,
    count_no_isolated,
    gen_tangled,
    sequence_table,
)
from tangled.tangle import TangledDiagram, check, classify, crossing_number
from tangled.verify import SUITES, run_suite

MAX_FORMULA_N = 40
MAX_VT_DP_N = 30
MAX_K = 12


class UsageError(Exception):
    pass


def canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _check_k(k: int):
    if k < 2:
        raise UsageError(f"--k must be at least 2, got {k}")
    if k > MAX_K:
        raise UsageError(f"--k is capped at {MAX_K} for exact DP counting, got {k}")


def _check_n(n: int, cap: int, what: str):
    if n < 0:
        raise UsageError(f"--n must be nonnegative, got {n}")
    if n > cap:
        raise UsageError(f"{what} is limited to n <= {cap}, got n={n}")


def count_value(k: int, n: int, method: str, no_isolated: bool, max_brute_n: int) -> int:
    _check_k(k)
    if method == "formula":
        _check_n(n, MAX_FORMULA_N, "--method formula")
        return count_no_isolated(k, n) if no_isolated else count_all(k, n)
    if method == "vt-dp":
        _check_n(n, MAX_VT_DP_N, "--method vt-dp")
        # an isolated vertex is exactly a do-nothing-twice move
        moves = ALL_MOVES - {Move.NN} if no_isolated else ALL_MOVES
        return count_by_vt(k, n, moves)
    _check_n(n, max_brute_n, "--method brute (raise with --max-brute-n)")
    return count_brute(k, n, no_isolated=no_isolated, bound=max_brute_n)


def cmd_count(args) -> int:
    print(count_value(args.k, args.n, args.method, args.no_isolated, args.max_brute_n))
    return 0


def cmd_table(args) -> int:
    _check_k(args.k)
    _check_n(args.max_n, MAX_FORMULA_N, "table")
    table = sequence_table(args.k, args.max_n, no_isolated=args.no_isolated)
    sys.stdout.write(table.to_csv() if args.format == "csv" else table.to_json())
    return 0


def cmd_enumerate(args) -> int:
    _check_n(args.n, args.max_brute_n, "enumerate (raise with --max-brute-n)")
    if args.k is not None and args.k < 1:
        raise UsageError(f"--k must be positive, got {args.k}")
    for d in gen_tangled(args.n, bound=args.max_brute_n):
        if args.cls != "all" and not getattr(classify(d), args.cls):
            continue
        if args.k is not None and crossing_number(d) >= args.k:
            continue
        print(canonical(d.to_json()))
    return 0


def cmd_map(args) -> int:
    text = sys.stdin.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"stdin is not valid JSON: {exc}") from None
    if args.direction == "to-tableau":
        d = check(TangledDiagram.from_json(obj))
        out = beta_inv(d).to_json()
    else:
        v = check_vt(VacillatingTableau.from_json(obj))
        out = beta(v).to_json()
    print(canonical(out))
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.n)
    failed = 0
    for c in checks:
        print(c.line())
        if not c.ok:
            failed += 1
            if c.counterexample is not None:
                print("  counterexample: " + canonical(c.counterexample))
    print(f"{args.suite}: {len(checks) - failed}/{len(checks)} passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tangled", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", help="count k-noncrossing tangled diagrams on [n]")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--no-isolated", action="store_true")
    p.add_argument("--method", choices=("formula", "vt-dp", "brute"), default="formula")
    p.add_argument("--max-brute-n", type=int, default=DEFAULT_DIAGRAM_BOUND)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="print the sequence D_{2,k}(1..max-n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--no-isolated", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="list tangled diagrams as JSON lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--class", dest="cls", choices=("all", "matching", "partition", "braid"),
                   default="all")
    p.add_argument("--format", choices=("json-lines",), default="json-lines")
    p.add_argument("--max-brute-n", type=int, default=DEFAULT_DIAGRAM_BOUND)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="apply the bijection to a JSON object on stdin")
    p.add_argument("--direction", choices=("to-tableau", "to-diagram"), required=True)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"tangled {args.verb}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
