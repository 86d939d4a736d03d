"""Command-line front end.

Exit codes: 0 success, 1 an identity check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .core import WeightVector, make_weight_vector
from .counting import (
    applicable_identities,
    build_count_table,
    check_identity,
    count_all,
    count_compositions,
)
from .enumeration import enumerate_compositions
from .polyco import weighted_polynomial_coefficient


def weights_arg(text: str) -> WeightVector:
    tokens = text.split(",")
    try:
        raw = [int(t.strip()) for t in tokens]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated integers: {text!r}")
    try:
        return make_weight_vector(raw)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _int_at_least(lo: int):
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v

    parse.__name__ = f"int>={lo}"
    return parse


nonneg = _int_at_least(0)
positive = _int_at_least(1)


def _emit(out, line: str) -> None:
    out.write(line + "\n")


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def cmd_count(args, out) -> int:
    _emit(out, str(count_compositions(args.weights, args.parts, args.total)))
    return 0


def cmd_total(args, out) -> int:
    _emit(out, str(count_all(args.weights, args.n)))
    return 0


def cmd_coeff(args, out) -> int:
    _emit(out, str(weighted_polynomial_coefficient(args.weights, args.k, args.i)))
    return 0


def cmd_table(args, out) -> int:
    b = args.weights
    table = build_count_table(b, args.n_max)
    if args.format == "csv":
        _emit(out, "k,n,count")
    for n in range(1, args.n_max + 1):
        for k in range(1, n + 1):
            c = table[k, n]
            if not c:
                continue
            if args.format == "csv":
                _emit(out, f"{k},{n},{c}")
            else:
                _emit(out, _dumps({"k": k, "n": n, "count": c}))
        f = count_all(b, n)
        if args.format == "csv":
            _emit(out, f"total,{n},{f}")
        else:
            _emit(out, _dumps({"n": n, "total": f}))
    return 0


def cmd_enumerate(args, out) -> int:
    stream = enumerate_compositions(args.weights, args.total, args.parts, args.limit)
    for index, comp in enumerate(stream):
        if args.format == "text":
            _emit(out, str(comp))
        else:
            parts = [{"value": p.value, "type": p.type_index} for p in comp.parts]
            _emit(out, _dumps({"index": index, "parts": parts}))
    return 0


def cmd_verify(args, out) -> int:
    b = args.weights
    r = args.r
    if b is not None and r is not None and b.r != r:
        raise argparse.ArgumentTypeError(f"--r {r} disagrees with {b.r} weights")
    names = applicable_identities(b, r)
    all_ok = True
    for name in names:
        rep = check_identity(name, b, r=r, n_max=args.n_max, k_max=args.k_max)
        all_ok = all_ok and rep.ok
        if args.format == "jsonl":
            _emit(out, _dumps(rep.as_record()))
        else:
            _emit(out, rep.summary())
            for params, left, right in rep.failures[:10]:
                _emit(out, f"  mismatch at {params}: {left} != {right}")
    if args.format == "text":
        _emit(out, "all identities hold" if all_ok else "SOME IDENTITIES FAILED")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gencomp",
        description="Count and enumerate generalized compositions; check the identities between them.",
    )
    sub = parser.add_subparsers(dest="command", metavar="<command>", required=True)
    w_help = "type counts b_1,...,b_r, e.g. 2,1,3"

    p = sub.add_parser("count", help="compositions of a total into a fixed number of parts")
    p.add_argument("--weights", type=weights_arg, required=True, help=w_help)
    p.add_argument("--parts", type=nonneg, required=True, help="number of parts k")
    p.add_argument("--total", type=nonneg, required=True, help="total n")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("total", help="all compositions of n (weighted r-generalized Fibonacci number)")
    p.add_argument("--weights", type=weights_arg, required=True, help=w_help)
    p.add_argument("--n", type=nonneg, required=True)
    p.set_defaults(func=cmd_total)

    p = sub.add_parser("coeff", help="coefficient of x^i in (b_1 + b_2 x + ...)^k")
    p.add_argument("--weights", type=weights_arg, required=True, help=w_help)
    p.add_argument("--k", type=positive, required=True)
    p.add_argument("--i", type=int, required=True)
    p.set_defaults(func=cmd_coeff)

    p = sub.add_parser("table", help="nonzero counts for 1 <= k <= n <= n-max, with totals")
    p.add_argument("--weights", type=weights_arg, required=True, help=w_help)
    p.add_argument("--n-max", type=positive, required=True)
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="list compositions as value.type terms joined by +")
    p.add_argument("--weights", type=weights_arg, required=True, help=w_help)
    p.add_argument("--total", type=positive, required=True)
    p.add_argument("--parts", type=positive, default=None)
    p.add_argument("--limit", type=positive, default=None)
    p.add_argument("--format", choices=["text", "jsonl"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check every applicable identity on a bounded grid")
    p.add_argument("--weights", type=weights_arg, default=None, help=w_help)
    p.add_argument("--r", type=positive, default=None, help="use all-ones weights of this length")
    p.add_argument("--n-max", type=positive, default=20)
    p.add_argument("--k-max", type=positive, default=8)
    p.add_argument("--format", choices=["text", "jsonl"], default="text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.weights is None and args.r is None:
        parser.error("verify needs --weights or --r")
    try:
        return args.func(args, out)
    except argparse.ArgumentTypeError as e:
        parser.error(str(e))


if __name__ == "__main__":
    sys.exit(main())
