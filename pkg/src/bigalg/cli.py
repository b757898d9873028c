"""Command-line entry point: generator dumps, identity checks and presentations.

Exit codes: 0 pass, 1 verification failure, 2 usage error (including
refused sizes).  BIGALG_THREADS sets the worker count for verification grids.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import biggen, capelli, sympower, yangian
from .report import Report
from .weyl import verify_symdet_closed

# Hard size limits per command.  The direct checks grow like (k!)^2 per
# (I, J) pair or like the number of subset quadruples, so these bounds keep
# every command within a few seconds.
LIMITS = {
    "gens": {"n": 4, "r": 3},
    "commute": {"n": 3, "r": 2},
    "commute-cartan": {"n": 4, "r": 2},
    "capelli": {"n": 3, "r": 3},
    "cauchy-binet": {"n": 3, "r": 3},
    "charpoly": {"n": 4},
    "bethe": {"n": 3, "r": 2},
    "symdet": {"n": 3, "r": 2},
    "relations": {"n": 3, "m": 4},
    "sympow": {"n": 3, "m": 3},
}


class UsageError(Exception):
    pass


def _guard(name: str, **sizes) -> None:
    limits = LIMITS[name]
    for key, value in sizes.items():
        if value is None:
            continue
        if value < (0 if key in ("p", "q") else 1):
            raise UsageError(f"{name}: --{key} must be positive")
        if key in limits and value > limits[key]:
            raise UsageError(f"{name}: --{key} {value} exceeds the supported bound {limits[key]}")


def _emit_report(rep: Report, fmt: str) -> int:
    print(rep.to_json() if fmt == "json" else rep.to_text())
    return 0 if rep.ok else 1


def cmd_gens(args) -> int:
    _guard("gens", n=args.n, r=args.r)
    if args.p < 0 or args.q < 0 or args.p + args.q > args.n:
        raise UsageError("gens: need p, q >= 0 and p + q <= n")
    if args.which == "F":
        op = biggen.F_pq(args.n, args.r, args.p, args.q)
    else:
        op = biggen.M_pq_closed(args.n, args.r, args.p, args.q)
    if args.cartan:
        op = biggen.restrict_cartan(op)
    if args.format == "json":
        print(json.dumps({"which": args.which, "n": args.n, "r": args.r, "p": args.p,
                          "q": args.q, "cartan": args.cartan, "terms": op.to_json()}, indent=2))
    else:
        print(op.to_str())
    return 0


def _range_or(value, top):
    return [value] if value is not None else list(range(1, top + 1))


def cmd_check(args) -> int:
    kind = args.kind
    if kind == "commute":
        _guard("commute-cartan" if args.cartan else "commute", n=args.n, r=args.r)
        rep = biggen.verify_commutativity(args.n, args.r, cartan=args.cartan)
    elif kind == "capelli":
        _guard("capelli", n=args.n, r=args.r)
        rep = Report(f"capelli n={args.n} r={args.r}")
        if args.n == args.r:
            lhs, rhs = capelli.classical_capelli(args.n)
            rep.compare("classical", lhs, rhs)
        rep.merge(capelli.verify_capelli_generator_image(args.n, args.r))
        rep.merge(capelli.verify_ck_z_expansion(args.n, args.r))
    elif kind == "cauchy-binet":
        _guard("cauchy-binet", n=args.n, r=args.r, k=args.k)
        rep = Report(f"cauchy-binet n={args.n} r={args.r}")
        for k in _range_or(args.k, args.n):
            if k > args.n:
                raise UsageError("cauchy-binet: need k <= n")
            rep.merge(capelli.verify_cauchy_binet(args.n, args.r, k))
    elif kind == "charpoly":
        _guard("charpoly", n=args.n)
        rep = biggen.verify_charpoly(args.n)
    elif kind == "bethe":
        _guard("bethe", n=args.n, r=args.r, p=args.p)
        if args.p is not None and args.p > args.n:
            raise UsageError("bethe: need p <= n")
        rep = Report(f"bethe n={args.n} r={args.r}")
        for p in ([args.p] if args.p is not None else range(args.n + 1)):
            rep.merge(yangian.verify_bethe_bridge(args.n, args.r, p))
    elif kind == "symdet":
        _guard("symdet", n=args.n, r=args.r, k=args.k)
        rep = Report(f"symdet n={args.n} r={args.r}")
        for k in _range_or(args.k, args.n):
            if k > args.n:
                raise UsageError("symdet: need k <= n")
            rep.merge(verify_symdet_closed(args.n, k, args.r))
    elif kind == "relations":
        m = args.m if args.m is not None else 2
        _guard("relations", n=args.n, m=m)
        rep = sympower.relation_check_capelli_style(args.n, m)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown check {kind}")
    return _emit_report(rep, args.format)


def _present_guard(n: int, m: int) -> None:
    if n == 2:
        if not 1 <= m <= 8:
            raise UsageError("sympow: for n = 2 the supported range is 1 <= m <= 8")
        return
    _guard("sympow", n=n, m=m)


def cmd_sympow(args) -> int:
    sub = args.sub
    if sub == "present":
        _present_guard(args.n, args.m)
        if args.algebra == "sl" and args.n < 2:
            raise UsageError("sympow present: sl needs n >= 2")
        pres = sympower.present(args.n, args.m, args.basis, args.algebra,
                                eliminate=not args.no_eliminate, reduce=args.reduced)
        print(pres.to_json() if args.format == "json" else pres.to_text())
        return 0
    if sub == "check-relations":
        _present_guard(args.n, args.m)
        rep = sympower.relation_check_capelli_style(args.n, args.m)
        for basis in ("P", "M"):
            for algebra in ("gl", "sl") if args.n >= 2 else ("gl",):
                pres = sympower.present(args.n, args.m, basis, algebra)
                rep.merge(sympower.presentation_soundness(pres))
        return _emit_report(rep, args.format)
    if sub == "dhat":
        _guard("sympow", n=args.n, m=args.m)
        try:
            alphas = [int(a) for a in args.alphas.split(",") if a.strip()]
        except ValueError:
            raise UsageError("sympow dhat: --alphas must be a comma-separated list of integers")
        if len(alphas) > 2 or any(a < 0 for a in alphas):
            raise UsageError("sympow dhat: at most two non-negative alphas")
        return _emit_report(sympower.dhat_consistency(alphas, args.n, args.m), args.format)
    if sub == "upsilon-rank":
        _guard("sympow", n=args.n, m=args.m)
        return _emit_report(sympower.upsilon_injectivity_check(args.n, args.m), args.format)
    raise UsageError(f"unknown sympow command {sub}")  # pragma: no cover


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bigalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    g = sub.add_parser("gens", parents=[fmt], help="print a big-algebra generator")
    g.add_argument("--n", type=int, default=3)
    g.add_argument("--r", type=int, default=1)
    g.add_argument("--which", choices=("M", "F"), default="F")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--cartan", action="store_true", help="restrict to diagonal Y")
    g.set_defaults(func=cmd_gens)

    c = sub.add_parser("check", parents=[fmt], help="verify an identity")
    c.add_argument("kind", choices=("commute", "capelli", "cauchy-binet", "charpoly",
                                    "bethe", "symdet", "relations"))
    c.add_argument("--n", type=int, default=2)
    c.add_argument("--r", type=int, default=1)
    c.add_argument("--k", type=int)
    c.add_argument("--p", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--cartan", action="store_true")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("sympow", parents=[fmt], help="symmetric-power big algebras")
    s.add_argument("sub", choices=("present", "check-relations", "dhat", "upsilon-rank"))
    s.add_argument("--n", type=int, default=2)
    s.add_argument("--m", type=int, default=2)
    s.add_argument("--basis", choices=("P", "M"), default="P")
    s.add_argument("--algebra", choices=("gl", "sl"), default="gl")
    s.add_argument("--reduced", action="store_true",
                   help="reduce later relations by the leading term of the first")
    s.add_argument("--no-eliminate", action="store_true",
                   help="keep P_n..P_m as generators (P basis only)")
    s.add_argument("--alphas", default="1")
    s.set_defaults(func=cmd_sympow)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        try:
            biggen.worker_count()
        except ValueError as exc:
            raise UsageError(str(exc))
        return args.func(args)
    except UsageError as exc:
        print(f"bigalg: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
