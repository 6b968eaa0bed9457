"""Command-line front end.

Boolean commands report through the exit status: 0 when the relation
holds (or the command succeeded), 1 when it does not, 2 on any error.
The first module argument always degenerates to the second.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import an, ar, cyclic, mf
from .expr import parse_module, parse_partition
from .partitions import dominance_hasse, dominates
from .hasse import HasseDiagram

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2


class CLIError(Exception):
    pass


def _pair(text: str, kind=int) -> tuple:
    try:
        return tuple(kind(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated values, got {text!r}")


def _ring(args) -> Optional[an.ANRing]:
    if not getattr(args, "an", None):
        return None
    if len(args.an) != 2:
        raise CLIError("--an expects n,d")
    n, d = args.an
    table = args.rank_table if getattr(args, "rank_table", None) else None
    return an.ANRing(n, d, table)


def _modulus(args) -> Optional[int]:
    return cyclic.parse_modulus(getattr(args, "modulus", None))


def _emit(payload: dict, ring: Optional[an.ANRing] = None) -> None:
    if ring is not None and ring.note():
        payload = dict(payload, note=ring.note())
    print(json.dumps(payload))


def cmd_dominates(args) -> int:
    p, q = parse_partition(args.p), parse_partition(args.q)
    ok = dominates(p, q)
    _emit({"p": p.to_json(), "q": q.to_json(), "dominates": ok})
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_degcheck(args) -> int:
    ring = _ring(args)
    if ring is not None:
        M, N = parse_module(args.M, an=ring), parse_module(args.N, an=ring)
        ok = an.deg_leq(M, N)
        _emit({"M": M.to_json(), "N": N.to_json(), "leq": ok}, ring)
    else:
        m = _modulus(args)
        M, N = parse_module(args.M, m), parse_module(args.N, m)
        ok = cyclic.deg_leq(M, N)
        _emit({"M": M.to_json(), "N": N.to_json(), "leq": ok})
    return EXIT_TRUE if ok else EXIT_FALSE


def cmd_fitting(args) -> int:
    M = parse_module(args.M, None)
    _emit({"M": M.to_json(), "exponents": cyclic.fitting_exponents(M)})
    return EXIT_TRUE


def cmd_hasse(args) -> int:
    ring = _ring(args)
    if ring is not None:
        if args.module:
            M = parse_module(args.module, an=ring)
            bound = args.max_mult if args.max_mult is not None else an.kappa(M).rank
            diagram = an.hasse_for_class(ring, an.kappa(M), bound)
        elif args.rank is not None:
            diagram = an.hasse_for_rank(ring, args.rank, args.max_mult)
        else:
            raise CLIError("hasse --an needs --rank or --module")
    elif args.weight is not None:
        m = _modulus(args)
        if m is None:
            diagram = dominance_hasse(args.weight)
        else:
            nodes = cyclic.modules_of_length(args.weight, m)
            diagram = HasseDiagram.from_order(nodes, cyclic.deg_leq, [str(M.parts) for M in nodes])
    else:
        raise CLIError("hasse needs --weight or --an")
    if args.format == "dot":
        sys.stdout.write(diagram.to_dot())
    else:
        _emit(diagram.to_json(), ring)
    return EXIT_TRUE


def cmd_ardecompose(args) -> int:
    m = _modulus(args)
    if m is None:
        raise CLIError("ardecompose needs a finite --modulus")
    L, M, N = (parse_module(t, m) for t in (args.L, args.M, args.N))
    coeffs = ar.decompose_ses(L, M, N)
    _emit({"coefficients": {str(a): c for a, c in sorted(coeffs.items())}})
    return EXIT_TRUE


def cmd_theorem44(args) -> int:
    C, k = args.bounds if args.bounds else (args.max_length, 3)
    report = ar.verify_theorem44(args.m, args.max_length, ar.Bounds(C, k))
    _emit(report.to_json())
    return EXIT_TRUE if report.equal else EXIT_FALSE


def _load_matrix(text: str):
    try:
        rows = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CLIError(f"matrix must be a JSON array of arrays of strings: {exc}")
    return mf.parse_matrix(rows)


def cmd_mfverify(args) -> int:
    report = mf.verify_mf(_load_matrix(args.phi), _load_matrix(args.psi), args.f)
    _emit({"ok": report.ok, "failure": report.failure})
    return EXIT_TRUE if report.ok else EXIT_FALSE


def cmd_knorrer(args) -> int:
    y, z = args.vars
    pair = mf.MFPair(_load_matrix(args.phi), _load_matrix(args.psi), args.f)
    if not pair.verify():
        raise CLIError(f"input is not a matrix factorization: {pair.verify().failure}")
    out = mf.knorrer_double(pair, y, z)
    _emit(dict(out.to_json(), ok=out.verify().ok))
    return EXIT_TRUE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degenlab",
        description="Degeneration, extension and AR orders of Cohen-Macaulay modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def ring_flags(p, modulus=True, an_ring=True):
        if modulus:
            p.add_argument("--modulus", default=None, help="m or inf (default inf)")
        if an_ring:
            p.add_argument("--an", type=_pair, default=None, metavar="N,D",
                           help="(A_n) singularity of even dimension d")
            p.add_argument("--rank-table", type=_pair, default=None, metavar="F,I1,...",
                           help="override ranks of F, I_1..I_n")

    p = sub.add_parser("dominates", help="dominance of two partitions")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(func=cmd_dominates)

    p = sub.add_parser("degcheck", help="does M degenerate to N")
    p.add_argument("M")
    p.add_argument("N")
    ring_flags(p)
    p.set_defaults(func=cmd_degcheck)

    p = sub.add_parser("fitting", help="Fitting ideal exponents over k[[x]]")
    p.add_argument("M")
    p.set_defaults(func=cmd_fitting)

    p = sub.add_parser("hasse", help="Hasse diagram of degenerations")
    p.add_argument("--weight", type=int, default=None, help="partitions / modules of this length")
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--module", default=None, help="diagram of this module's class")
    p.add_argument("--max-mult", type=int, default=None)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    ring_flags(p)
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("ardecompose", help="AR-sequence decomposition of 0->L->M->N->0")
    p.add_argument("L")
    p.add_argument("M")
    p.add_argument("N")
    ring_flags(p, an_ring=False)
    p.set_defaults(func=cmd_ardecompose)

    p = sub.add_parser("theorem44", help="compare the three extended orders")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--bounds", type=_pair, default=None, metavar="C,K")
    p.set_defaults(func=cmd_theorem44)

    for name, func, text in (("mfverify", cmd_mfverify, "check a matrix factorization"),
                             ("knorrer", cmd_knorrer, "Knorrer double of a factorization")):
        p = sub.add_parser(name, help=text)
        p.add_argument("--phi", required=True, help='JSON, e.g. [["x","y^2"],["0","x"]]')
        p.add_argument("--psi", required=True)
        p.add_argument("--f", required=True)
        if name == "knorrer":
            p.add_argument("--vars", type=lambda s: _pair(s, str), default=("y", "z"),
                           metavar="Y,Z")
        p.set_defaults(func=func)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_TRUE
    try:
        return args.func(args)
    except (CLIError, ValueError, ZeroDivisionError) as exc:
        print(f"degenlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
