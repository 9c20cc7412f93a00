"""Command line front end.

Exit codes: 0 ok, 1 verification or bound failure, 2 bad input, 3 I/O or
parse error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import classnum, corpus, cusps, euler, flat, topology
from .arith import parse_discriminant
from .errors import CorpusError, DegenerateParameter, DomainError, NotADiscriminant, SquareDiscriminant

OK, FAILED, BAD_INPUT, IO_ERROR = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _discriminant(n: int):
    try:
        D = parse_discriminant(n)
    except NotADiscriminant:
        raise _Exit(BAD_INPUT, f"{n}: not a discriminant (need D > 0 and D = 0, 1 mod 4)")
    if D.is_square:
        raise _Exit(BAD_INPUT, f"{n}: square discriminant out of scope")
    if D.value < 5:
        raise _Exit(BAD_INPUT, f"{n}: need D >= 5")
    return D


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _Exit(IO_ERROR, f"cannot write {out}: {exc}")


def cmd_invariants(args) -> int:
    D = _discriminant(args.D)
    rec = topology.invariants(D)
    br = euler.chi_breakdown(D)
    row = corpus.CorpusRow.from_record(rec)
    if args.format == "csv":
        _write(corpus.to_csv([row]), None)
    elif args.format == "json":
        data = dict(zip(corpus.COLUMNS, row.as_tuple()))
        data.update(f=D.conductor, D0=D.fundamental,
                    zeta_m1=[br.zeta_m1.numerator, br.zeta_m1.denominator],
                    F=[br.F.numerator, br.F.denominator],
                    chi_X=[br.chi_X.numerator, br.chi_X.denominator])
        _write(json.dumps(data, indent=1) + "\n", None)
    else:
        lines = [
            f"D          {D.value} = {D.conductor}^2 * {D.fundamental}",
            f"zeta(-1)   {br.zeta_m1}",
            f"F(D)       {br.F}",
            f"chi(X_D)   {br.chi_X}",
            f"chi(W_D)   {rec.chi}",
            f"cusps      {rec.C}",
            f"e2 e3 e5 e6  {rec.e2} {rec.e3} {rec.e5} {rec.e6}",
            f"h0         {rec.h0}",
            f"genus      {rec.genus}",
        ]
        _write("\n".join(lines) + "\n", None)
    return OK


def cmd_sweep(args) -> int:
    if not 5 <= args.lo <= args.hi:
        raise _Exit(BAD_INPUT, "need 5 <= --from <= --to")
    records = topology.sweep(args.lo, args.hi, args.jobs)
    rows = [corpus.CorpusRow.from_record(r) for r in records]
    _write(corpus.WRITERS[args.format](rows), args.out)
    return OK


def cmd_verify(args) -> int:
    try:
        if args.corpus:
            corpora = [(args.corpus, corpus.load_corpus(args.corpus))]
        else:
            corpora = [(name, corpus.embedded_corpus(name)) for name in corpus.EMBEDDED]
    except CorpusError as exc:
        raise _Exit(IO_ERROR, str(exc))
    status = OK
    for name, rows in corpora:
        bad = corpus.verify_rows(rows)
        if bad:
            status = FAILED
            print(f"{name}: {len(bad)} of {len(rows)} rows differ; first mismatch:")
            print(f"  {bad[0]}")
            for m in bad[1:]:
                print(f"  also {m}")
        else:
            print(f"{name}: all {len(rows)} rows match")
    return status


def cmd_bounds(args) -> int:
    records = topology.sweep(5, args.to, args.jobs)
    failures = topology.bound_failures(records)
    for D, chk in failures:
        print(f"D={D}: {chk}")
    print(f"checked {len(records)} nonsquare discriminants D <= {args.to}: "
          f"{'all bounds hold' if not failures else f'{len(failures)} failures'}")
    return FAILED if failures else OK


def cmd_cusps(args) -> int:
    D = _discriminant(args.D)
    protos = cusps.list_prototypes(D)
    if args.list:
        print("a,b,c,e")
        for p in protos:
            print(f"{p.a},{p.b},{p.c},{p.e}")
    else:
        print(len(protos))
    return OK


def cmd_forms(args) -> int:
    try:
        forms = classnum.list_reduced_forms(args.C)
    except DomainError:
        raise _Exit(BAD_INPUT, f"-{args.C}: not a discriminant (need C > 0 and C = 0, 3 mod 4)")
    if args.list:
        print("a,b,c")
        for f in forms:
            print(f"{f.a},{f.b},{f.c}")
    else:
        print(len(forms))
    return OK


def _param(text: str) -> complex:
    try:
        re_, im = text.split(",")
        return complex(float(re_), float(im))
    except ValueError:
        raise _Exit(BAD_INPUT, f"--param must look like RE,IM, got {text!r}")


def cmd_polygon(args) -> int:
    maker = flat.FAMILIES[args.family]
    try:
        if args.family in ("turtle", "hurricane") and args.param is not None:
            poly = maker(_param(args.param))
        else:
            poly = maker()
    except DegenerateParameter as exc:
        raise _Exit(BAD_INPUT, str(exc))
    obj = poly
    if args.unfold is not None:
        obj = flat.unfold(poly, args.unfold or None)
        cones = [round(obj.cone_angles[c] / math.pi, 6) for c in obj.cone_points()]
        regular = len(obj.cone_angles) - len(cones)
        print(f"{poly.name}: {obj.degree}-fold cover, genus {obj.genus}, "
              f"cone angles/pi {cones}, {regular} regular vertices")
    else:
        print(f"{poly.name}: k={poly.k}, {poly.n} sides, base genus {poly.genus()}")
    if args.json:
        _write(poly.to_json() + "\n", args.json)
    if args.svg:
        try:
            flat.emit_svg(obj, args.svg)
        except OSError as exc:
            raise _Exit(IO_ERROR, f"cannot write {args.svg}: {exc}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prymtopo", description="Topology of the Prym-Teichmueller curves W_D(6).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="invariants of one W_D(6)")
    p.add_argument("D", type=int)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("sweep", help="invariant table for a range of D")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.add_argument("--format", choices=tuple(corpus.WRITERS), default="csv")
    p.add_argument("--out", default=None)
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default $PRYM_TOPO_JOBS or 1)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="recompute a corpus (default: the shipped tables)")
    p.add_argument("--corpus", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="audit the genus, cusp and orbifold bounds")
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("cusps", help="cusp prototypes of discriminant D")
    p.add_argument("D", type=int)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_cusps)

    p = sub.add_parser("forms", help="reduced forms of discriminant -C")
    p.add_argument("C", type=int)
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_forms)

    p = sub.add_parser("polygon", help="build (and unfold) a polygon model")
    p.add_argument("family", choices=tuple(flat.FAMILIES))
    p.add_argument("--param", default=None, help="RE,IM of the free side (turtle, hurricane)")
    p.add_argument("--unfold", type=int, nargs="?", const=0, default=None,
                   help="glue rotated copies; optional cover degree (default k)")
    p.add_argument("--svg", default=None)
    p.add_argument("--json", default=None)
    p.set_defaults(func=cmd_polygon)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _Exit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except SquareDiscriminant as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
