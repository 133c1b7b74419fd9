"""Command-line surface: classify, qmap, invariants, count, verify.

Matrices and field elements travel as integer encodings (base-p digits,
constant coordinate least significant); polynomials are printed both as
text and as coefficient-encoding lists.  Exit codes: 0 success, 1 property
or agreement failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .fields import make_field
from .polynomials import to_text
from .projective import IDENTITY, Mat2, ProjMat, classify, reduce
from .action import is_invariant
from .rational import generate_invariants, q_map, substitute_mobius
from .counting import (count_invariants_bruteforce, count_invariants_formula,
                       count_via_criterion)
from .verify import SUITES

DEFAULT_SEED = 12345


def _poly_payload(f):
    return {"text": to_text(f), "coeffs": [c.encode() for c in f.coeffs]}


def _matrix_payload(m):
    return [x.encode() for x in m.entries()]


def _parse_matrix(spec, text: str) -> Mat2:
    parts = text.split(",")
    if len(parts) != 4:
        raise ValueError("matrix must be four comma-separated encodings a,b,c,d")
    return Mat2.from_encodings(spec, [int(x) for x in parts])


def _emit(payload: dict, fmt: str, tsv_rows=None):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        rows = tsv_rows if tsv_rows is not None else [payload]
        cols = list(rows[0].keys())
        print("\t".join(cols))
        for row in rows:
            print("\t".join(str(row[c]) for c in cols))


def cmd_classify(args) -> int:
    spec = make_field(args.p, args.s)
    m = _parse_matrix(spec, args.matrix)
    info = classify(m)
    if info.kind == IDENTITY:
        payload = {"field": spec.describe(), "matrix": _matrix_payload(m),
                   "type": "identity", "order": 1, "reduced": None,
                   "conjugator": None, "param": None, "eigenvalue": None}
    else:
        rf = reduce(m)
        payload = {
            "field": spec.describe(),
            "matrix": _matrix_payload(m),
            "type": info.kind,
            "order": ProjMat(m).order(),
            "reduced": _matrix_payload(rf.reduced),
            "conjugator": _matrix_payload(rf.conjugator),
            "param": info.param.encode() if info.param is not None else None,
            "eigenvalue": [rf.eigenvalue.u.encode(), rf.eigenvalue.v.encode()],
        }
    _emit(payload, args.format)
    return 0


def cmd_qmap(args) -> int:
    spec = make_field(args.p, args.s)
    m = _parse_matrix(spec, args.matrix)
    if ProjMat(m).is_identity():
        raise ValueError("the identity class has no rational map")
    qc = q_map(m)
    Q = qc.map
    verified = substitute_mobius(Q, m) == Q.normalized()
    payload = {
        "field": spec.describe(),
        "matrix": _matrix_payload(m),
        "num": _poly_payload(Q.num),
        "den": _poly_payload(Q.den),
        "degree": Q.degree,
        "type": qc.source.info.kind,
        "conjugator": _matrix_payload(qc.source.conjugator),
        "fixed_point_verified": verified,
    }
    _emit(payload, args.format)
    return 0 if verified else 1


def cmd_invariants(args) -> int:
    spec = make_field(args.p, args.s)
    m = _parse_matrix(spec, args.matrix)
    cls = ProjMat(m)
    if cls.is_identity():
        raise ValueError("the identity class fixes every polynomial")
    D = cls.order()
    if D * args.m <= 2:
        raise ValueError("generation requires D*m > 2")
    polys = generate_invariants(m, args.m)
    checked = None
    if args.check:
        checked = all(is_invariant(cls, f) for f in polys)
    payload = {
        "field": spec.describe(),
        "matrix": _matrix_payload(m),
        "order": D,
        "degree": D * args.m,
        "count": len(polys),
        "invariants": [_poly_payload(f) for f in polys],
    }
    if args.check:
        payload["checked"] = checked
    if args.format == "tsv":
        rows = [{"degree": D * args.m, "invariant": to_text(f)} for f in polys]
        rows = rows or [{"degree": D * args.m, "invariant": "(none)"}]
        _emit(payload, "tsv", rows)
    else:
        _emit(payload, "json")
    if args.check and not checked:
        return 1
    return 0


def cmd_count(args) -> int:
    spec = make_field(args.p, args.s)
    m = _parse_matrix(spec, args.matrix)
    cls = ProjMat(m)
    n = args.n
    if n < 2:
        raise ValueError("counting starts at degree 2")
    counts: dict[str, int] = {}
    if args.method in ("formula", "all"):
        if n <= 2:
            raise ValueError("the closed formula applies only for n > 2; "
                             "use --method brute for quadratics")
        counts["formula"] = count_invariants_formula(m, n)
    if args.method in ("brute", "all"):
        counts["brute"] = count_invariants_bruteforce(cls, n)
    if args.method in ("criterion", "all"):
        D = cls.order()
        if n % D:
            counts["criterion"] = 0
        else:
            counts["criterion"] = count_via_criterion(m, n // D)
    agree = len(set(counts.values())) == 1
    payload = {
        "field": spec.describe(),
        "matrix": _matrix_payload(m),
        "type": classify(m).kind or "identity",
        "order": cls.order(),
        "n": n,
        **counts,
    }
    if args.method == "all":
        payload["agree"] = agree
    _emit(payload, args.format)
    return 0 if args.method != "all" or agree else 1


def cmd_verify(args) -> int:
    spec = make_field(args.p, args.s)
    suite = SUITES[args.suite]
    rows = suite(spec, seed=args.seed)
    if args.format == "json":
        print(json.dumps([row.__dict__ for row in rows], sort_keys=True))
    else:
        print("suite\tname\tpassed\tdetail")
        for row in rows:
            print(f"{row.suite}\t{row.name}\t{'pass' if row.passed else 'FAIL'}\t{row.detail}")
    return 0 if all(row.passed for row in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pgl2poly",
        description="PGL2(F_q) acting on irreducible polynomials: "
                    "classification, rational maps, exact invariant counts.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, matrix=True):
        p.add_argument("--p", type=int, required=True, help="field characteristic")
        p.add_argument("--s", type=int, default=1, help="extension degree (default 1)")
        if matrix:
            p.add_argument("--matrix", required=True,
                           help="entries a,b,c,d as integer encodings")
        p.add_argument("--format", choices=("json", "tsv"), default="json")

    p = sub.add_parser("classify", help="type, order and reduced form of a class")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("qmap", help="the degree-D rational map of a class")
    common(p)
    p.set_defaults(func=cmd_qmap)

    p = sub.add_parser("invariants", help="all invariants of degree D*m")
    common(p)
    p.add_argument("--m", type=int, required=True, help="transform degree m")
    p.add_argument("--check", action="store_true",
                   help="re-verify each output against the direct action")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("count", help="number of invariants of degree n")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=("formula", "brute", "criterion", "all"),
                   default="all")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run a property suite")
    common(p, matrix=False)
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
