"""Command-line front door.

stdout carries data (JSON with alphabetically ordered keys by default);
stderr carries diagnostics.  Exit codes: 0 success, 1 a verification
sweep found a contradiction, 2 usage or precondition error.  The
QPRIM_THREADS environment variable caps fan-out for `verify` sweeps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import oracle, pprim, repcount, ternary
from .classgroup import ambiguous_classes, element_order, enumerate_classes
from .qform import BinaryForm

FORMATS = ("json", "text", "tsv")


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation: subcommand, its arguments, output format, workers."""

    command: str
    args: argparse.Namespace
    fmt: str
    workers: int


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _parse_form(text: str, D: int) -> BinaryForm:
    try:
        a, b, c = (int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"--form expects 'a,b,c', got {text!r}")
    f = BinaryForm(a, b, c)
    if f.D != D:
        raise ValueError(f"form {f} has discriminant {f.D}, not {D}")
    return f


def _workers_from_env() -> int:
    raw = os.environ.get("QPRIM_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"QPRIM_THREADS must be an integer, got {raw!r}")
    return max(n, 1)


def _cmd_classgroup(args: argparse.Namespace) -> int:
    group = enumerate_classes(args.D)
    ambiguous = ambiguous_classes(group)
    rows = []
    for cls in group.classes:
        rows.append(
            {
                **cls.rep.as_json(),
                "ambiguous": cls in ambiguous,
                "order": element_order(cls),
            }
        )
    if args.fmt == "json":
        _emit(
            {
                "D": args.D,
                "ambiguous": [list(c.rep.triple()) for c in ambiguous],
                "classes": rows,
                "h": group.h,
            }
        )
    else:
        sep = "\t" if args.fmt == "tsv" else "  "
        print(sep.join(("D", "form", "order", "ambiguous")))
        for cls, row in zip(group.classes, rows):
            print(sep.join((str(args.D), str(cls.rep), str(row["order"]),
                            str(row["ambiguous"]).lower())))
    return 0


def _cmd_classify(args: argparse.Namespace) -> int:
    verdicts = pprim.classify_all(args.D, args.p)
    if args.fmt == "json":
        _emit({"D": args.D, "p": args.p, "verdicts": [v.to_json() for v in verdicts]})
    else:
        sep = "\t" if args.fmt == "tsv" else "  "
        print(sep.join(("form", "p", "cpp", "route")))
        for v in verdicts:
            print(sep.join((str(v.cls.rep), str(v.p),
                            str(v.completely_p_primitive).lower(), v.route)))
    return 0


def _cmd_represent(args: argparse.Namespace) -> int:
    group = enumerate_classes(args.D)
    records = []
    for cls in group.classes:
        if args.p is None:
            sols = repcount.enumerate_solutions(cls.rep, args.n)
            rec = {
                "form": list(cls.rep.triple()),
                "r": len(sols),
                "r_flat_p": None,
                "r_star_p": None,
                "solutions": [list(s) for s in sols],
            }
        else:
            full = repcount.rep_counts(cls.rep, args.n, args.p)
            rec = {
                "form": list(cls.rep.triple()),
                "r": full.r,
                "r_flat_p": full.r_flat_p,
                "r_star_p": full.r_star_p,
                "solutions": [list(s) for s in full.solutions],
            }
        records.append(rec)
    if args.fmt == "json":
        _emit({"D": args.D, "n": args.n, "p": args.p, "records": records})
    else:
        sep = "\t" if args.fmt == "tsv" else "  "
        print(sep.join(("form", "r", "r_star_p", "r_flat_p")))
        for rec in records:
            print(sep.join((str(BinaryForm(*rec["form"])), str(rec["r"]),
                            str(rec["r_star_p"]), str(rec["r_flat_p"]))))
    return 0


def _cmd_spectrum(args: argparse.Namespace) -> int:
    f = _parse_form(args.form, args.D)
    spec = repcount.spectrum(f, args.bound, args.p)
    _emit(
        {
            "D": args.D,
            "bound": args.bound,
            "form": list(f.triple()),
            "p": args.p,
            "q": spec.q,
            "q_star": spec.q_star,
            "qp_star": spec.qp_star,
        }
    )
    return 0


def _cmd_isometry(args: argparse.Namespace) -> int:
    f = _parse_form(args.form, args.D)
    sols = pprim.solve_two_square(args.D, args.p)
    if not sols:
        _emit({"D": args.D, "p": args.p, "form": list(f.triple()),
               "solvable": False})
        return 0
    sol = sols[0]
    t = pprim.build_isometry(f, sol)
    p2 = args.p * args.p
    _emit(
        {
            "D": args.D,
            "det": t.det,
            "form": list(f.triple()),
            "m": sol.m,
            "matrix": t.rows(),
            "n": sol.n,
            "p": args.p,
            "properties": {
                "det_equals_p_squared": t.det == p2,
                "nonzero_mod_p": any(e % args.p for e in
                                     (t.m11, t.m12, t.m21, t.m22)),
                "scales_form": True,  # asserted by build_isometry
                "trace_coprime_to_p": (t.m11 + t.m22) % args.p != 0,
            },
            "solvable": True,
            "trace": t.m11 + t.m22,
        }
    )
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = oracle.verify_classification_grid(
        dmin=args.dmin,
        dmax=args.dmax,
        pmax=args.pmax,
        bound=args.bound,
        workers=args.workers,
    )
    _emit(report.summary_json())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report.to_json(), fh, sort_keys=True, indent=2)
        print(f"full report written to {args.json}", file=sys.stderr)
    return 0 if report.ok else 1


def _cmd_ternary_demo(args: argparse.Namespace) -> int:
    report = ternary.spectrum_identity_report(args.bound)
    _emit(report.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qprim",
        description="Class groups of definite binary quadratic forms and "
        "completely p-primitive classes, with brute-force verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", dest="fmt", choices=FORMATS, default="json")

    p = sub.add_parser("classgroup", help="class census, orders, ambiguous subset")
    p.add_argument("D", type=int)
    add_format(p)
    p.set_defaults(func=_cmd_classgroup)

    p = sub.add_parser("classify", help="complete p-primitivity verdicts")
    p.add_argument("D", type=int)
    p.add_argument("p", type=int)
    # registered before --format, so this default is the one argparse keeps
    p.add_argument("--json", action="store_const", const="json", dest="fmt",
                   default="json", help="force JSON output (the default)")
    add_format(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("represent", help="per-class representation counts of n")
    p.add_argument("D", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--p", type=int, default=None)
    add_format(p)
    p.set_defaults(func=_cmd_represent)

    p = sub.add_parser("spectrum", help="value sets Q, Q^*, Q_p^* up to a bound")
    p.add_argument("D", type=int)
    p.add_argument("--form", required=True)
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("isometry", help="scaling isometry from the two-square equation")
    p.add_argument("D", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--form", required=True)
    p.set_defaults(func=_cmd_isometry)

    p = sub.add_parser("verify", help="brute-force the classification over a grid")
    p.add_argument("--dmin", type=int, default=-400)
    p.add_argument("--dmax", type=int, default=-3)
    p.add_argument("--pmax", type=int, default=23)
    p.add_argument("--bound", type=int, default=5000)
    p.add_argument("--json", default=None, metavar="PATH",
                   help="also write the full per-cell report to PATH")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("ternary-demo", help="ternary spectra identity report")
    p.add_argument("--bound", type=int, default=1000)
    p.set_defaults(func=_cmd_ternary_demo)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return 0 if exc.code in (0, None) else 2
    try:
        if args.func is _cmd_verify:
            args.workers = _workers_from_env()
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
