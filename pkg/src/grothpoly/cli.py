"""Command-line surface: compute polynomials, dump weight tables, and run
the verification suites, with deterministic machine-readable output.

Exit codes: 0 success, 1 a verification check failed, 2 usage error.
Output carries no color codes, so NO_COLOR needs no special handling.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import (
    RationalFunction,
    as_rf,
    rf_to_json,
    rf_to_latex,
    rf_to_str,
)
from .identities import SUITES, run_suite
from .models import WeightModel, vertex_weight
from .partitions import check_partition
from .transfer import (
    dual_groth_poly,
    generalized_poly,
    groth_poly,
    groth_poly_dual_route,
    j_poly,
)

_KINDS = ("G", "g", "j", "J", "s_r", "s_c")


def _parse_partition(text: str):
    text = text.strip()
    if not text:
        return ()
    try:
        return check_partition(int(p) for p in text.split(","))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


class UsageError(ValueError):
    pass


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not an exact rational: {text!r}") from exc


def _compute_value(args) -> RationalFunction:
    lam = _parse_partition(args.lam)
    n = args.nvars
    if n < 0:
        raise UsageError("--nvars must be nonnegative")
    if args.z is not None and args.kind in ("G", "g", "j", "J", "s_r", "s_c"):
        zspec = None if args.z == "formal" else [
            as_rf(_parse_rational(t)) for t in args.z.split(",")
        ]
        alpha = _parse_rational(args.alpha) if args.alpha is not None else 1
        return generalized_poly(args.kind, lam, n, z=zspec, alpha=alpha)
    if args.kind in ("s_r", "s_c", "J"):
        # inherently inhomogeneous kinds default to all z_j = 1
        alpha = _parse_rational(args.alpha) if args.alpha is not None else 1
        needed = max(len(lam), lam[0] if lam else 0, 1)
        return generalized_poly(args.kind, lam, n, z=[as_rf(1)] * needed, alpha=alpha)
    if args.kind == "G":
        if args.route == "dual":
            val = groth_poly_dual_route(lam, n)
        else:
            val = groth_poly(lam, n, encoding=args.encoding)
    elif args.kind == "g":
        val = as_rf(dual_groth_poly(lam, n, encoding=args.encoding))
    elif args.kind == "j":
        val = as_rf(j_poly(lam, n, route=args.route))
    else:
        raise UsageError(f"unknown kind {args.kind!r}")
    subs = {}
    if args.alpha is not None:
        subs["a"] = as_rf(_parse_rational(args.alpha))
    if args.beta is not None:
        subs["b"] = as_rf(_parse_rational(args.beta))
    if subs:
        val = val.substitute(subs)
    return val


def _cmd_compute(args, out) -> int:
    val = _compute_value(args)
    if args.format == "plain":
        out.write(rf_to_str(val) + "\n")
    elif args.format == "latex":
        out.write(rf_to_latex(val) + "\n")
    else:
        out.write(json.dumps(rf_to_json(val), sort_keys=True) + "\n")
    return 0


def _cmd_verify(args, out) -> int:
    suites = args.suite.split(",") if args.suite else ["all"]
    reports = []
    for suite in suites:
        if suite not in SUITES:
            raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
        reports.extend(
            run_suite(
                suite,
                aux_max=args.aux_max,
                phys_max=args.phys_max,
                sites=args.sites,
                occ_max=args.occ_max,
                max_label=args.max_label,
                degree_bound=args.degree_bound,
            )
        )
    failed = 0
    for rep in reports:
        out.write(json.dumps(rep.to_dict(), sort_keys=True) + "\n")
        if not rep.passed:
            failed += 1
    return 1 if failed else 0


def _cmd_dump_weights(args, out) -> int:
    try:
        model = WeightModel(args.family)
    except ValueError as exc:
        names = ", ".join(m.value for m in WeightModel)
        raise UsageError(f"unknown family {args.family!r}; choose from {names}") from exc
    x = RationalFunction.var("x1")
    entries = []
    k = args.max_label
    from .models import FERMIONIC_MODELS, LabelOutOfRange

    aux = (0, 1) if model in FERMIONIC_MODELS else range(k + 1)
    for a in aux:
        for b in range(k + 1):
            for c in aux:
                d = a + b - c
                if d < 0 or d > k:
                    continue
                try:
                    w = vertex_weight(model, a, b, c, d, x)
                except LabelOutOfRange:
                    continue
                if w.is_zero():
                    continue
                entries.append({"a": a, "b": b, "c": c, "d": d, "weight": rf_to_json(w)})
    out.write(
        json.dumps(
            {"family": model.value, "max_label": k, "entries": entries}, sort_keys=True
        )
        + "\n"
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grothpoly",
        description=(
            "Exact computation of canonical Grothendieck polynomials and their "
            "duals from solvable lattice models, plus mechanical verification "
            "of the model relations."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("compute", help="compute one polynomial")
    pc.add_argument("--kind", required=True, choices=_KINDS)
    pc.add_argument("--lambda", dest="lam", default="", help="comma-separated parts; empty = empty partition")
    pc.add_argument("--nvars", type=int, required=True)
    pc.add_argument("--encoding", choices=("row", "column"), default="row")
    pc.add_argument("--route", choices=("direct", "dual"), default="direct")
    pc.add_argument("--alpha", default=None, help="exact rational specialization of alpha")
    pc.add_argument("--beta", default=None, help="exact rational specialization of beta")
    pc.add_argument("--z", default=None, help="'formal' or comma-separated exact rationals")
    pc.add_argument("--format", choices=("json", "plain", "latex"), default="json")

    pv = sub.add_parser("verify", help="run verification suites, JSON line per check")
    pv.add_argument("--suite", default="all", help="comma-separated suite names")
    pv.add_argument("--aux-max", dest="aux_max", type=int, default=3)
    pv.add_argument("--phys-max", dest="phys_max", type=int, default=4)
    pv.add_argument("--sites", type=int, default=3)
    pv.add_argument("--occ-max", dest="occ_max", type=int, default=3)
    pv.add_argument("--max-label", dest="max_label", type=int, default=5)
    pv.add_argument("--degree-bound", dest="degree_bound", type=int, default=4)

    pd = sub.add_parser("dump-weights", help="emit one weight table as JSON")
    pd.add_argument("--family", required=True)
    pd.add_argument("--max-label", dest="max_label", type=int, default=3)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    out = sys.stdout
    try:
        if args.command == "compute":
            return _cmd_compute(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out)
        if args.command == "dump-weights":
            return _cmd_dump_weights(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
