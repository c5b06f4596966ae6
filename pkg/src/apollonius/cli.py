"""Command-line front end: centers, verify, figure, generate.

Exit codes: 0 when everything passes, 1 when a check fails, 2 for usage or
configuration errors (bad triangle, undefined configuration).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import bary_core, harness
from . import theorem_suite as ts
from .bary_core import GeometryError, HPoint, TriangleMetric, set_tolerance
from .centers import CenterId, lemma3_Q, lemma3_Qstar, named_center
from .figures import FIGURE_IDS, render
from .generators import generate_heronian, heron_area

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_number(text: str):
    text = text.strip()
    try:
        return Fraction(text)
    except ValueError:
        try:
            return float(text)
        except ValueError:
            raise UsageError(f"not a number: {text!r}") from None


def parse_triple(text: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected three comma-separated values, got {text!r}")
    return tuple(parse_number(p) for p in parts)


def parse_point(T: TriangleMetric, text: str) -> HPoint:
    """Coordinates ``x,y,z`` or a center name such as ``K`` or ``X56``."""
    if "," in text:
        return HPoint(*parse_triple(text))
    for cid in CenterId:
        if cid.value.lower() == text.lower() or cid.name.lower() == text.lower():
            return named_center(T, cid)
    raise UsageError(f"unknown center {text!r}")


def build_triangle(args) -> TriangleMetric | None:
    if args.sides:
        sides = parse_triple(args.sides)
        if args.backend == "float":
            sides = tuple(float(s) for s in sides)
        return TriangleMetric.from_sides(*sides)
    if args.heronian_seed is not None:
        T = generate_heronian(args.heronian_seed, 1)[0]
        return to_backend(T, args.backend)
    return None


def to_backend(T: TriangleMetric, backend: str) -> TriangleMetric:
    if backend == "float":
        return TriangleMetric.from_sides(*(float(s) for s in T.sides))
    return T


def coords(p) -> list:
    return ts.jsonable(p)


def emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# --- subcommands -------------------------------------------------------------------

def cmd_centers(args) -> int:
    T = build_triangle(args) or TriangleMetric.from_sides(13, 14, 15)
    if args.center:
        result = {args.center: coords(parse_point(T, args.center))}
    else:
        result = {"triangle": ts.jsonable(T), "centers": {}}
        for cid in CenterId:
            try:
                result["centers"][cid.value] = coords(named_center(T, cid))
            except GeometryError as e:
                result["centers"][cid.value] = {"undefined": str(e)}
        try:
            result["ig_conic"] = coords(ts.incenter_centroid_conic(T))
        except GeometryError as e:
            result["ig_conic"] = {"undefined": str(e)}
        if args.k:
            ks = [parse_number(k) for k in args.k.split(",")]
            result["Q_k"] = {ts.jsonable(k) if isinstance(k, Fraction) else str(k): coords(lemma3_Q(T, k))
                             for k in ks}
            result["Qstar_k"] = {ts.jsonable(k) if isinstance(k, Fraction) else str(k): coords(lemma3_Qstar(T, k))
                                 for k in ks}
    emit(json.dumps(result, sort_keys=True, indent=2) + "\n", args.out)
    return EXIT_OK


def _single_instance(args, T: TriangleMetric):
    """A single CheckReport when point or parameter flags pin the configuration."""
    cid = args.check
    P = parse_point(T, args.p) if args.p else None
    Q = parse_point(T, args.q) if args.q else None
    tau = parse_number(args.q_on_conic) if args.q_on_conic is not None else None
    k = parse_number(args.k) if args.k is not None else None
    if P is None and Q is None and tau is None and k is None:
        return None
    if cid == "theorem10":
        if P is None:
            raise UsageError("theorem10 needs --p")
        if tau is not None:
            K, vertex, _ = ts.theorem10_conic(T, P)
            if vertex is not None:
                raise UsageError("--q-on-conic needs a non-degenerate conic")
            Q = harness.point_on_conic(T, K, tau)
        if Q is None:
            raise UsageError("theorem10 needs --q or --q-on-conic")
        return ts.check_theorem10(T, P, Q)
    if cid == "theorem5":
        if tau is not None:
            Q = harness.point_on_conic(T, ts.incenter_centroid_conic(T), tau)
        if Q is None:
            raise UsageError("theorem5 needs --q or --q-on-conic")
        return ts.check_theorem5(T, Q)
    if cid in ("theorem7", "lemma8", "lemma9"):
        if P is None:
            raise UsageError(f"{cid} needs --p")
        return {"theorem7": ts.check_theorem7, "lemma8": ts.check_lemma8,
                "lemma9": ts.check_lemma9}[cid](T, P)
    if cid == "p-equals-h":
        if Q is None:
            raise UsageError("p-equals-h needs --q")
        return ts.check_pH_remark(T, Q)
    if cid in ("lemma2", "lemma3"):
        if k is None:
            raise UsageError(f"{cid} needs --k")
        return (ts.check_lemma2 if cid == "lemma2" else ts.check_lemma3)(T, k)
    if cid == "lemma1":
        if P is None or Q is None:
            raise UsageError("lemma1 needs --p and --q (circles concurrent through Q)")
        return ts.check_lemma1(T, P, ts.lemma1_params_concurrent(T, P, Q))
    raise UsageError(f"{cid} takes no point or parameter flags")


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    T = build_triangle(args)
    if T is not None:
        rep = _single_instance(args, T)
        if rep is not None:
            report = harness.single_report(args.check, rep, args.seed)
        else:
            report = harness.run_report(args.check, [T] * args.trials, args.seed)
    else:
        if args.p or args.q or args.q_on_conic is not None or args.k is not None:
            raise UsageError("point and parameter flags need --sides or --heronian-seed")
        triangles = harness.generated_triangles(args.check, args.seed, args.trials)
        triangles = [to_backend(t, args.backend) for t in triangles]
        report = harness.run_report(args.check, triangles, args.seed)
    text = harness.dumps(report)
    if args.out:
        Path(args.out).write_text(text)
    if args.json:
        sys.stdout.write(text)
    else:
        counts = harness.summarize(report["reports"])
        status = "PASS" if report["passed"] else "FAIL"
        print(f"{status} {args.check}: {report['trials']} trials, {counts['pass']} pass, "
              f"{counts['fail']} fail, {counts['degenerate']} degenerate (backend {report['backend']})")
        for r in report["reports"]:
            if not r["passed"]:
                print(f"  trial {r['trial']} sample {r['sample']}: {', '.join(r['counterexample']['failed'])}")
    return EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_figure(args) -> int:
    T = build_triangle(args) or TriangleMetric.from_sides(13, 14, 15)
    P = parse_point(T, args.p) if args.p else None
    Q = parse_point(T, args.q) if args.q else None
    svg = render(args.figure, T, P, Q)
    out = args.out or f"{args.figure}.svg"
    try:
        Path(out).write_text(svg)
    except OSError as e:
        print(f"error: cannot write {out}: {e}", file=sys.stderr)
        return EXIT_FAIL
    print(out)
    return EXIT_OK


def cmd_generate(args) -> int:
    seed = args.heronian_seed if args.heronian_seed is not None else args.seed
    tris = generate_heronian(seed, args.trials)
    rows = [{"sides": [ts.fmt_scalar(s) for s in T.sides], "area": ts.fmt_scalar(heron_area(*T.sides))}
            for T in tris]
    emit(json.dumps({"seed": seed, "triangles": rows}, sort_keys=True, indent=2) + "\n", args.out)
    return EXIT_OK


# --- parser -----------------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, trials_default: int) -> None:
    p.add_argument("--sides", help="explicit side lengths a,b,c")
    p.add_argument("--heronian-seed", type=int, help="use a generated Heronian triangle")
    p.add_argument("--trials", type=int, default=trials_default)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--backend", choices=("exact", "float"), default="exact")
    p.add_argument("--tol", type=float, help="relative tolerance for the float backend")
    p.add_argument("--out", help="output path")
    p.add_argument("--json", action="store_true", help="print the JSON report to stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="apollonius",
                                     description="Generalized Apollonius circles in barycentric coordinates")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("centers", help="named centers, Q(k), Q*(k) and the IG circumconic")
    _common(p, 1)
    p.add_argument("--center", help="print a single center")
    p.add_argument("--k", help="comma-separated k values for Q(k) and Q*(k)")
    p.set_defaults(func=cmd_centers)

    p = sub.add_parser("verify", help="run a check over generated or given triangles")
    p.add_argument("check", choices=harness.CHECK_IDS)
    _common(p, 100)
    p.add_argument("--p", help="point P as x,y,z or a center name")
    p.add_argument("--q", help="point Q as x,y,z or a center name")
    p.add_argument("--q-on-conic", help="Q on the relevant conic, pencil parameter through A")
    p.add_argument("--k", help="similarity ratio for lemma2 / lemma3")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure", help="write an SVG figure")
    p.add_argument("figure", choices=FIGURE_IDS)
    _common(p, 1)
    p.add_argument("--p", help="point P")
    p.add_argument("--q", help="point Q")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("generate", help="list seeded Heronian triangles")
    _common(p, 10)
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    old_tol = bary_core.TOL
    try:
        if args.tol is not None:
            if args.tol <= 0:
                raise UsageError("--tol must be positive")
            set_tolerance(args.tol)
        return args.func(args)
    except (UsageError, GeometryError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        set_tolerance(old_tol)


if __name__ == "__main__":
    sys.exit(main())
