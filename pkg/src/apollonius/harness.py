"""Seeded trial drivers for every check and the JSON run report.

A driver takes one triangle and a trial-local RNG and returns a list of
reports covering both directions of the check's iff. Trial RNGs are derived
from (seed, trial index) alone, so runs are reproducible and independent of
execution order.
"""
from __future__ import annotations

import json
import random
from fractions import Fraction

from . import theorem_suite as ts
from .bary_core import VERTICES, GeometryError, HPoint, TriangleMetric, join, meet, on_sideline
from .centers import CenterId, named_center
from .circles_conics import conic_line_second_intersection, on_conic
from .generators import generate_heronian

CHECK_IDS = ("lemma1", "lemma2", "lemma3", "lemma4", "lemma6", "lemma8", "lemma9",
             "theorem5", "theorem7", "theorem10",
             "inversion-x56", "inversion-x58", "inversion-k", "inversion-i", "p-equals-h")


def trial_rng(seed: int, index: int) -> random.Random:
    return random.Random(seed * 1_000_003 + index)


def random_k(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-20, 20), rng.randint(1, 9))


def point_on_conic(T: TriangleMetric, K, tau) -> HPoint:
    """Member of the pencil through A: second intersection of line A(0 : 1 : tau) with K."""
    line = join(VERTICES[0], HPoint(0, 1, tau))
    return conic_line_second_intersection(K, line, VERTICES[0])


def _safe(fn, *args):
    """Run a check; per-sample precondition failures become degenerate reports."""
    try:
        return fn(*args)
    except ts.DegenerateSample as e:
        rep = ts.CheckReport(fn.__name__.replace("check_", ""), args[0].backend, {"args": list(args[1:])})
        rep.degenerate = str(e)
        return rep


def _random_P(T, rng, avoid=()):
    H = named_center(T, CenterId.H)
    return ts.random_point(rng, avoid=tuple(avoid) + (H,))


def drive_theorem5(T, rng):
    K = ts.incenter_centroid_conic(T)
    named = [named_center(T, c) for c in (CenterId.K, CenterId.X56, CenterId.X58)]
    on = named + [ts.sample_on_circumconic(rng, K, avoid=named) for _ in range(2)]
    off = [ts.sample_off_conic(rng, K) for _ in range(5)]
    return [_safe(ts.check_theorem5, T, Q) for Q in on + off]


def drive_theorem10(T, rng):
    out = []
    P = _random_P(T, rng)
    K, vertex, _ = ts.theorem10_conic(T, P)
    if vertex is None:
        on = [ts.sample_on_circumconic(rng, K, avoid=(P,)) for _ in range(3)]
    else:
        on = [_point_on_line_AP(rng, vertex, P) for _ in range(3)]
    off = [ts.sample_off_conic(rng, K) if vertex is None else ts.random_point(rng) for _ in range(3)]
    out += [_safe(ts.check_theorem10, T, P, Q) for Q in on + off]
    out += drive_theorem10_degenerate(T, rng)
    return out


def _point_on_line_AP(rng, vertex, P):
    V = VERTICES[vertex]
    while True:
        s = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
        Q = HPoint(*(v + s * p for v, p in zip(V.coords, ts.normalize(P).coords)))
        if s != 0 and not on_sideline(Q) and not Q == P:
            return Q


def drive_theorem10_degenerate(T, rng):
    """P with line P*P_C through a vertex: one on-line and one off-line Q."""
    H = named_center(T, CenterId.H)
    for _ in range(50):
        i = rng.randrange(3)
        try:
            P = ts.degenerate_theorem10_P(T, rng.randint(1, 9), rng.randint(1, 9), i)
        except ts.DegenerateSample:
            continue
        if on_sideline(P) or P == H or not P.is_finite or on_sideline(ts.complement(P)):
            continue
        if any(P.coords[j] + P.coords[(j + 1) % 3] == 0 for j in range(3)):
            continue
        return [_safe(ts.check_theorem10, T, P, _point_on_line_AP(rng, i, P)),
                _safe(ts.check_theorem10, T, P, ts.random_point(rng))]
    return []


def drive_theorem7(T, rng):
    if T.is_equilateral():
        raise GeometryError("equilateral: Euler line undefined")
    H = named_center(T, CenterId.H)
    on = [named_center(T, c) for c in (CenterId.G, CenterId.O, CenterId.NinePoint)]
    on = [p for p in on if not p == H and not ts.is_vertex(p)]
    while len(on) < 3:
        on.append(ts.sample_on_euler_line(rng, T, avoid=(H,)))
    reports = [_safe(ts.check_theorem7, T, P) for P in on]
    reports.append(_redraw(lambda: ts.check_theorem7(T, ts.sample_on_euler_line(rng, T, avoid=(H,)))))
    reports += [_redraw(lambda: ts.check_theorem7(T, ts.sample_off_euler_line(rng, T, avoid=(H,))))
                for _ in range(3)]
    return reports


def _redraw(make, tries: int = 20):
    """Redraw a random sample that lands on a measure-zero degenerate configuration."""
    for _ in range(tries):
        rep = make()
        if rep.degenerate is None:
            return rep
    return rep


def drive_lemma1(T, rng):
    P = ts.random_point(rng)
    out = []
    for _ in range(2):
        try:
            params = ts.lemma1_params_concurrent(T, P, ts.random_point(rng))
        except ts.DegenerateSample:
            continue
        out.append(_safe(ts.check_lemma1, T, P, params))
    for _ in range(2):
        params = tuple(random_k(rng) for _ in range(3))
        out.append(_safe(ts.check_lemma1, T, P, params))
    return out


def drive_lemma2(T, rng):
    return [_safe(ts.check_lemma2, T, k) for k in (0, Fraction(1, 2), 1, random_k(rng), random_k(rng))]


def drive_lemma3(T, rng):
    return [_safe(ts.check_lemma3, T, k) for k in (0, Fraction(1, 2), 1, random_k(rng), random_k(rng))]


def drive_lemma8(T, rng):
    return [_safe(ts.check_lemma8, T, ts.random_point(rng)) for _ in range(2)]


def drive_lemma9(T, rng):
    return [_safe(ts.check_lemma9, T, P)
            for P in (named_center(T, CenterId.I), ts.random_point(rng))]


def drive_p_equals_h(T, rng):
    return [_safe(ts.check_pH_remark, T, ts.random_point(rng)) for _ in range(2)]


def _single(fn):
    return lambda T, rng: [_safe(fn, T)]


def _inversion(case):
    return lambda T, rng: [_safe(ts.check_inversion_suite, T, case)]


DRIVERS = {
    "lemma1": drive_lemma1,
    "lemma2": drive_lemma2,
    "lemma3": drive_lemma3,
    "lemma4": _single(ts.check_lemma4),
    "lemma6": _single(ts.check_lemma6),
    "lemma8": drive_lemma8,
    "lemma9": drive_lemma9,
    "theorem5": drive_theorem5,
    "theorem7": drive_theorem7,
    "theorem10": drive_theorem10,
    "inversion-x56": _inversion("X56"),
    "inversion-x58": _inversion("X58"),
    "inversion-k": _inversion("K"),
    "inversion-i": _inversion("I"),
    "p-equals-h": drive_p_equals_h,
}


def triangle_ok(check_id: str, T: TriangleMetric) -> bool:
    """Whether a generated triangle meets the check's triangle-level preconditions."""
    if check_id == "p-equals-h":
        return not on_sideline(named_center(T, CenterId.H))
    return True


def generated_triangles(check_id: str, seed: int, n: int) -> list[TriangleMetric]:
    pool, size = [], n
    while len(pool) < n:
        pool = [T for T in generate_heronian(seed, size) if triangle_ok(check_id, T)][:n]
        size *= 2
    return pool


def run_check(check_id: str, triangles, seed: int) -> list[dict]:
    if check_id not in DRIVERS:
        raise KeyError(check_id)
    out = []
    for index, T in enumerate(triangles):
        rng = trial_rng(seed, index)
        for sub, rep in enumerate(DRIVERS[check_id](T, rng)):
            d = rep.to_dict()
            d["trial"] = index
            d["sample"] = sub
            out.append(d)
    return out


def run_report(check_id: str, triangles, seed: int, backend: str | None = None) -> dict:
    reports = run_check(check_id, triangles, seed)
    if backend is None:
        backend = triangles[0].backend if triangles else "exact"
    return {
        "schema_version": ts.SCHEMA_VERSION,
        "check_id": check_id,
        "backend": backend,
        "seed": seed,
        "trials": len(triangles),
        "passed": all(r["passed"] for r in reports),
        "reports": reports,
    }


def single_report(check_id: str, rep: ts.CheckReport, seed: int) -> dict:
    d = rep.to_dict()
    d["trial"] = 0
    d["sample"] = 0
    return {
        "schema_version": ts.SCHEMA_VERSION,
        "check_id": check_id,
        "backend": d["backend"],
        "seed": seed,
        "trials": 1,
        "passed": rep.passed,
        "reports": [d],
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def summarize(reports) -> dict:
    counts = {"pass": 0, "fail": 0, "degenerate": 0}
    for r in reports:
        counts[r["verdict"]] += 1
    return counts
