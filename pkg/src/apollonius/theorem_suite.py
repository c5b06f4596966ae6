"""Executable checks for each lemma and theorem, returning structured reports.

Every check builds its configuration by construction (circles through three
points, second intersections, perpendiculars in the embedding) and compares it
against the closed forms and membership criteria. Iff statements are scored
as ``claim == criterion`` so both directions are exercised by the samplers.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from numbers import Rational

from .bary_core import (LINE_AT_INFINITY, SIDELINES, VERTICES, CartesianPoint, GeometryError,
                        HLine, HPoint, TriangleMetric, _maxabs, collinear, concurrent, concyclic,
                        cross, det3, exact_sqrt, from_cartesian, is_exact, is_vertex, is_zero,
                        join, meet, normalize, on_sideline, signed_ratio, sqrt, to_cartesian)
from .centers import (CenterId, complement, isogonal_conjugate, lemma3_Q, lemma3_Qstar,
                      named_center, on_euler_line, tripolar)
from .circles_conics import (Circle, Conic, circle_center, circle_from_center, circle_through_3,
                             circle_with_diameter, circumcircle, circumconic_from_line, coaxal,
                             conic_line_second_intersection, on_conic, orthogonal, polar, power,
                             radical_axis)
from .constructions import (DerivedTriangle, altitude_foot, apollonius_circle, bisector_feet,
                            central_similarity, cevian_triangle, circumcevian_triangle,
                            derived_center, derived_triangle, euler_line, foot_of_perpendicular,
                            incircle_inversion, midpoint, orthocorrespondent, orthotransversal,
                            orthotransversal_points, parallel_through, perpendicular_bisector,
                            reflect_in_line)

SCHEMA_VERSION = "1.0"


class DegenerateSample(GeometryError):
    """The sampled configuration is a measure-zero degenerate case."""


@dataclass
class CheckReport:
    check_id: str
    backend: str
    inputs: dict
    sub_verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    degenerate: str | None = None
    downgrades: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(self.sub_verdicts.values())

    @property
    def verdict(self) -> str:
        if not self.passed:
            return "fail"
        return "degenerate" if self.degenerate else "pass"

    def check(self, name: str, value: bool) -> bool:
        self.sub_verdicts[name] = bool(value)
        return bool(value)

    def downgrade(self, name: str) -> None:
        if name not in self.downgrades:
            self.downgrades.append(name)

    def to_dict(self) -> dict:
        backend = self.backend if not self.downgrades else self.backend + "+float"
        out = {
            "check_id": self.check_id,
            "backend": backend,
            "inputs": jsonable(self.inputs),
            "verdict": self.verdict,
            "passed": self.passed,
            "sub_verdicts": dict(sorted(self.sub_verdicts.items())),
            "witnesses": jsonable(self.witnesses),
            "degenerate": self.degenerate,
            "float_subchecks": list(self.downgrades),
        }
        if not self.passed:
            out["counterexample"] = {
                "failed": sorted(k for k, v in self.sub_verdicts.items() if not v),
                "inputs": jsonable(self.inputs),
            }
        return out


def fmt_scalar(x):
    if isinstance(x, Rational):
        f = Fraction(x)
        return f"{f.numerator}/{f.denominator}"
    return float(x)


def jsonable(obj):
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, (Fraction, float)):
        return fmt_scalar(obj)
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (HPoint, HLine)):
        rep = obj.cleared()
        return [str(c) if isinstance(c, int) else float(c) for c in rep]
    if isinstance(obj, Conic):
        return jsonable(HPoint(*obj.coeffs))
    if isinstance(obj, Circle):
        return {"k": fmt_scalar(obj.k), "linepart": [fmt_scalar(c) for c in obj.linepart]}
    if isinstance(obj, TriangleMetric):
        if obj.given_sides is not None:
            return {"sides": [fmt_scalar(s) for s in obj.sides]}
        return {"squared_sides": [fmt_scalar(s) for s in obj.sq]}
    if isinstance(obj, CartesianPoint):
        return [fmt_scalar(obj.x), fmt_scalar(obj.y)]
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return str(obj)


# --- shared configuration builders -------------------------------------------

def _rot(t, i):
    return (t[i % 3], t[(i + 1) % 3], t[(i + 2) % 3])


def _unrot(t, i):
    out = [None, None, None]
    for j in range(3):
        out[(i + j) % 3] = t[j]
    return tuple(out)


def generalized_apollonius_circles(T: TriangleMetric, P: HPoint, Q: HPoint):
    """Circles (A X A'), (B Y B'), (C Z C'): cevian traces of P, circumcevian of Q.

    A circle whose three points are collinear comes back as a line.
    """
    traces = cevian_triangle(P)
    primes = circumcevian_triangle(T, Q)
    circles = []
    for i in range(3):
        if primes[i] == VERTICES[i]:
            raise DegenerateSample(f"line {'ABC'[i]}Q is tangent to the circumcircle")
        circles.append(circle_through_3(T, VERTICES[i], traces[i], primes[i]))
    return traces, primes, tuple(circles)


def _second_on_circumcircle(T, C: Circle, i: int) -> HPoint:
    """Other intersection of a circle through vertex i with the circumcircle."""
    O = circumcircle(T)
    axis = radical_axis(C, O)
    return conic_line_second_intersection(O, axis, VERTICES[i])


def incenter_centroid_conic(T: TriangleMetric) -> Conic:
    if T.is_equilateral():
        raise GeometryError("equilateral: I = G, line IG undefined")
    I = named_center(T, CenterId.I)
    return circumconic_from_line(T, join(I, named_center(T, CenterId.G)))


def _axis_contains(pv, point) -> bool:
    if pv.common_radical_axis is None:
        return pv.axis_undefined
    return pv.common_radical_axis.contains(point)


def _require_nonequilateral(T):
    if T.is_equilateral():
        raise GeometryError("equilateral triangle excluded")


def _require_scalene(T):
    if not T.is_scalene():
        raise GeometryError("scalene triangle required")


# --- lemma1: circle pencils through a vertex and a trace -----------------------

def lemma1_circle(T: TriangleMetric, P: HPoint, i: int, lam) -> Circle:
    """Member ``lam`` of the pencil of circles through vertex i and the trace of P."""
    p, q, r = _rot(P.coords, i)
    a2 = _rot(T.sq, i)[0]
    base = -a2 * q * r / (q + r) ** 2
    return Circle(T, _unrot((base - base, base + lam * r, base - lam * q), i))


def lemma1_param_through(T: TriangleMetric, P: HPoint, i: int, point: HPoint):
    """Pencil parameter of the circle through vertex i, trace i of P, and ``point``."""
    trace = cevian_triangle(P)[i]
    C = circle_through_3(T, VERTICES[i], trace, point)
    if C.is_line:
        raise DegenerateSample("chosen point is collinear with the vertex and trace")
    p, q, r = _rot(P.coords, i)
    a2 = _rot(T.sq, i)[0]
    base = -a2 * q * r / (q + r) ** 2
    _, v, w = _rot(C.linepart, i)
    if not is_zero(r, _maxabs((p, q, r))):
        return (v - base) / r
    return (base - w) / q


def lemma1_params_concurrent(T, P, Q):
    primes = circumcevian_triangle(T, Q)
    return tuple(lemma1_param_through(T, P, i, primes[i]) for i in range(3))


def check_lemma1(T: TriangleMetric, P: HPoint, circle_params) -> CheckReport:
    rep = CheckReport("lemma1", T.backend, {"triangle": T, "P": P, "circle_params": list(circle_params)})
    if on_sideline(P):
        raise GeometryError("P on a sideline")
    traces = cevian_triangle(P)
    if not all(t.is_finite for t in traces):
        rep.degenerate = "cevian trace at infinity"
        return rep
    O = circumcircle(T)
    U, lines, Qa, primes = [], [], [], []
    for i in range(3):
        C = lemma1_circle(T, P, i, circle_params[i])
        side = SIDELINES[i]
        u = conic_line_second_intersection(C, side, traces[i])
        axis = radical_axis(C, O)
        prime = conic_line_second_intersection(O, axis, VERTICES[i])
        if u == traces[i] or prime == VERTICES[i]:
            rep.degenerate = "circle tangent to a sideline or to the circumcircle"
            return rep
        if any(u == VERTICES[j] for j in range(3)):
            rep.degenerate = "second sideline intersection at a vertex"
            return rep
        U.append(u)
        primes.append(prime)
        lines.append(axis)
        Qa.append(meet(axis, side))
    col = collinear(*U)
    conc = concurrent(*lines)
    rep.witnesses.update(U=U, A_primes=primes, collinear_UVW=col, concurrent_cevians=conc)
    rep.check("collinear_iff_concurrent", col == conc)
    ok = True
    for i in range(3):
        b, c = VERTICES[(i + 1) % 3], VERTICES[(i + 2) % 3]
        lhs = signed_ratio(U[i], b, c)
        q_ratio = 1 if not Qa[i].is_finite else signed_ratio(Qa[i], b, c)
        if Qa[i].is_finite and Qa[i] == c:
            continue
        rhs = q_ratio * signed_ratio(traces[i], c, b)
        ok = ok and is_zero(lhs - rhs, max(1.0, abs(float(lhs))))
    rep.check("ratio_identity", ok)
    return rep


# --- lemma2, lemma3: the homothetic family Q(k) ------------------------------

def lemma2_points(T: TriangleMetric, k):
    """U, V, W: external bisectors of the homothetic triangle A0B0C0 on the sidelines."""
    I = named_center(T, CenterId.I)
    _, external = bisector_feet(T)
    pts = []
    for i in range(3):
        V = VERTICES[i]
        ext = join(V, external[i])
        line = ext if k == 1 else parallel_through(ext, central_similarity(I, k, V))
        pts.append(meet(line, SIDELINES[i]))
    return tuple(pts)


def lemma2_ratio(T: TriangleMetric, k, i: int = 0):
    """UB/UC = (c/b)(c + a + (2k-1)b)/(a + b + (2k-1)c), rotated to vertex i."""
    a, b, c = _rot(T.sides, i)
    m = 2 * k - 1
    den = b * (a + b + m * c)
    if is_zero(den, T.scale):
        raise DegenerateSample("ratio denominator vanishes for this k")
    return c * (c + a + m * b) / den


def check_lemma2(T: TriangleMetric, k) -> CheckReport:
    _require_scalene(T)
    rep = CheckReport("lemma2", T.backend, {"triangle": T, "k": k})
    pts = lemma2_points(T, k)
    rep.witnesses["UVW"] = pts
    if not all(p.is_finite for p in pts):
        rep.degenerate = "external bisector parallel to a sideline"
        return rep
    rep.check("UVW_collinear", collinear(*pts))
    ok = True
    for i in range(3):
        try:
            formula = lemma2_ratio(T, k, i)
        except DegenerateSample as e:
            rep.degenerate = str(e)
            continue
        b, c = VERTICES[(i + 1) % 3], VERTICES[(i + 2) % 3]
        built = signed_ratio(pts[i], b, c)
        ok = ok and is_zero(built - formula, max(1.0, abs(float(formula))))
    rep.check("ratio_formula", ok)
    return rep


def check_lemma3(T: TriangleMetric, k) -> CheckReport:
    _require_scalene(T)
    rep = CheckReport("lemma3", T.backend, {"triangle": T, "k": k})
    I, G = named_center(T, CenterId.I), named_center(T, CenterId.G)
    internal, _ = bisector_feet(T)
    pts = lemma2_points(T, k)
    lines = []
    for i in range(3):
        if not pts[i].is_finite or pts[i] == internal[i]:
            rep.degenerate = "circle (AXU) undefined"
            return rep
        C = circle_through_3(T, VERTICES[i], internal[i], pts[i])
        prime = _second_on_circumcircle(T, C, i)
        if prime == VERTICES[i]:
            rep.degenerate = "circle tangent to the circumcircle"
            return rep
        lines.append(join(VERTICES[i], prime))
    conc = concurrent(*lines)
    rep.check("cevians_concur", conc)
    Qk = lemma3_Q(T, k)
    Qs = lemma3_Qstar(T, k)
    if conc:
        Q = meet(lines[0], lines[1])
        rep.witnesses["Q"] = Q
        rep.check("concurrence_point_is_Q_k", Q == Qk)
    rep.check("Q_k_on_IG_conic", on_conic(incenter_centroid_conic(T), Qk))
    rep.check("Qstar_on_IG", collinear(Qs, I, G))
    if not Qs == G:
        a, b, c = T.sides
        rep.check("line_GQstar_fixed", join(G, Qs) == HLine(b - c, c - a, a - b))
    rep.witnesses["Q_k"] = Qk
    rep.witnesses["Qstar_k"] = Qs
    return rep


# --- lemma4: Apollonius circles of IBC -----------------------------------------

def lemma4_circles(T: TriangleMetric, i: int = 0):
    """Apollonius circles of triangle IBC (i = 0) through B and C, in reference coordinates."""
    I = named_center(T, CenterId.I)
    j, k = (i + 1) % 3, (i + 2) % 3
    DT = derived_triangle(T, I, VERTICES[j], VERTICES[k])
    return tuple(DT.circle_to_reference(apollonius_circle(DT.metric, local)) for local in (1, 2))


def lemma4_point(T: TriangleMetric, i: int = 0) -> HPoint:
    """Q_BC (i = 0) from the Apollonius circles of triangle IBC through B and C."""
    j, k = (i + 1) % 3, (i + 2) % 3
    primes = [_second_on_circumcircle(T, S, vid) for S, vid in zip(lemma4_circles(T, i), (j, k))]
    return meet(join(VERTICES[j], primes[0]), join(VERTICES[k], primes[1]))


def check_lemma4(T: TriangleMetric) -> CheckReport:
    _require_scalene(T)
    rep = CheckReport("lemma4", T.backend, {"triangle": T})
    conic = incenter_centroid_conic(T)
    X58 = named_center(T, CenterId.X58)
    cosines = T.cosines
    for i, name in enumerate(("Q_BC", "Q_CA", "Q_AB")):
        Qp = lemma4_point(T, i)
        k = -cosines[i]
        if not is_exact(k):
            rep.downgrade(name)
        rep.witnesses[name] = Qp
        rep.witnesses[f"k_{name}"] = k
        rep.check(f"{name}_matches_Q_of_minus_cos", Qp == lemma3_Q(T, k))
        rep.check(f"{name}_on_IG_conic", on_conic(conic, Qp))
        # the radical axis of these two circles is the Brocard axis of IBC
        brocard = radical_axis(*lemma4_circles(T, i))
        rep.check(f"brocard_axis_{name[2:]}_through_X58", brocard.contains(X58))
    return rep


# --- theorem5: P = I and the IG conic --------------------------------------------

def excentral_tangent_circles(T: TriangleMetric, circles):
    """Circles tangent to each (A X A') at its vertex and passing through the excenter."""
    out = []
    for i, C in enumerate(circles):
        E = named_center(T, (CenterId.Ia, CenterId.Ib, CenterId.Ic)[i])
        t = polar(C, VERTICES[i])
        denom = E.total * t.value(E)
        if is_zero(denom, T.scale):
            raise DegenerateSample("excenter on the tangent line")
        lam = -C.evaluate(E) / denom
        out.append(Circle(T, tuple(l + lam * tt for l, tt in zip(C.linepart, t))))
    return tuple(out)


def check_theorem5(T: TriangleMetric, Q: HPoint) -> CheckReport:
    _require_nonequilateral(T)
    if is_vertex(Q):
        raise GeometryError("Q must differ from the vertices")
    rep = CheckReport("theorem5", T.backend, {"triangle": T, "Q": Q})
    I = named_center(T, CenterId.I)
    X58 = named_center(T, CenterId.X58)
    conic = incenter_centroid_conic(T)
    on = on_conic(conic, Q)
    try:
        _, _, circles = generalized_apollonius_circles(T, I, Q)
    except DegenerateSample as e:
        rep.degenerate = str(e)
        return rep
    pv = coaxal(*circles)
    claim = pv.coaxal and _axis_contains(pv, X58)
    rep.witnesses.update(on_conic=on, coaxal=pv.coaxal, axis=pv.common_radical_axis,
                         minors=pv.witness_minors, conic=conic,
                         pencil_of_lines=pv.axis_undefined)
    rep.check("coaxal_with_X58_iff_on_conic", claim == on)
    if Q == I:
        rep.check("incenter_gives_concurrent_bisectors",
                  all(c.is_line and c.line.contains(I) for c in circles))
    if on and pv.coaxal and not any(c.is_line for c in circles):
        try:
            tangent = excentral_tangent_circles(T, circles)
        except DegenerateSample:
            return rep
        tv = coaxal(*tangent)
        O = named_center(T, CenterId.O)
        rep.check("excentral_tangent_circles_coaxal_on_OI",
                  tv.coaxal and tv.common_radical_axis is not None
                  and tv.common_radical_axis == join(O, I))
    return rep


# --- lemma6: radical centers for Q = X56 ---------------------------------------

def check_lemma6(T: TriangleMetric) -> CheckReport:
    _require_scalene(T)
    rep = CheckReport("lemma6", T.backend, {"triangle": T})
    I = named_center(T, CenterId.I)
    X56 = named_center(T, CenterId.X56)
    primes = circumcevian_triangle(T, X56)
    arcs = circumcevian_triangle(T, I)
    feet = cevian_triangle(I)
    contact = [named_center(T, c) for c in (CenterId.D, CenterId.E, CenterId.F)]
    O = circumcircle(T)
    _, _, gen = generalized_apollonius_circles(T, I, X56)
    centers = []
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        tag = "ABC"[i]
        rep.check(f"cyclic_prime_arc_foot_contact_{tag}",
                  concyclic(T, primes[i], arcs[i], feet[i], contact[i]))
        rep.check(f"cyclic_primes_foot_contact_{tag}",
                  concyclic(T, primes[j], primes[k], feet[i], contact[i]))
        c1 = circle_through_3(T, primes[i], arcs[i], feet[i])
        c2 = circle_through_3(T, primes[j], primes[k], feet[i])
        U = meet(radical_axis(c1, O), radical_axis(c2, O))
        rep.check(f"radical_center_{tag}_concurrent", radical_axis(c1, c2).contains(U))
        rep.check(f"radical_center_{tag}_on_generalized_circle", gen[i].contains(U))
        centers.append(U)
    rep.witnesses["lemma6_UVW"] = centers
    rep.check("radical_centers_collinear", collinear(*centers))
    X57 = named_center(T, CenterId.X57)
    line = join(centers[0], centers[1])
    rep.check("line_is_tripolar_of_X57", line == tripolar(X57))
    rep.check("line_is_orthotransversal_of_I", line == orthotransversal(T, I))
    return rep


# --- inversion in the incircle ------------------------------------------------------

INVERSION_CASES = {"X56": CenterId.X56, "X58": CenterId.X58, "K": CenterId.K, "I": CenterId.I}


def tangent_pencil_common_points(circle: Circle, p0: CartesianPoint, p1: CartesianPoint):
    """Intersections of a circle with the line p0 p1: (discriminant, points)."""
    _, dx, dy, f = circle.cartesian()
    d = p1 - p0
    D = CartesianPoint(dx, dy)
    qa = d.norm2()
    qb = 2 * p0.dot(d) + D.dot(d)
    qc = p0.norm2() + D.dot(p0) + f
    disc = qb * qb - 4 * qa * qc
    if disc < 0:
        return disc, ()
    root = sqrt(disc)
    return disc, tuple(p0 + d * ((-qb + s * root) / (2 * qa)) for s in (1, -1))


def check_inversion_suite(T: TriangleMetric, case_id: str) -> CheckReport:
    _require_scalene(T)
    if case_id not in INVERSION_CASES:
        raise GeometryError(f"unknown inversion case {case_id!r}")
    rep = CheckReport(f"inversion-{case_id.lower()}", T.backend, {"triangle": T, "case": case_id})
    psi = incircle_inversion(T)
    I = named_center(T, CenterId.I)
    contact = [named_center(T, c) for c in (CenterId.D, CenterId.E, CenterId.F)]
    A1 = tuple(midpoint(contact[(i + 1) % 3], contact[(i + 2) % 3]) for i in range(3))
    O = circumcircle(T)
    Ixy = psi.center
    r2 = psi.power

    # preamble facts shared by every case
    rep.check("vertex_images_are_contact_midpoints",
              all(psi.point(VERTICES[i]) == A1[i] for i in range(3)))
    rep.check("contact_points_fixed", all(psi.point(p) == p for p in contact))
    gammas = []
    for i in range(3):
        g = psi.line(SIDELINES[i])
        gammas.append(g)
        rep.check(f"sideline_image_{'abc'[i]}_has_diameter_ID",
                  g == circle_with_diameter(T, Ixy, to_cartesian(T, contact[i])))
    circ1 = psi.circle(O)
    rep.check("circumcircle_image_through_A1B1C1", circ1 == circle_through_3(T, *A1))
    rep.check("circumcircle_image_radius_half_r", is_zero(circ1.radius2 - r2 / 4, r2))
    feet = cevian_triangle(I)
    rep.check("bisector_foot_images_are_vertex_reflections",
              all(psi.point(feet[i]) == reflect_in_line(T, A1[i], join(A1[(i + 1) % 3], A1[(i + 2) % 3]))
                  for i in range(3)))
    DT = derived_triangle(T, *A1)
    M1 = DT.metric
    if DT.backend != "exact":
        rep.downgrade("inverted_triangle")
    O1 = derived_center(DT, CenterId.O)
    N1 = derived_center(DT, CenterId.NinePoint)
    rep.check("incenter_is_orthocenter_of_inverted", derived_center(DT, CenterId.H) == I)
    sq = M1.sq
    rep.check("inverted_triangle_acute",
              all(sq[i] < sq[(i + 1) % 3] + sq[(i + 2) % 3] for i in range(3)))
    euler1 = euler_line(DT)
    rep.check("inverted_euler_line_through_I", euler1.contains(I))

    Q = named_center(T, INVERSION_CASES[case_id])
    _, primes, circles = generalized_apollonius_circles(T, I, Q)
    images = [psi.circle(c) for c in circles]
    sides1 = [join(A1[(i + 1) % 3], A1[(i + 2) % 3]) for i in range(3)]

    if case_id == "I":
        for i in range(3):
            img = images[i]
            alt = join(A1[i], foot_of_perpendicular(T, A1[i], sides1[i]))
            rep.check(f"image_{'abc'[i]}_is_altitude", img.is_line and img.line == alt)
        rep.check("altitudes_concurrent_at_I",
                  all(img.is_line and img.line.contains(I) for img in images))
        H1_local = named_center(M1, CenterId.H)
        rep.check("orthotransversal_of_orthocenter_is_line_at_infinity",
                  DT.line_to_reference(orthotransversal(M1, H1_local)) == LINE_AT_INFINITY)
        return rep

    centers = [circle_center(img) for img in images]
    rep.witnesses["image_centers"] = centers
    rep.check("image_centers_on_inverted_sidelines",
              all(sides1[i].contains(centers[i]) for i in range(3)))
    rep.check("image_centers_collinear", collinear(*centers))
    center_line = join(centers[0], centers[1])
    pv = coaxal(*images)
    rep.check("images_coaxal", pv.coaxal)
    rep.check("O1_on_common_radical_axis", _axis_contains(pv, O1))
    rep.witnesses["image_axis"] = pv.common_radical_axis

    def ortho_line(pt_ref):
        return DT.line_to_reference(orthotransversal(M1, DT.from_reference(pt_ref)))

    if case_id == "X56":
        rep.check("center_line_is_orthotransversal_of_O1", center_line == ortho_line(O1))
        O1xy = to_cartesian(T, O1)
        rep.check("prime_images_antipodal_to_vertices",
                  all(psi.point(primes[i]) == from_cartesian(T, O1xy * 2 - to_cartesian(T, A1[i]))
                      for i in range(3)))
    elif case_id == "X58":
        rep.check("center_line_is_orthotransversal_of_N1", center_line == ortho_line(N1))
        rep.check("images_pass_through_O1", all(img.contains(O1) for img in images))
    elif case_id == "K":
        rep.check("images_orthogonal_to_O1_circle", all(orthogonal(img, circ1) for img in images))
        rep.check("images_are_apollonius_circles_of_inverted",
                  all(images[i] == DT.circle_to_reference(apollonius_circle(M1, i)) for i in range(3)))
        _inversion_symmedian_extras(rep, T, DT, A1, images, centers, center_line, euler1, I, O1)
    return rep


def _inversion_symmedian_extras(rep, T, DT, A1, images, centers, center_line, euler1, I, O1):
    """Tangent circles with diameters A1 O_a, their common points L1, L1' on the Euler line."""
    M1 = DT.metric
    tangent = [circle_with_diameter(T, to_cartesian(T, A1[i]), to_cartesian(T, centers[i]))
               for i in range(3)]
    tv = coaxal(*tangent)
    rep.check("tangent_circles_coaxal", tv.coaxal)
    rep.check("tangent_circles_axis_is_euler_line",
              tv.common_radical_axis is not None and tv.common_radical_axis == euler1)
    disc, pts = tangent_pencil_common_points(tangent[0], to_cartesian(T, O1), to_cartesian(T, I))
    rep.witnesses["L1_discriminant"] = disc
    if disc < 0 or len(pts) != 2:
        # a claim about the configuration, not about this code: flag it, do not fail
        rep.witnesses["conjecture_counterexample_candidate"] = True
        return
    rep.witnesses["conjecture_counterexample_candidate"] = False
    if not is_exact(pts[0].x, pts[0].y):
        rep.downgrade("L1")
    L = [from_cartesian(T, p) for p in pts]
    rep.witnesses["L1"] = L
    rep.check("common_points_on_all_tangent_circles", all(c.contains(p) for c in tangent for p in L))
    K1 = named_center(M1, CenterId.K)
    for tag, p in zip(("L1", "L1prime"), L):
        local = DT.from_reference(p)
        rep.check(f"center_line_is_orthotransversal_of_{tag}",
                  DT.line_to_reference(orthotransversal(M1, local)) == center_line)
        rep.check(f"orthocorrespondent_of_{tag}_is_K1", orthocorrespondent(M1, local) == K1)


# --- lemma8, lemma9, theorem7: circles through H-related points -----------------------

def lemma8_circles(T: TriangleMetric, P: HPoint):
    """Circle through each vertex and P whose center lies on the midline cutting off that vertex."""
    circles = []
    for i in range(3):
        V = VERTICES[i]
        mid = join(midpoint(V, VERTICES[(i + 1) % 3]), midpoint(V, VERTICES[(i + 2) % 3]))
        bis = perpendicular_bisector(T, V, P)
        c = meet(mid, bis)
        if not c.is_finite:
            circles.append(Circle.from_line(T, join(V, P)))
            continue
        cxy = to_cartesian(T, c)
        circles.append(circle_from_center(T, cxy, (to_cartesian(T, V) - cxy).norm2()))
    return tuple(circles)


def _require_P_for_orthocenter_family(T, P):
    if is_vertex(P):
        raise GeometryError("P must differ from the vertices")
    if not P.is_finite:
        raise GeometryError("P must be finite")


def check_lemma8(T: TriangleMetric, P: HPoint) -> CheckReport:
    _require_P_for_orthocenter_family(T, P)
    rep = CheckReport("lemma8", T.backend, {"triangle": T, "P": P})
    H = named_center(T, CenterId.H)
    if P == H:
        rep.degenerate = "P = H: every chord through H"
        return rep
    circles = lemma8_circles(T, P)
    O = circumcircle(T)
    rep.check("circles_through_vertex_and_P",
              all(c.contains(P) and c.contains(VERTICES[i]) for i, c in enumerate(circles)))
    rep.check("circles_through_altitude_feet",
              all(c.contains(altitude_foot(T, i)) for i, c in enumerate(circles)))
    half = power(O, H) / 2
    rep.check("power_of_H_is_half_circumcircle_power",
              all(is_zero(power(c, H) - half, max(1.0, abs(float(half)))) for c in circles if not c.is_line))
    pv = coaxal(*circles)
    rep.check("coaxal", pv.coaxal)
    rep.check("axis_is_PH", pv.common_radical_axis is not None and pv.common_radical_axis == join(P, H))
    rep.witnesses["axis"] = pv.common_radical_axis
    return rep


def lemma9_points(T: TriangleMetric, P: HPoint):
    circles = lemma8_circles(T, P)
    pts = []
    for i, c in enumerate(circles):
        side = SIDELINES[i]
        if c.is_line:
            pts.append(HPoint(*cross(side.coords, LINE_AT_INFINITY.coords)))
        else:
            pts.append(conic_line_second_intersection(c, side, altitude_foot(T, i)))
    return tuple(pts)


def check_lemma9(T: TriangleMetric, P: HPoint) -> CheckReport:
    _require_P_for_orthocenter_family(T, P)
    rep = CheckReport("lemma9", T.backend, {"triangle": T, "P": P})
    if P == named_center(T, CenterId.H):
        rep.degenerate = "P = H"
        return rep
    pts = lemma9_points(T, P)
    rep.witnesses["O_abc"] = pts
    col = rep.check("points_collinear", collinear(*pts))
    if col:
        distinct = [(i, j) for i in range(3) for j in range(i + 1, 3) if not pts[i] == pts[j]]
        line = join(pts[distinct[0][0]], pts[distinct[0][1]])
        rep.check("line_is_orthotransversal", line == orthotransversal(T, P))
        if P == named_center(T, CenterId.I):
            rep.check("line_is_tripolar_of_X57", line == tripolar(named_center(T, CenterId.X57)))
    return rep


def theorem7_circles(T: TriangleMetric, P: HPoint):
    pts = orthotransversal_points(T, P)
    circles = []
    for i, c in enumerate(pts):
        if not c.is_finite:
            raise DegenerateSample("orthotransversal point at infinity")
        cxy = to_cartesian(T, c)
        circles.append(circle_from_center(T, cxy, (T.vertices[i] - cxy).norm2()))
    return pts, tuple(circles)


def check_theorem7(T: TriangleMetric, P: HPoint) -> CheckReport:
    if T.is_equilateral():
        raise GeometryError("equilateral: Euler line undefined")
    _require_P_for_orthocenter_family(T, P)
    if P == named_center(T, CenterId.H):
        raise GeometryError("P must differ from the orthocenter")
    rep = CheckReport("theorem7", T.backend, {"triangle": T, "P": P})
    try:
        pts, circles = theorem7_circles(T, P)
    except DegenerateSample as e:
        rep.degenerate = str(e)
        return rep
    on = on_euler_line(T, P)
    O = named_center(T, CenterId.O)
    pv = coaxal(*circles)
    claim = pv.coaxal and _axis_contains(pv, O)
    rep.witnesses.update(on_euler_line=on, coaxal=pv.coaxal, axis=pv.common_radical_axis,
                         minors=pv.witness_minors, O_abc=pts)
    rep.check("coaxal_with_O_iff_on_euler_line", claim == on)
    rep.check("circles_through_vertex_reflections",
              all(c.contains(reflect_in_line(T, VERTICES[i], SIDELINES[i])) for i, c in enumerate(circles)))
    return rep


# --- theorem10: general P, closed forms --------------------------------------------------

def delta_determinant(T: TriangleMetric, P: HPoint, Q: HPoint):
    p, q, r = P
    u, v, w = Q
    a2, b2, c2 = T.sq
    return det3((a2 * q * r, b2 * r * p, c2 * p * q),
                (a2 * v * w, b2 * w * u, c2 * u * v),
                (q + r, r + p, p + q))


def _cevian_line_guards(P, Q):
    p, q, r = P
    u, v, w = Q
    return (w * q - v * r, u * r - w * p, v * p - u * q)


def theorem10_t(T: TriangleMetric, P: HPoint, Q: HPoint, i: int = 0):
    """Pencil coefficient t of circle i in a^2yz + ... + t (wy - vz)(x + y + z) = 0."""
    p, q, r = _rot(P.coords, i)
    u, v, w = _rot(Q.coords, i)
    a2 = _rot(T.sq, i)[0]
    den = (q + r) * (w * q - v * r)
    if is_zero(den, _maxabs(P.coords) ** 2 * _maxabs(Q.coords)):
        raise GeometryError("degenerate: Q on cevian line of P")
    return -a2 * q * r / den


def theorem10_circle(T: TriangleMetric, P: HPoint, Q: HPoint, i: int = 0) -> Circle:
    t = theorem10_t(T, P, Q, i)
    u, v, w = _rot(Q.coords, i)
    return Circle(T, _unrot((t - t, t * w, -t * v), i))


def _rbc_coeffs(T, P, Q, i):
    p, q, r = _rot(P.coords, i)
    u, v, w = _rot(Q.coords, i)
    a2, b2, c2 = _rot(T.sq, i)
    d1 = (p + q) * (v * p - u * q)
    d2 = (r + p) * (u * r - w * p)
    scale = _maxabs(P.coords) ** 2 * _maxabs(Q.coords)
    if is_zero(d1, scale) or is_zero(d2, scale):
        raise GeometryError("degenerate: Q on cevian line of P")
    e1 = c2 * q / d1
    e2 = b2 * r / d2
    # e1 (v x - u y) - e2 (u z - w x)
    return _unrot((e1 * v + e2 * w, -e1 * u, -e2 * u), i)


def radical_axis_rBC(T: TriangleMetric, P: HPoint, Q: HPoint, i: int = 0) -> HLine:
    """Closed-form radical axis of circles (BYB'), (CZC'); i rotates to r_CA, r_AB."""
    return HLine(*_rbc_coeffs(T, P, Q, i))


def rBC_value(T: TriangleMetric, P: HPoint, Q: HPoint, point: HPoint, i: int = 0):
    return sum(c * x for c, x in zip(_rbc_coeffs(T, P, Q, i), point))


def theorem10_R(T: TriangleMetric, P: HPoint) -> HPoint:
    """Isogonal conjugate of the complement, (a^2/(q+r) : b^2/(r+p) : c^2/(p+q))."""
    return isogonal_conjugate(T, complement(P))


def theorem10_R_representative(T: TriangleMetric, P: HPoint) -> HPoint:
    p, q, r = P
    a2, b2, c2 = T.sq
    return HPoint(a2 / (q + r), b2 / (r + p), c2 / (p + q))


def theorem10_conic(T: TriangleMetric, P: HPoint):
    """(conic K, vertex index or None). With a vertex index, K is the line through it, P and R."""
    line = join(isogonal_conjugate(T, P), complement(P))
    zero = [i for i in range(3) if is_zero(line[i], _maxabs(line.coords))]
    K = circumconic_from_line(T, line)
    return K, (zero[0] if zero else None), line


def degenerate_theorem10_P(T: TriangleMetric, p, q, i: int = 0) -> HPoint:
    """P with the line P*P_C through vertex i: solves b^2 r (p+q) = c^2 q (r+p) for r."""
    a2, b2, c2 = _rot(T.sq, i)
    p, q = Fraction(p) if isinstance(p, int) else p, Fraction(q) if isinstance(q, int) else q
    den = b2 * p + (b2 - c2) * q
    if is_zero(den, T.scale):
        raise DegenerateSample("no finite solution for this (p, q)")
    r = c2 * p * q / den
    return HPoint(*_unrot((p, q, r), i))


def check_theorem10(T: TriangleMetric, P: HPoint, Q: HPoint) -> CheckReport:
    _require_nonequilateral(T)
    H = named_center(T, CenterId.H)
    if is_vertex(P) or is_vertex(Q):
        raise GeometryError("P and Q must differ from the vertices")
    if P == H:
        return check_pH_remark(T, Q)
    if on_sideline(P):
        raise GeometryError("P on a sideline has a degenerate cevian triangle")
    rep = CheckReport("theorem10", T.backend, {"triangle": T, "P": P, "Q": Q})
    Pc = complement(P)
    if on_sideline(Pc):
        rep.degenerate = "complement of P on a sideline"
        return rep
    R = theorem10_R(T, P)
    K, vertex, line = theorem10_conic(T, P)
    rep.witnesses.update(R=R, conic=K, line_PstarPc=line)
    if vertex is not None:
        apr = join(VERTICES[vertex], P)
        rep.witnesses["line_APR"] = apr
        rep.check("R_on_line_APR", apr.contains(R))
        on = apr.contains(Q)
    else:
        rep.check("P_on_K", on_conic(K, P))
        rep.check("R_on_K", on_conic(K, R))
        on = on_conic(K, Q)
    rep.witnesses["on_K"] = on
    try:
        _, _, circles = generalized_apollonius_circles(T, P, Q)
    except DegenerateSample as e:
        rep.degenerate = str(e)
        return rep
    pv = coaxal(*circles)
    claim = pv.coaxal and _axis_contains(pv, R)
    rep.witnesses.update(coaxal=pv.coaxal, axis=pv.common_radical_axis, minors=pv.witness_minors)
    rep.check("coaxal_with_R_iff_on_K", claim == on)
    if pv.coaxal and pv.common_radical_axis is not None:
        axis = pv.common_radical_axis
        rep.check("R_on_axis", axis.contains(R))
        if not Q == R:
            rep.check("axis_is_QR", axis == join(Q, R))
        elif vertex is None:
            rep.check("axis_tangent_to_K_at_R", axis == polar(K, R))
    delta = delta_determinant(T, P, Q)
    rep.witnesses["delta"] = delta
    dscale = (T.scale * _maxabs(P.coords) ** 2 * _maxabs(Q.coords) ** 2) * _maxabs(P.coords)
    if vertex is None:
        rep.check("delta_zero_iff_on_K", is_zero(delta, dscale) == on)
    guards = _cevian_line_guards(P, Q)
    if any(is_zero(g, _maxabs(P.coords) * _maxabs(Q.coords)) for g in guards):
        rep.witnesses["Q_on_cevian_line_of_P"] = True
        return rep
    rep.check("closed_form_circles_match",
              all(theorem10_circle(T, P, Q, i) == circles[i] for i in range(3)))
    rep.check("closed_form_radical_axes_match",
              all(radical_axis_rBC(T, P, Q, i) == radical_axis(circles[(i + 1) % 3], circles[(i + 2) % 3])
                  for i in range(3)))
    rep.check("Q_on_closed_form_axes", all(radical_axis_rBC(T, P, Q, i).contains(Q) for i in range(3)))
    p, q, r = P
    u, v, w = Q
    Rrep = theorem10_R_representative(T, P)
    # r_BC(R) (q+r)(r+p)(p+q)(vp-uq)(ur-wp) = -delta, so r_BC(R) = 0 exactly when delta = 0
    expected = -delta / ((q + r) * (r + p) * (p + q) * (v * p - u * q) * (u * r - w * p))
    got = rBC_value(T, P, Q, Rrep)
    rep.witnesses["rBC_at_R"] = got
    # float cancellation is relative to the summands, not to their (possibly zero) total
    terms = sum(abs(float(c * x)) for c, x in zip(_rbc_coeffs(T, P, Q, 0), Rrep))
    rep.check("rBC_at_R_proportional_to_delta",
              is_zero(got - expected, max(1.0, abs(float(expected)), terms)))
    return rep


def check_pH_remark(T: TriangleMetric, Q: HPoint) -> CheckReport:
    _require_nonequilateral(T)
    H = named_center(T, CenterId.H)
    if on_sideline(H):
        raise GeometryError("orthocenter on a sideline (right triangle)")
    if is_vertex(Q):
        raise GeometryError("Q must differ from the vertices")
    rep = CheckReport("p-equals-h", T.backend, {"triangle": T, "Q": Q})
    try:
        _, _, circles = generalized_apollonius_circles(T, H, Q)
    except DegenerateSample as e:
        rep.degenerate = str(e)
        return rep
    pv = coaxal(*circles)
    rep.check("coaxal", pv.coaxal)
    if Q == H:
        rep.check("concurrent_altitudes", pv.axis_undefined)
        return rep
    rep.check("axis_is_QH", pv.common_radical_axis is not None and pv.common_radical_axis == join(Q, H))
    O = circumcircle(T)
    half = power(O, H) / 2
    rep.check("power_of_H_is_half_circumcircle_power",
              all(is_zero(power(c, H) - half, max(1.0, abs(float(half)))) for c in circles if not c.is_line))
    rep.witnesses["axis"] = pv.common_radical_axis
    return rep


# --- samplers ----------------------------------------------------------------------------

def random_point(rng: random.Random, lo: int = -9, hi: int = 9, avoid=()) -> HPoint:
    """Random integer point off the sidelines, with finite point and cevian traces."""
    while True:
        c = [rng.randint(lo, hi) for _ in range(3)]
        if 0 in c or sum(c) == 0 or any(c[i] + c[(i + 1) % 3] == 0 for i in range(3)):
            continue
        p = HPoint(*c)
        if any(p == a for a in avoid):
            continue
        return p


def sample_on_circumconic(rng: random.Random, K: Conic, avoid=(), known: HPoint = VERTICES[0]) -> HPoint:
    """Exact on-conic sample: second intersection of a random line through a known point."""
    while True:
        m = random_point(rng)
        if m == known:
            continue
        try:
            q = conic_line_second_intersection(K, join(known, m), known)
        except GeometryError:
            continue
        if is_vertex(q) or on_sideline(q) or not q.is_finite or any(q == a for a in avoid):
            continue
        return q


def sample_off_conic(rng: random.Random, K: Conic, avoid=()) -> HPoint:
    while True:
        q = random_point(rng, avoid=avoid)
        if not on_conic(K, q):
            return q


def sample_on_euler_line(rng: random.Random, T: TriangleMetric, avoid=()) -> HPoint:
    if T.is_equilateral():
        raise GeometryError("equilateral: Euler line undefined")
    O, H = named_center(T, CenterId.O), named_center(T, CenterId.H)
    no, nh = normalize(O), normalize(H)
    while True:
        t = Fraction(rng.randint(-12, 12), rng.randint(1, 7))
        p = HPoint(*((1 - t) * x + t * y for x, y in zip(no, nh)))
        if t == 1 or is_vertex(p) or on_sideline(p) or any(p == a for a in avoid):
            continue
        return p


def sample_off_euler_line(rng: random.Random, T: TriangleMetric, avoid=()) -> HPoint:
    while True:
        p = random_point(rng, avoid=avoid)
        if not on_euler_line(T, p):
            return p
