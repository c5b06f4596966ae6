"""SVG figures of the main configurations.

Geometry is computed with the triangle's own backend and only converted to
floats for drawing. Output is byte-stable: coordinates are written with a
fixed number of decimals and elements in construction order.
"""
from __future__ import annotations

import math
import random
import xml.etree.ElementTree as ET

from . import theorem_suite as ts
from .bary_core import (SIDELINES, VERTICES, CartesianPoint, GeometryError, HLine, HPoint, TriangleMetric, join,
                        line_affine, to_cartesian)
from .centers import CenterId, named_center
from .circles_conics import Circle, Conic, circumcircle, radical_axis
from .constructions import (cevian_triangle, derived_triangle, euler_line, incircle,
                            incircle_inversion, midpoint)

FIGURE_IDS = ("theorem5", "lemma6", "inversion", "theorem7", "theorem10")
WIDTH = 800
CONIC_SAMPLES = 256
PALETTE = ("#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e")


def _f(x) -> str:
    return f"{float(x):.3f}"


class Canvas:
    """World-to-screen mapping fitted to the triangle's bounding box plus a 10% margin."""

    def __init__(self, T: TriangleMetric, title: str):
        xs = [float(v.x) for v in T.vertices]
        ys = [float(v.y) for v in T.vertices]
        w, h = max(xs) - min(xs), max(ys) - min(ys)
        span = max(w, h)
        self.x0 = min(xs) - 0.1 * span
        self.y1 = max(ys) + 0.1 * span
        self.world_w = w + 0.2 * span
        self.world_h = h + 0.2 * span
        self.scale = WIDTH / self.world_w
        self.height = self.world_h * self.scale
        self.root = ET.Element("svg", {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": str(WIDTH), "height": _f(self.height),
            "viewBox": f"0 0 {WIDTH} {_f(self.height)}",
        })
        ET.SubElement(self.root, "title").text = title
        ET.SubElement(self.root, "rect", {"width": "100%", "height": "100%", "fill": "white"})

    def xy(self, p) -> tuple[float, float]:
        if isinstance(p, CartesianPoint):
            p = (p.x, p.y)
        return ((float(p[0]) - self.x0) * self.scale, (self.y1 - float(p[1])) * self.scale)

    def group(self, cls: str):
        return ET.SubElement(self.root, "g", {"class": cls})

    def polygon(self, pts, cls="triangle", stroke="black"):
        coords = " ".join(f"{_f(x)},{_f(y)}" for x, y in (self.xy(p) for p in pts))
        ET.SubElement(self.group(cls), "polygon", {"points": coords, "fill": "none",
                                                   "stroke": stroke, "stroke-width": "1.5"})

    def circle(self, C: Circle, cls="circle", stroke="#2471a3"):
        if C.is_line:
            self.line(C.line, C.metric, cls, stroke)
            return
        c = C.center_xy
        r = math.sqrt(max(float(C.radius2), 0.0))
        x, y = self.xy((c.x, c.y))
        ET.SubElement(self.group(cls), "circle", {"cx": _f(x), "cy": _f(y), "r": _f(r * self.scale),
                                                  "fill": "none", "stroke": stroke})

    def line(self, l: HLine, T: TriangleMetric, cls="line", stroke="#555555"):
        """Infinite line clipped to the viewport."""
        gx, gy, g0 = (float(v) for v in line_affine(T, l))
        xa, xb = self.x0, self.x0 + self.world_w
        ya, yb = self.y1 - self.world_h, self.y1
        pts = []
        if abs(gy) > 1e-15:
            for x in (xa, xb):
                y = -(gx * x + g0) / gy
                if ya - 1e-9 <= y <= yb + 1e-9:
                    pts.append((x, y))
        if abs(gx) > 1e-15:
            for y in (ya, yb):
                x = -(gy * y + g0) / gx
                if xa - 1e-9 <= x <= xb + 1e-9:
                    pts.append((x, y))
        if len(pts) < 2:
            return
        (x1, y1), (x2, y2) = self.xy(pts[0]), self.xy(pts[-1])
        ET.SubElement(self.group(cls), "line", {"x1": _f(x1), "y1": _f(y1), "x2": _f(x2), "y2": _f(y2),
                                                "stroke": stroke, "stroke-dasharray": "4 3"})

    def conic(self, T: TriangleMetric, K: Conic, cls="conic", stroke="#7d3c98"):
        """Polyline through the pencil of lines at A, split where the curve leaves the view."""
        lam, mu, nu = (float(c) for c in K.coeffs)
        verts = [(float(v.x), float(v.y)) for v in T.vertices]
        runs, run = [], []
        for k in range(CONIC_SAMPLES + 1):
            theta = math.pi * k / CONIC_SAMPLES
            d = (0.0, math.cos(theta), math.sin(theta))
            # second intersection with the conic of line A + s d: x = 1, y = s d1, z = s d2
            den = nu * d[1] * d[2]
            if abs(den) < 1e-15:
                run and runs.append(run)
                run = []
                continue
            s = -(mu * d[2] + lam * d[1]) / den
            x, y, z = 1.0, s * d[1], s * d[2]
            tot = x + y + z
            if abs(tot) < 1e-12:
                run and runs.append(run)
                run = []
                continue
            px = sum(w * v[0] for w, v in zip((x, y, z), verts)) / tot
            py = sum(w * v[1] for w, v in zip((x, y, z), verts)) / tot
            inside = (self.x0 - self.world_w <= px <= self.x0 + 2 * self.world_w
                      and self.y1 - 2 * self.world_h <= py <= self.y1 + self.world_h)
            if not inside:
                run and runs.append(run)
                run = []
                continue
            run.append(self.xy((px, py)))
        if run:
            runs.append(run)
        g = self.group(cls)
        for r in runs:
            if len(r) > 1:
                ET.SubElement(g, "polyline", {"points": " ".join(f"{_f(x)},{_f(y)}" for x, y in r),
                                              "fill": "none", "stroke": stroke})

    def point(self, T: TriangleMetric, p: HPoint, label: str, cls="point"):
        if not p.is_finite:
            return
        c = to_cartesian(T, p)
        x, y = self.xy((c.x, c.y))
        g = self.group(cls)
        ET.SubElement(g, "circle", {"cx": _f(x), "cy": _f(y), "r": "3", "fill": "black"})
        ET.SubElement(g, "text", {"x": _f(x + 5), "y": _f(y - 5), "font-size": "12",
                                  "font-family": "sans-serif"}).text = label

    def tostring(self) -> str:
        ET.indent(self.root)
        return ET.tostring(self.root, encoding="unicode") + "\n"


def _base(T: TriangleMetric, title: str) -> Canvas:
    cv = Canvas(T, title)
    cv.polygon(T.vertices)
    for v, name in zip(VERTICES, "ABC"):
        cv.point(T, v, name, "vertex")
    return cv


def figure_theorem5(T: TriangleMetric, Q: HPoint | None = None) -> str:
    Q = Q if Q is not None else named_center(T, CenterId.K)
    cv = _base(T, "coaxal circles for Q on the incenter-centroid circumconic")
    cv.circle(circumcircle(T), "circumcircle", "#999999")
    cv.conic(T, ts.incenter_centroid_conic(T))
    I = named_center(T, CenterId.I)
    _, primes, circles = ts.generalized_apollonius_circles(T, I, Q)
    for C, col in zip(circles, PALETTE):
        cv.circle(C, "pencil-circle", col)
    try:
        cv.line(radical_axis(circles[0], circles[1]), T, "radical-axis")
    except GeometryError:
        pass
    for p, name in zip(primes, ("A'", "B'", "C'")):
        cv.point(T, p, name)
    cv.point(T, I, "I")
    cv.point(T, Q, "Q")
    cv.point(T, named_center(T, CenterId.X58), "X58")
    return cv.tostring()


def figure_lemma6(T: TriangleMetric) -> str:
    cv = _base(T, "radical centers on the orthotransversal of the incenter")
    cv.circle(circumcircle(T), "circumcircle", "#999999")
    I = named_center(T, CenterId.I)
    X56 = named_center(T, CenterId.X56)
    _, _, circles = ts.generalized_apollonius_circles(T, I, X56)
    for C, col in zip(circles, PALETTE):
        cv.circle(C, "pencil-circle", col)
    rep = ts.check_lemma6(T)
    pts = rep.witnesses["lemma6_UVW"]
    cv.line(join(pts[0], pts[1]), T, "orthotransversal")
    for p, name in zip(pts, "UVW"):
        cv.point(T, p, name)
    cv.point(T, I, "I")
    cv.point(T, X56, "X56")
    return cv.tostring()


def figure_inversion(T: TriangleMetric) -> str:
    cv = _base(T, "inversion in the incircle")
    psi = incircle_inversion(T)
    cv.circle(incircle(T), "incircle", "#1e8449")
    O = circumcircle(T)
    cv.circle(O, "circumcircle", "#999999")
    cv.circle(psi.circle(O), "circumcircle-image", "#c0392b")
    for l, col in zip(SIDELINES, PALETTE):
        cv.circle(psi.line(l), "sideline-image", col)
    contact = [named_center(T, c) for c in (CenterId.D, CenterId.E, CenterId.F)]
    A1 = [midpoint(contact[(i + 1) % 3], contact[(i + 2) % 3]) for i in range(3)]
    cv.polygon([to_cartesian(T, p) for p in A1], "inverted-triangle", "#c0392b")
    for p, name in zip(A1, ("A1", "B1", "C1")):
        cv.point(T, p, name)
    cv.point(T, named_center(T, CenterId.I), "I")
    try:
        cv.line(euler_line(derived_triangle(T, *A1)), T, "inverted-euler-line")
    except GeometryError:
        pass
    return cv.tostring()


def figure_theorem7(T: TriangleMetric, P: HPoint | None = None) -> str:
    P = P if P is not None else named_center(T, CenterId.G)
    cv = _base(T, "circles centered on the orthotransversal points")
    pts, circles = ts.theorem7_circles(T, P)
    for C, col in zip(circles, PALETTE):
        cv.circle(C, "pencil-circle", col)
    cv.line(euler_line(T), T, "euler-line")
    for p, name in zip(pts, ("Oa", "Ob", "Oc")):
        cv.point(T, p, name)
    cv.point(T, P, "P")
    cv.point(T, named_center(T, CenterId.O), "O")
    cv.point(T, named_center(T, CenterId.H), "H")
    return cv.tostring()


def figure_theorem10(T: TriangleMetric, P: HPoint, Q: HPoint) -> str:
    cv = _base(T, "coaxal circles for Q on the circumconic K")
    cv.circle(circumcircle(T), "circumcircle", "#999999")
    K, vertex, _ = ts.theorem10_conic(T, P)
    if vertex is None:
        cv.conic(T, K)
    else:
        cv.line(join(VERTICES[vertex], P), T, "degenerate-conic")
    _, _, circles = ts.generalized_apollonius_circles(T, P, Q)
    for C, col in zip(circles, PALETTE):
        cv.circle(C, "pencil-circle", col)
    for p, name in zip(cevian_triangle(P), "XYZ"):
        cv.point(T, p, name)
    cv.point(T, P, "P")
    cv.point(T, Q, "Q")
    cv.point(T, ts.theorem10_R(T, P), "R")
    return cv.tostring()


def render(figure_id: str, T: TriangleMetric, P: HPoint | None = None, Q: HPoint | None = None) -> str:
    if figure_id == "theorem5":
        return figure_theorem5(T, Q)
    if figure_id == "lemma6":
        return figure_lemma6(T)
    if figure_id == "inversion":
        return figure_inversion(T)
    if figure_id == "theorem7":
        return figure_theorem7(T, P)
    if figure_id == "theorem10":
        if P is None:
            P = HPoint(7, 3, 5)
        if Q is None:
            K, _, _ = ts.theorem10_conic(T, P)
            Q = ts.sample_on_circumconic(random.Random(0), K, avoid=(P,))
        return figure_theorem10(T, P, Q)
    raise KeyError(figure_id)
