"""Cevian and circumcevian triangles, bisector feet, Apollonius circles,
orthotransversals, inversion, derived triangles and Euler lines.

Metric steps (perpendiculars, reflections, inversion) run in the Cartesian
embedding of the triangle and are mapped back to barycentrics, so they stay
exact whenever the embedding is rational.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .bary_core import (LINE_AT_INFINITY, SIDELINES, VERTICES, CartesianPoint, GeometryError,
                        HLine, HPoint, TriangleMetric, collinear, cross, from_cartesian,
                        inverse3, is_vertex, is_zero, join, line_affine, line_from_affine,
                        mat_vec, normalize, on_sideline, to_cartesian, transpose)
from .centers import CenterId, named_center, tripole
from .circles_conics import Circle, circle_from_cartesian


class CevianTriple(NamedTuple):
    X: HPoint
    Y: HPoint
    Z: HPoint


def cevian_triangle(p: HPoint) -> CevianTriple:
    if on_sideline(p):
        raise GeometryError("trace degenerates to vertex")
    x, y, z = p
    zero = x - x
    return CevianTriple(HPoint(zero, y, z), HPoint(x, zero, z), HPoint(x, y, zero))


def circumcevian_triangle(T: TriangleMetric, q: HPoint):
    """Second intersections of AQ, BQ, CQ with the circumcircle."""
    if is_vertex(q):
        raise GeometryError("circumcevian triangle undefined at a vertex")
    u, v, w = q
    a2, b2, c2 = T.sq
    ka = b2 * w + c2 * v
    kb = c2 * u + a2 * w
    kc = a2 * v + b2 * u
    return (HPoint(-a2 * v * w, v * ka, w * ka),
            HPoint(u * kb, -b2 * w * u, w * kb),
            HPoint(u * kc, v * kc, -c2 * u * v))


def bisector_feet(T: TriangleMetric):
    """Internal feet (0:b:c), ... and external feet (0:b:-c), ...

    An external foot of an isosceles pair is returned as a point at infinity.
    """
    a, b, c = T.sides
    zero = a - a
    internal = CevianTriple(HPoint(zero, b, c), HPoint(a, zero, c), HPoint(a, b, zero))
    external = CevianTriple(HPoint(zero, b, -c), HPoint(-a, zero, c), HPoint(a, -b, zero))
    return internal, external


def apollonius_circle(T: TriangleMetric, vertex_index: int) -> Circle:
    """Locus of points whose distances to the other two vertices have the ratio of
    the adjacent sides, e.g. |PB|/|PC| = c/b for vertex A.

    Built from squared distances only, so it stays exact for triangles whose
    side lengths are irrational but whose embedding is rational.
    """
    i = vertex_index
    V = T.vertices
    P1, P2 = V[(i + 1) % 3], V[(i + 2) % 3]
    # side opposite P1 is adjacent to the vertex and to P2, and vice versa
    s1 = T.sq[(i + 1) % 3]
    s2 = T.sq[(i + 2) % 3]
    # s1 |X - P1|^2 - s2 |X - P2|^2 = 0
    A = s1 - s2
    if is_zero(A, T.scale):
        raise GeometryError("Apollonius circle degenerates to a line")
    dx = -2 * (s1 * P1.x - s2 * P2.x)
    dy = -2 * (s1 * P1.y - s2 * P2.y)
    f = s1 * P1.norm2() - s2 * P2.norm2()
    return circle_from_cartesian(T, A, dx, dy, f)


def central_similarity(center: HPoint, k, p: HPoint) -> HPoint:
    """Image of ``p`` under the homothety with the given center and ratio."""
    c, q = normalize(center), normalize(p)
    return HPoint(*(ci + k * (qi - ci) for ci, qi in zip(c, q)))


# --- embedding-level helpers ---------------------------------------------

def perpendicular_through(T: TriangleMetric, point: CartesianPoint, normal: CartesianPoint) -> HLine:
    """Line through ``point`` with the given normal vector."""
    return line_from_affine(T, normal.x, normal.y, -normal.dot(point))


def foot_of_perpendicular(T: TriangleMetric, p: HPoint, l: HLine) -> HPoint:
    gx, gy, g0 = line_affine(T, l)
    P = to_cartesian(T, p)
    f = gx * P.x + gy * P.y + g0
    n2 = gx * gx + gy * gy
    return from_cartesian(T, P - CartesianPoint(gx, gy) * (f / n2))


def reflect_in_line(T: TriangleMetric, p: HPoint, l: HLine) -> HPoint:
    gx, gy, g0 = line_affine(T, l)
    P = to_cartesian(T, p)
    f = gx * P.x + gy * P.y + g0
    n2 = gx * gx + gy * gy
    return from_cartesian(T, P - CartesianPoint(gx, gy) * (2 * f / n2))


def parallel_through(l: HLine, p: HPoint) -> HLine:
    return join(p, HPoint(*cross(l.coords, LINE_AT_INFINITY.coords)))


def perpendicular_bisector(T: TriangleMetric, p: HPoint, q: HPoint) -> HLine:
    P, Q = to_cartesian(T, p), to_cartesian(T, q)
    return perpendicular_through(T, (P + Q) / 2, Q - P)


# --- orthotransversal -------------------------------------------------------

def orthotransversal_points(T: TriangleMetric, p: HPoint):
    """Where the perpendiculars to AP, BP, CP at P meet BC, CA, AB."""
    if is_vertex(p):
        raise GeometryError("orthotransversal undefined at a vertex")
    P = to_cartesian(T, p)
    pts = []
    for i, V in enumerate(T.vertices):
        perp = perpendicular_through(T, P, V - P)
        side = SIDELINES[i]
        # no distinctness check: for P = H the feet are points at infinity
        pts.append(HPoint(*cross(perp.coords, side.coords)))
    return tuple(pts)


def orthotransversal(T: TriangleMetric, p: HPoint) -> HLine:
    pts = orthotransversal_points(T, p)
    if not collinear(*pts):
        raise GeometryError("orthotransversal points are not collinear")
    for i in range(3):
        for j in range(i + 1, 3):
            if not pts[i] == pts[j]:
                return join(pts[i], pts[j])
    raise GeometryError("orthotransversal points coincide")


def orthocorrespondent(T: TriangleMetric, p: HPoint) -> HPoint:
    return tripole(orthotransversal(T, p))


# --- inversion ---------------------------------------------------------------

def invert_point(center: CartesianPoint, pow, p: CartesianPoint) -> CartesianPoint:
    d = p - center
    n2 = d.norm2()
    if is_zero(n2, max(1.0, abs(float(pow)))):
        raise GeometryError("cannot invert the inversion center")
    return center + d * (pow / n2)


def invert_circle(T: TriangleMetric, center: CartesianPoint, pow, C: Circle) -> Circle:
    """Image of a circle or line; lines through the center map to themselves."""
    A, dx, dy, f = C.cartesian()
    D = CartesianPoint(dx, dy)
    # translate so the center is the origin, then (A, D, F) -> (F, pow D, A pow^2)
    D1 = D + center * (2 * A)
    F1 = A * center.norm2() + D.dot(center) + f
    A2, D2, F2 = F1, D1 * pow, A * pow * pow
    # translate back
    Dn = D2 - center * (2 * A2)
    Fn = A2 * center.norm2() - D2.dot(center) + F2
    return circle_from_cartesian(T, A2, Dn.x, Dn.y, Fn)


@dataclass(frozen=True)
class Inversion:
    metric: TriangleMetric
    center: CartesianPoint
    power: object

    def point(self, p: HPoint) -> HPoint:
        T = self.metric
        return from_cartesian(T, invert_point(self.center, self.power, to_cartesian(T, p)))

    def circle(self, C: Circle) -> Circle:
        return invert_circle(self.metric, self.center, self.power, C)

    def line(self, l: HLine) -> Circle:
        return self.circle(Circle.from_line(self.metric, l))


def incircle_inversion(T: TriangleMetric) -> Inversion:
    I = to_cartesian(T, named_center(T, CenterId.I))
    return Inversion(T, I, T.r * T.r)


# --- derived triangles ---------------------------------------------------------

@dataclass(frozen=True)
class DerivedTriangle:
    """A triangle built from reference points, sharing the reference embedding.

    ``metric`` keeps the derived vertices at their reference Cartesian
    positions, so circles move between the two frames through their Cartesian
    coefficients and points through a fixed linear map.
    """

    parent: TriangleMetric
    vertices: tuple
    metric: TriangleMetric

    @property
    def _matrix(self):
        cols = [normalize(v).coords for v in self.vertices]
        return tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))

    def to_reference(self, p: HPoint) -> HPoint:
        return HPoint(*mat_vec(self._matrix, p.coords))

    def from_reference(self, p: HPoint) -> HPoint:
        return HPoint(*mat_vec(inverse3(self._matrix), p.coords))

    def line_to_reference(self, l: HLine) -> HLine:
        return HLine(*mat_vec(transpose(inverse3(self._matrix)), l.coords))

    def line_from_reference(self, l: HLine) -> HLine:
        return HLine(*mat_vec(transpose(self._matrix), l.coords))

    def circle_to_reference(self, C: Circle) -> Circle:
        return circle_from_cartesian(self.parent, *C.cartesian())

    def circle_from_reference(self, C: Circle) -> Circle:
        return circle_from_cartesian(self.metric, *C.cartesian())

    @property
    def backend(self) -> str:
        return self.metric.sq_backend


def derived_triangle(T: TriangleMetric, p1: HPoint, p2: HPoint, p3: HPoint) -> DerivedTriangle:
    if collinear(p1, p2, p3):
        raise GeometryError("derived triangle vertices are collinear")
    pts = tuple(to_cartesian(T, p) for p in (p1, p2, p3))
    return DerivedTriangle(T, (p1, p2, p3), TriangleMetric.from_vertices(*pts))


def as_derived(T) -> DerivedTriangle:
    if isinstance(T, DerivedTriangle):
        return T
    return DerivedTriangle(T, VERTICES, T)


def euler_line(DT) -> HLine:
    """Line through circumcenter and orthocenter, in reference coordinates."""
    DT = as_derived(DT)
    M = DT.metric
    if M.is_equilateral():
        raise GeometryError("Euler line undefined")
    O = named_center(M, CenterId.O)
    H = named_center(M, CenterId.H)
    return DT.line_to_reference(join(O, H))


def derived_center(DT: DerivedTriangle, cid) -> HPoint:
    """A named center of the derived triangle, in reference coordinates."""
    return DT.to_reference(named_center(DT.metric, cid))


def incircle(T: TriangleMetric) -> Circle:
    I = to_cartesian(T, named_center(T, CenterId.I))
    r = T.r
    return circle_from_cartesian(T, 1, -2 * I.x, -2 * I.y, I.norm2() - r * r)


def midpoint(p: HPoint, q: HPoint) -> HPoint:
    a, b = normalize(p), normalize(q)
    return HPoint(*((x + y) / 2 for x, y in zip(a, b)))


def altitude_foot(T: TriangleMetric, i: int) -> HPoint:
    return foot_of_perpendicular(T, VERTICES[i], SIDELINES[i])

