"""Named triangle centers, conjugations, and the one-parameter family Q(k), Q*(k)."""
from __future__ import annotations

from enum import Enum

from .bary_core import (GeometryError, HLine, HPoint, TriangleMetric, as_scalar,
                        collinear, is_vertex, on_sideline)


class CenterId(str, Enum):
    I = "I"
    G = "G"
    O = "O"
    H = "H"
    K = "K"
    NinePoint = "N"
    Nagel = "Nagel"
    Spieker = "Spieker"
    X56 = "X56"
    X57 = "X57"
    X58 = "X58"
    Ia = "Ia"
    Ib = "Ib"
    Ic = "Ic"
    D = "D"
    E = "E"
    F = "F"
    Mprime = "Mprime"
    Nprime = "Nprime"
    Pprime = "Pprime"


def _cyclic(f, T):
    """Build (f(a,b,c) : f(b,c,a) : f(c,a,b)) from a first-coordinate rule."""
    a, b, c = T.sides
    return HPoint(f(a, b, c), f(b, c, a), f(c, a, b))


def _cyclic_sq(f, T):
    a2, b2, c2 = T.sq
    return HPoint(f(a2, b2, c2), f(b2, c2, a2), f(c2, a2, b2))


def _contact_points(T):
    a, b, c = T.sides
    s = T.s
    return (HPoint(0, s - c, s - b), HPoint(s - c, 0, s - a), HPoint(s - b, s - a, 0))


_FORMULAS = {
    CenterId.I: lambda T: HPoint(*T.sides),
    CenterId.G: lambda T: HPoint(1, 1, 1),
    CenterId.K: lambda T: HPoint(*T.sq),
    CenterId.O: lambda T: _cyclic_sq(lambda a2, b2, c2: a2 * (b2 + c2 - a2), T),
    # (S_B S_C : S_C S_A : S_A S_B); stays finite for right triangles
    CenterId.H: lambda T: _cyclic_sq(lambda a2, b2, c2: (c2 + a2 - b2) * (a2 + b2 - c2), T),
    CenterId.NinePoint: lambda T: _cyclic_sq(lambda a2, b2, c2: a2 * (b2 + c2) - (b2 - c2) ** 2, T),
    CenterId.Nagel: lambda T: _cyclic(lambda a, b, c: b + c - a, T),
    CenterId.Spieker: lambda T: _cyclic(lambda a, b, c: b + c, T),
    CenterId.X56: lambda T: _cyclic(lambda a, b, c: a * a * (c + a - b) * (a + b - c), T),
    CenterId.X57: lambda T: _cyclic(lambda a, b, c: a * (c + a - b) * (a + b - c), T),
    CenterId.X58: lambda T: _cyclic(lambda a, b, c: a * a * (c + a) * (a + b), T),
    CenterId.Ia: lambda T: HPoint(-T.a, T.b, T.c),
    CenterId.Ib: lambda T: HPoint(T.a, -T.b, T.c),
    CenterId.Ic: lambda T: HPoint(T.a, T.b, -T.c),
    CenterId.D: lambda T: _contact_points(T)[0],
    CenterId.E: lambda T: _contact_points(T)[1],
    CenterId.F: lambda T: _contact_points(T)[2],
}


def named_center(T: TriangleMetric, cid: CenterId | str) -> HPoint:
    cid = CenterId(cid)
    if cid in (CenterId.Mprime, CenterId.Nprime, CenterId.Pprime):
        from .constructions import circumcevian_triangle
        arcs = circumcevian_triangle(T, named_center(T, CenterId.I))
        return arcs[(CenterId.Mprime, CenterId.Nprime, CenterId.Pprime).index(cid)]
    return _FORMULAS[cid](T)


def isogonal_conjugate(T: TriangleMetric, p: HPoint) -> HPoint:
    if is_vertex(p):
        raise GeometryError("isogonal conjugate undefined at vertex")
    x, y, z = p
    a2, b2, c2 = T.sq
    return HPoint(a2 * y * z, b2 * z * x, c2 * x * y)


def complement(p: HPoint) -> HPoint:
    if not p.is_finite:
        raise GeometryError("complement of a point at infinity")
    x, y, z = p
    return HPoint(y + z, z + x, x + y)


def anticomplement(p: HPoint) -> HPoint:
    x, y, z = p
    return HPoint(y + z - x, z + x - y, x + y - z)


def tripolar(p: HPoint) -> HLine:
    if on_sideline(p):
        raise GeometryError("tripolar undefined for points on a sideline")
    x, y, z = p
    return HLine(y * z, z * x, x * y)


def tripole(l: HLine) -> HPoint:
    if on_sideline(l):
        raise GeometryError("tripole undefined for a line through a vertex")
    x, y, z = l
    return HPoint(y * z, z * x, x * y)


class _Infinity:
    """Similarity coefficient k -> infinity; the family then sits at the incenter."""

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


def _lemma3_denominators(T, k):
    a, b, c = T.sides
    m = 2 * as_scalar(k) - 1
    return (b + c + m * a, c + a + m * b, a + b + m * c)


def lemma3_Qstar(T: TriangleMetric, k) -> HPoint:
    if k is INFINITY:
        return named_center(T, CenterId.I)
    return HPoint(*_lemma3_denominators(T, k))


def lemma3_Q(T: TriangleMetric, k) -> HPoint:
    """(a^2/d_a : b^2/d_b : c^2/d_c) with denominators cleared, so a zero d is harmless."""
    if k is INFINITY:
        return named_center(T, CenterId.I)
    da, db, dc = _lemma3_denominators(T, k)
    a2, b2, c2 = T.sq
    return HPoint(a2 * db * dc, b2 * dc * da, c2 * da * db)


def on_euler_line(T: TriangleMetric, p: HPoint) -> bool:
    if T.is_equilateral():
        raise GeometryError("equilateral: Euler line undefined")
    return collinear(p, named_center(T, CenterId.O), named_center(T, CenterId.H))


def is_named(T: TriangleMetric, p: HPoint, cid: CenterId | str) -> bool:
    return p == named_center(T, cid)

