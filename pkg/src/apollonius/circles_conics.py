"""Circles in circumcircle-normal form, radical axes, coaxal pencils and circumconics.

A circle bound to a reference triangle is

    k * (a^2 yz + b^2 zx + c^2 xy) + (x + y + z)(u x + v y + w z) = 0

with ``k = 1`` for a proper circle (or the circumcircle when u = v = w = 0) and
``k = 0`` for the degenerate member made of the line [u:v:w] and the line at
infinity. Coaxality is a rank condition on the 4-vectors (k, u, v, w).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .bary_core import (CartesianPoint, GeometryError, HLine, HPoint, TriangleMetric,
                        _maxabs, as_scalar, collinear, cross, det3, from_cartesian, is_zero, join,
                        line_from_affine, mat_vec, normalize, proportional)


class Circle:
    """Generalized circle of the pencil space over one ``TriangleMetric``."""

    __slots__ = ("metric", "k", "u", "v", "w")

    def __init__(self, metric: TriangleMetric, linepart, k=1):
        u, v, w = linepart
        k = as_scalar(k)
        if not is_zero(k, _maxabs((k, u, v, w))):
            u, v, w, k = u / k, v / k, w / k, k / k
        else:
            if u == 0 and v == 0 and w == 0:
                raise GeometryError("degenerate circle with empty line part")
            k = k - k
        object.__setattr__(self, "metric", metric)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    def __setattr__(self, name, value):
        raise AttributeError("Circle is immutable")

    @classmethod
    def from_line(cls, metric: TriangleMetric, line: HLine) -> Circle:
        return cls(metric, tuple(line), k=0)

    @property
    def linepart(self):
        return (self.u, self.v, self.w)

    @property
    def vector(self):
        return (self.k, self.u, self.v, self.w)

    @property
    def is_line(self) -> bool:
        return self.k == 0

    @property
    def line(self) -> HLine:
        if not self.is_line:
            raise GeometryError("proper circle is not a line")
        return HLine(*self.linepart)

    def evaluate(self, p: HPoint):
        x, y, z = p
        a2, b2, c2 = self.metric.sq
        return (self.k * (a2 * y * z + b2 * z * x + c2 * x * y)
                + (x + y + z) * (self.u * x + self.v * y + self.w * z))

    def contains(self, p: HPoint) -> bool:
        scale = (abs(float(self.k)) * self.metric.scale + _maxabs(self.linepart)) * _maxabs(p.coords) ** 2
        return is_zero(self.evaluate(p), scale)

    def quadratic_form(self):
        a2, b2, c2 = self.metric.sq
        k, u, v, w = self.vector
        return ((u, (k * c2 + u + v) / 2, (k * b2 + u + w) / 2),
                ((k * c2 + u + v) / 2, v, (k * a2 + v + w) / 2),
                ((k * b2 + u + w) / 2, (k * a2 + v + w) / 2, w))

    def __eq__(self, other):
        if not isinstance(other, Circle):
            return NotImplemented
        if self.metric != other.metric:
            return False
        s, o = self.vector, other.vector
        scale = _maxabs(s) * _maxabs(o)
        return all(is_zero(s[i] * o[j] - s[j] * o[i], scale) for i in range(4) for j in range(i + 1, 4))

    __hash__ = None

    def __repr__(self):
        if self.is_line:
            return f"Circle(line={self.line!r})"
        return f"Circle(u={self.u}, v={self.v}, w={self.w})"

    # --- Cartesian view ---------------------------------------------------

    def cartesian(self):
        """Coefficients (A, Dx, Dy, F) of A(x^2+y^2) + Dx x + Dy y + F = 0, A in {0, 1}.

        For a proper circle the left side is the power of (x, y).
        """
        T = self.metric
        g = T.barycentric_affine
        lx, ly, l0 = (sum(self.linepart[i] * g[i][j] for i in range(3)) for j in range(3))
        if self.is_line:
            return (self.k, lx, ly, l0)
        O = T.circumcenter
        R2 = (T.A - O).norm2()
        return (self.k, -2 * O.x - lx, -2 * O.y - ly, O.norm2() - R2 - l0)

    @property
    def center_xy(self) -> CartesianPoint:
        if self.is_line:
            raise GeometryError("line has no center")
        _, dx, dy, _ = self.cartesian()
        return CartesianPoint(-dx / 2, -dy / 2)

    @property
    def radius2(self):
        _, _, _, f = self.cartesian()
        return self.center_xy.norm2() - f


def circle_from_cartesian(T: TriangleMetric, A, dx, dy, f) -> Circle:
    scale = max(abs(float(A)), _maxabs((dx, dy)), 1.0)
    if is_zero(A, scale):
        return Circle.from_line(T, line_from_affine(T, dx, dy, f))
    dx, dy, f = dx / A, dy / A, f / A
    pw = [V.norm2() + dx * V.x + dy * V.y + f for V in T.vertices]
    return Circle(T, tuple(-p for p in pw))


def circle_from_center(T: TriangleMetric, center: CartesianPoint, radius2) -> Circle:
    return circle_from_cartesian(T, 1, -2 * center.x, -2 * center.y, center.norm2() - radius2)


def circle_with_diameter(T: TriangleMetric, p: CartesianPoint, q: CartesianPoint) -> Circle:
    mid = (p + q) / 2
    return circle_from_center(T, mid, (p - mid).norm2())


def circumcircle(T: TriangleMetric) -> Circle:
    zero = T.a2 - T.a2
    return Circle(T, (zero, zero, zero))


def circle_through_3(T: TriangleMetric, p1: HPoint, p2: HPoint, p3: HPoint) -> Circle:
    """Circle through three finite points; a line when they are collinear."""
    pts = (p1, p2, p3)
    for i in range(3):
        for j in range(i + 1, 3):
            if pts[i] == pts[j]:
                raise GeometryError("coincident points do not determine a circle")
    if collinear(*pts):
        return Circle.from_line(T, join(p1, p2))
    a2, b2, c2 = T.sq
    rows = [normalize(p).coords for p in pts]
    rhs = [-(a2 * y * z + b2 * z * x + c2 * x * y) for x, y, z in rows]
    d = det3(*rows)
    sol = []
    for col in range(3):
        m = [list(r) for r in rows]
        for i in range(3):
            m[i][col] = rhs[i]
        sol.append(det3(*m) / d)
    return Circle(T, tuple(sol))


def _same_metric(*circles):
    m = circles[0].metric
    for c in circles[1:]:
        if c.metric != m:
            raise GeometryError("circles bound to different triangles")


def power(C: Circle, p: HPoint):
    """Power of a finite point; negative inside, zero on the circle."""
    if C.is_line:
        raise GeometryError("power with respect to a line is undefined")
    if not p.is_finite:
        raise GeometryError("power of a point at infinity")
    return -C.evaluate(p) / p.total ** 2


def radical_axis(C1: Circle, C2: Circle) -> HLine:
    _same_metric(C1, C2)
    if C1.is_line and C2.is_line:
        raise GeometryError("radical axis of two lines is undefined")
    if C1.is_line:
        return C1.line
    if C2.is_line:
        return C2.line
    diff = tuple(x - y for x, y in zip(C1.linepart, C2.linepart))
    if C1 == C2:
        raise GeometryError("identical circles")
    return HLine(*diff)


@dataclass
class PencilVerdict:
    coaxal: bool
    common_radical_axis: HLine | None = None
    witness_minors: list = field(default_factory=list)
    axis_undefined: bool = False


def coaxal(C1: Circle, C2: Circle, C3: Circle) -> PencilVerdict:
    """Rank test on (k, u, v, w): coaxal iff every 3x3 minor vanishes."""
    _same_metric(C1, C2, C3)
    rows = [C.vector for C in (C1, C2, C3)]
    scale = _maxabs(rows[0]) * _maxabs(rows[1]) * _maxabs(rows[2])
    minors = []
    for drop in range(4):
        cols = [j for j in range(4) if j != drop]
        minors.append(det3(*[[r[j] for j in cols] for r in rows]))
    ok = all(is_zero(m, scale) for m in minors)
    verdict = PencilVerdict(ok, witness_minors=minors)
    if not ok:
        return verdict
    proper = [C for C in (C1, C2, C3) if not C.is_line]
    lines = [C for C in (C1, C2, C3) if C.is_line]
    if not proper:
        verdict.axis_undefined = True
        return verdict
    if lines:
        verdict.common_radical_axis = lines[0].line
        return verdict
    for i in range(3):
        for j in range(i + 1, 3):
            if not proper[i] == proper[j]:
                verdict.common_radical_axis = radical_axis(proper[i], proper[j])
                return verdict
    verdict.axis_undefined = True
    return verdict


def circle_center(C: Circle) -> HPoint:
    return from_cartesian(C.metric, C.center_xy)


def orthogonal(C1: Circle, C2: Circle) -> bool:
    _same_metric(C1, C2)
    if C1.is_line or C2.is_line:
        raise GeometryError("orthogonality test needs proper circles")
    d2 = (C1.center_xy - C2.center_xy).norm2()
    r1, r2 = C1.radius2, C2.radius2
    return is_zero(d2 - r1 - r2, max(abs(float(d2)), abs(float(r1)), abs(float(r2))))


def on_circle(C: Circle, p: HPoint) -> bool:
    return C.contains(p)


# --- circumconics ----------------------------------------------------------

class Conic:
    """Circumconic lam*yz + mu*zx + nu*xy = 0 (scale invariant)."""

    __slots__ = ("coeffs",)

    def __init__(self, lam, mu=None, nu=None):
        if mu is None:
            lam, mu, nu = lam
        if lam == 0 and mu == 0 and nu == 0:
            raise GeometryError("zero conic")
        object.__setattr__(self, "coeffs", (lam, mu, nu))

    def __setattr__(self, name, value):
        raise AttributeError("Conic is immutable")

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Conic):
            return NotImplemented
        return proportional(self.coeffs, other.coeffs)

    __hash__ = None

    def __repr__(self):
        return "Conic(%s)" % ":".join(str(c) for c in HPoint(*self.coeffs).cleared())

    def evaluate(self, p: HPoint):
        x, y, z = p
        lam, mu, nu = self.coeffs
        return lam * y * z + mu * z * x + nu * x * y

    def contains(self, p: HPoint) -> bool:
        return is_zero(self.evaluate(p), _maxabs(self.coeffs) * _maxabs(p.coords) ** 2)

    @property
    def is_degenerate(self) -> bool:
        """A circumconic splits into two lines iff some coefficient vanishes."""
        return any(is_zero(c, _maxabs(self.coeffs)) for c in self.coeffs)

    def quadratic_form(self):
        lam, mu, nu = self.coeffs
        zero = lam - lam
        return ((zero, nu / 2, mu / 2), (nu / 2, zero, lam / 2), (mu / 2, lam / 2, zero))


def circumconic_from_line(T: TriangleMetric, l: HLine) -> Conic:
    """Isogonal image of a line: p on the conic iff its conjugate lies on ``l``."""
    zeros = sum(1 for c in l if is_zero(c, _maxabs(l.coords)))
    if zeros >= 2:
        raise GeometryError("conic degenerates: line is a sideline")
    a2, b2, c2 = T.sq
    return Conic(l[0] * a2, l[1] * b2, l[2] * c2)


def on_conic(K, p: HPoint) -> bool:
    return K.contains(p)


def _bilinear(M, p, q):
    return sum(p[i] * M[i][j] * q[j] for i in range(3) for j in range(3))


def polar(K, p: HPoint) -> HLine:
    """Polar line of ``p``; the tangent at ``p`` when ``p`` is on the conic."""
    return HLine(*mat_vec(K.quadratic_form(), p.coords))


def conic_line_second_intersection(K, l: HLine, known: HPoint) -> HPoint:
    """Other common point of a conic (or circle) and a line through a known common point."""
    if not K.contains(known) or not l.contains(known):
        raise GeometryError("known point is not on both the conic and the line")
    M = K.quadratic_form()
    d = None
    for side in (HLine(1, 0, 0), HLine(0, 1, 0), HLine(0, 0, 1), HLine(1, 1, 1), HLine(1, 2, 3)):
        if side == l:
            continue
        cand = HPoint(*cross(l.coords, side.coords))
        if not cand == known:
            d = cand
            break
    Fd = _bilinear(M, d, d)
    B = _bilinear(M, known, d)
    scale = max(_maxabs(r) for r in M) * _maxabs(d.coords) * max(_maxabs(d.coords), _maxabs(known.coords))
    if is_zero(Fd, scale) and is_zero(B, scale):
        raise GeometryError("line lies on the conic")
    coords = tuple(Fd * k - 2 * B * dd for k, dd in zip(known, d))
    return HPoint(*coords)

