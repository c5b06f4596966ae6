"""Scalars, homogeneous barycentric points and lines, and the Cartesian embedding.

Scalars are plain Python numbers. ``int`` and ``Fraction`` values form the
exact backend and are compared with zero tolerance; ``float`` values form the
float backend and every zero test uses the relative tolerance ``TOL``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational

TOL = 1e-9


class GeometryError(ValueError):
    """Raised when a construction is undefined for its inputs."""


def set_tolerance(tol: float) -> None:
    global TOL
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    TOL = float(tol)


def as_scalar(value):
    """Coerce ints and rational strings to ``Fraction``; floats pass through."""
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, Fraction) or isinstance(value, float):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    return float(value)


def is_exact(*values) -> bool:
    return all(isinstance(v, Rational) for v in values)


def backend_of(*values) -> str:
    return "exact" if is_exact(*values) else "float"


def is_zero(x, scale=1) -> bool:
    """Zero test; exact for rationals, ``|x| <= TOL * |scale|`` for floats."""
    if isinstance(x, Rational):
        return x == 0
    return x == 0 or abs(x) <= TOL * abs(float(scale))


def exact_sqrt(x):
    """Square root of a non-negative rational if it is rational, else ``None``."""
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sqrt(x):
    """Exact root when possible, float otherwise."""
    if isinstance(x, Rational):
        root = exact_sqrt(x)
        if root is not None:
            return root
    return math.sqrt(float(x))


def _maxabs(values) -> float:
    return max(abs(float(v)) for v in values)


# --- small linear algebra over scalars -------------------------------------

def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def det3(r0, r1, r2):
    return dot(r0, cross(r1, r2))


def det(rows):
    """Determinant by cofactor expansion; fine for the 4x4 sizes used here."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 3:
        return det3(*rows)
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in rows[1:]]
        term = rows[0][j] * det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def transpose(m):
    return tuple(tuple(m[i][j] for i in range(3)) for j in range(3))


def inverse3(m):
    d = det3(*m)
    if is_zero(d, _maxabs(m[0]) * _maxabs(m[1]) * _maxabs(m[2])):
        raise GeometryError("singular 3x3 matrix")
    c0, c1, c2 = m[0], m[1], m[2]
    adj_cols = (cross(c1, c2), cross(c2, c0), cross(c0, c1))
    # rows of the inverse are the columns of the adjugate
    return tuple(tuple(adj_cols[j][i] / d for j in range(3)) for i in range(3))


def proportional(u, v) -> bool:
    """True iff two triples are parallel (all 2x2 minors vanish)."""
    scale = _maxabs(u) * _maxabs(v)
    return all(is_zero(c, scale) for c in cross(u, v))


# --- homogeneous triples ---------------------------------------------------

class _Triple:
    __slots__ = ("coords",)
    _kind = "triple"

    def __init__(self, x, y=None, z=None):
        if y is None and z is None:
            x, y, z = x
        coords = (as_scalar(x), as_scalar(y), as_scalar(z))
        if all(c == 0 for c in coords):
            raise GeometryError(f"{self._kind} with all coordinates zero")
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return 3

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return proportional(self.coords, other.coords)

    __hash__ = None

    @property
    def exact(self) -> bool:
        return is_exact(*self.coords)

    def scaled(self, lam):
        return type(self)(*(lam * c for c in self.coords))

    def cleared(self) -> tuple:
        """Primitive integer representative (exact) with first nonzero entry positive."""
        if not self.exact:
            m = _maxabs(self.coords)
            sign = next(1 if c > 0 else -1 for c in self.coords if c != 0)
            return tuple(sign * c / m for c in self.coords)
        fr = [Fraction(c) for c in self.coords]
        lcm = 1
        for f in fr:
            lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
        ints = [int(f * lcm) for f in fr]
        g = 0
        for i in ints:
            g = math.gcd(g, i)
        sign = next(1 if i > 0 else -1 for i in ints if i != 0)
        return tuple(sign * i // g for i in ints)

    def __repr__(self):
        inner = ":".join(str(c) for c in self.cleared())
        return f"{type(self).__name__}({inner})"


class HPoint(_Triple):
    """Point (x:y:z) in homogeneous barycentrics."""

    __slots__ = ()
    _kind = "point"

    @property
    def total(self):
        return self.coords[0] + self.coords[1] + self.coords[2]

    @property
    def is_finite(self) -> bool:
        return not is_zero(self.total, _maxabs(self.coords))


class HLine(_Triple):
    """Line [l:m:n] with equation lx + my + nz = 0."""

    __slots__ = ()
    _kind = "line"

    def value(self, p: HPoint):
        return dot(self.coords, p.coords)

    def contains(self, p: HPoint) -> bool:
        return is_zero(self.value(p), _maxabs(self.coords) * _maxabs(p.coords))


A_VERTEX = HPoint(1, 0, 0)
B_VERTEX = HPoint(0, 1, 0)
C_VERTEX = HPoint(0, 0, 1)
VERTICES = (A_VERTEX, B_VERTEX, C_VERTEX)
SIDELINES = (HLine(1, 0, 0), HLine(0, 1, 0), HLine(0, 0, 1))
LINE_AT_INFINITY = HLine(1, 1, 1)


def normalize(p: HPoint) -> HPoint:
    if not p.is_finite:
        raise GeometryError("point at infinity not normalizable")
    s = p.total
    return HPoint(*(c / s for c in p.coords))


def join(p: HPoint, q: HPoint) -> HLine:
    if p == q:
        raise GeometryError("join/meet of equal elements")
    return HLine(*cross(p.coords, q.coords))


def meet(l: HLine, m: HLine) -> HPoint:
    if l == m:
        raise GeometryError("join/meet of equal elements")
    return HPoint(*cross(l.coords, m.coords))


def collinear(p, q, r) -> bool:
    scale = _maxabs(p.coords) * _maxabs(q.coords) * _maxabs(r.coords)
    return is_zero(det3(p.coords, q.coords, r.coords), scale)


def concurrent(l, m, n) -> bool:
    return collinear(l, m, n)


def is_vertex(p: HPoint) -> bool:
    return sum(1 for c in p.coords if is_zero(c, _maxabs(p.coords))) >= 2


def on_sideline(p: HPoint) -> bool:
    return any(is_zero(c, _maxabs(p.coords)) for c in p.coords)


def signed_ratio(u: HPoint, b: HPoint, c: HPoint):
    """Ratio of directed segments UB/UC for three collinear finite points."""
    if not collinear(u, b, c):
        raise GeometryError("signed ratio of non-collinear points")
    if u == c:
        raise GeometryError("ratio undefined")
    nu, nb, nc = normalize(u), normalize(b), normalize(c)
    ub = [y - x for x, y in zip(nu, nb)]
    uc = [y - x for x, y in zip(nu, nc)]
    i = max(range(3), key=lambda j: abs(float(uc[j])))
    return ub[i] / uc[i]


# --- Cartesian embedding ---------------------------------------------------

@dataclass(frozen=True)
class CartesianPoint:
    x: object
    y: object

    def __add__(self, o):
        return CartesianPoint(self.x + o.x, self.y + o.y)

    def __sub__(self, o):
        return CartesianPoint(self.x - o.x, self.y - o.y)

    def __mul__(self, k):
        return CartesianPoint(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __truediv__(self, k):
        return CartesianPoint(self.x / k, self.y / k)

    def __neg__(self):
        return CartesianPoint(-self.x, -self.y)

    def dot(self, o):
        return self.x * o.x + self.y * o.y

    def cross(self, o):
        return self.x * o.y - self.y * o.x

    def norm2(self):
        return self.x * self.x + self.y * self.y

    def close(self, o) -> bool:
        d = self - o
        scale = max(1.0, abs(float(self.x)), abs(float(self.y)), abs(float(o.x)), abs(float(o.y)))
        return is_zero(d.x, scale) and is_zero(d.y, scale)


def _signed_area(p, q, r):
    return (q - p).cross(r - p) / 2


@dataclass(frozen=True)
class TriangleMetric:
    """Squared side lengths plus a Cartesian placement of the vertices.

    ``from_sides`` uses the standard placement B=(0,0), C=(a,0), A above BC.
    ``from_vertices`` keeps arbitrary vertex positions, which is how derived
    triangles share the reference coordinate frame.
    """

    a2: object
    b2: object
    c2: object
    A: CartesianPoint
    B: CartesianPoint
    C: CartesianPoint
    given_sides: tuple | None = None

    @classmethod
    def from_sides(cls, a, b, c) -> TriangleMetric:
        a, b, c = as_scalar(a), as_scalar(b), as_scalar(c)
        if min(a, b, c) <= 0:
            raise GeometryError("side lengths must be positive")
        if not (a < b + c and b < c + a and c < a + b):
            raise GeometryError("triangle inequality violated")
        area16 = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
        area = sqrt(area16) / 4
        if not is_exact(area):
            a, b, c = float(a), float(b), float(c)
        bx = (a * a + c * c - b * b) / (2 * a)
        zero = a - a
        return cls(a * a, b * b, c * c,
                   CartesianPoint(bx, 2 * area / a),
                   CartesianPoint(zero, zero),
                   CartesianPoint(a, zero),
                   (a, b, c))

    @classmethod
    def from_vertices(cls, A: CartesianPoint, B: CartesianPoint, C: CartesianPoint) -> TriangleMetric:
        if is_zero(_signed_area(A, B, C), max((B - A).norm2(), (C - A).norm2(), 1)):
            raise GeometryError("degenerate triangle: collinear vertices")
        return cls((B - C).norm2(), (C - A).norm2(), (A - B).norm2(), A, B, C)

    @property
    def vertices(self):
        return (self.A, self.B, self.C)

    @property
    def sq(self):
        return (self.a2, self.b2, self.c2)

    @cached_property
    def sides(self):
        if self.given_sides is not None:
            return self.given_sides
        return tuple(sqrt(s) for s in self.sq)

    a = property(lambda self: self.sides[0])
    b = property(lambda self: self.sides[1])
    c = property(lambda self: self.sides[2])

    @property
    def backend(self) -> str:
        return backend_of(*self.sides, self.A.x, self.A.y, self.B.x, self.B.y, self.C.x, self.C.y)

    @property
    def sq_backend(self) -> str:
        """Backend of everything that depends only on squared sides and the embedding."""
        return backend_of(*self.sq, self.A.x, self.A.y, self.B.x, self.B.y, self.C.x, self.C.y)

    @cached_property
    def signed_area(self):
        return _signed_area(self.A, self.B, self.C)

    @property
    def area(self):
        return abs(self.signed_area)

    @property
    def s(self):
        return sum(self.sides) / 2

    @property
    def r(self):
        return self.area / self.s

    @property
    def R(self):
        a, b, c = self.sides
        return a * b * c / (4 * self.area)

    @property
    def R2(self):
        return self.a2 * self.b2 * self.c2 / (16 * self.area * self.area)

    @property
    def cosines(self):
        a, b, c = self.sides
        a2, b2, c2 = self.sq
        return ((b2 + c2 - a2) / (2 * b * c),
                (c2 + a2 - b2) / (2 * c * a),
                (a2 + b2 - c2) / (2 * a * b))

    @property
    def scale(self):
        """Typical squared length, used to scale float tolerances."""
        return max(abs(float(v)) for v in self.sq)

    def is_equilateral(self) -> bool:
        a2, b2, c2 = self.sq
        return is_zero(a2 - b2, self.scale) and is_zero(b2 - c2, self.scale)

    def is_scalene(self) -> bool:
        a2, b2, c2 = self.sq
        return not (is_zero(a2 - b2, self.scale) or is_zero(b2 - c2, self.scale)
                    or is_zero(c2 - a2, self.scale))

    @cached_property
    def circumcenter(self) -> CartesianPoint:
        A, B, C = self.vertices
        b, c = B - A, C - A
        d = 2 * b.cross(c)
        ux = (c.y * b.norm2() - b.y * c.norm2()) / d
        uy = (b.x * c.norm2() - c.x * b.norm2()) / d
        return CartesianPoint(A.x + ux, A.y + uy)

    @cached_property
    def barycentric_affine(self):
        """Per vertex, (gx, gy, g0) with normalized coordinate = gx*x + gy*y + g0."""
        out = []
        S = self.signed_area
        verts = self.vertices
        for i in range(3):
            q, r = verts[(i + 1) % 3], verts[(i + 2) % 3]
            # 2*area(P, q, r) = q x r + P x (r - q)  (x = 2D cross)
            gx = (q.y - r.y) / (2 * S)
            gy = (r.x - q.x) / (2 * S)
            g0 = q.cross(r) / (2 * S)
            out.append((gx, gy, g0))
        return tuple(out)


def to_cartesian(T: TriangleMetric, p: HPoint) -> CartesianPoint:
    if not p.is_finite:
        raise GeometryError("point at infinity has no Cartesian image")
    x, y, z = normalize(p).coords
    return T.A * x + T.B * y + T.C * z


def from_cartesian(T: TriangleMetric, pt: CartesianPoint) -> HPoint:
    return HPoint(_signed_area(pt, T.B, T.C), _signed_area(T.A, pt, T.C), _signed_area(T.A, T.B, pt))


def dist2(T: TriangleMetric, p: HPoint, q: HPoint):
    return (to_cartesian(T, p) - to_cartesian(T, q)).norm2()


def line_affine(T: TriangleMetric, l: HLine):
    """Affine function (gx, gy, g0) whose zero set is ``l`` in the embedding."""
    g = T.barycentric_affine
    return tuple(sum(l[i] * g[i][j] for i in range(3)) for j in range(3))


def line_from_affine(T: TriangleMetric, gx, gy, g0) -> HLine:
    """Barycentric line of {P : gx*x + gy*y + g0 = 0}: evaluate at the vertices."""
    return HLine(*(gx * V.x + gy * V.y + g0 for V in T.vertices))


def concyclic(T: TriangleMetric, p1, p2, p3, p4) -> bool:
    """Four finite points on one circle, or all on one line (degenerate circle)."""
    pts = [to_cartesian(T, p) for p in (p1, p2, p3, p4)]
    rows = [[q.x, q.y, q.norm2(), 1] for q in pts]
    scale = 1.0
    for row in rows:
        scale *= _maxabs(row)
    return is_zero(det(rows), scale)
