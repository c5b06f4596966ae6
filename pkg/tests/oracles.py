"""Independent Cartesian oracles on plain Fractions, sharing no code with the package."""
from fractions import Fraction as F
from math import isqrt


def rational_sqrt(x):
    x = F(x)
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    assert n * n == x.numerator and d * d == x.denominator, "not a rational square"
    return F(n, d)


def embed(a, b, c):
    """B at the origin, C on the positive x-axis, A above."""
    a, b, c = F(a), F(b), F(c)
    s = (a + b + c) / 2
    area = rational_sqrt(s * (s - a) * (s - b) * (s - c))
    A = ((a * a + c * c - b * b) / (2 * a), 2 * area / a)
    return A, (F(0), F(0)), (a, F(0))


def to_xy(verts, p):
    t = sum(p)
    return (sum(w * v[0] for w, v in zip(p, verts)) / t,
            sum(w * v[1] for w, v in zip(p, verts)) / t)


def area2(p, q, r):
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])


def to_bary(verts, xy):
    A, B, C = verts
    return (area2(xy, B, C), area2(A, xy, C), area2(A, B, xy))


def d2(p, q):
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def circle3(p, q, r):
    """Center and squared radius of the circle through three points."""
    ax, ay = p
    bx, by = q
    cx, cy = r
    d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by))
    ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) + (cx * cx + cy * cy) * (ay - by)) / d
    uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) + (cx * cx + cy * cy) * (bx - ax)) / d
    return (ux, uy), d2((ux, uy), p)


def intersect(p1, d1, p2, d2_):
    """Intersection of lines p1 + s d1 and p2 + t d2."""
    den = d1[0] * d2_[1] - d1[1] * d2_[0]
    s = ((p2[0] - p1[0]) * d2_[1] - (p2[1] - p1[1]) * d2_[0]) / den
    return (p1[0] + s * d1[0], p1[1] + s * d1[1])


def proportional(u, v):
    return all(u[i] * v[j] == u[j] * v[i] for i in range(3) for j in range(3))


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def second_on_circle(center, r2, p0, d):
    """Second intersection of the line p0 + t d with the circle, p0 on it."""
    t = -2 * ((p0[0] - center[0]) * d[0] + (p0[1] - center[1]) * d[1]) / (d[0] ** 2 + d[1] ** 2)
    return (p0[0] + t * d[0], p0[1] + t * d[1])


def circle_coeffs(center, r2):
    """(D, E, F) with x^2 + y^2 + D x + E y + F = 0."""
    return (-2 * center[0], -2 * center[1], center[0] ** 2 + center[1] ** 2 - r2)


def det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
