import random
from fractions import Fraction as F

import pytest

import oracles
from apollonius.bary_core import (A_VERTEX, B_VERTEX, C_VERTEX, VERTICES, GeometryError, HLine,
                                  HPoint, TriangleMetric, collinear, join,
                                  signed_ratio, to_cartesian)
from apollonius.centers import named_center
from apollonius.circles_conics import (circle_center, circle_through_3, circumcircle, coaxal,
                                       conic_line_second_intersection, orthogonal)
from apollonius.constructions import (altitude_foot, apollonius_circle, bisector_feet,
                                      central_similarity, cevian_triangle, circumcevian_triangle,
                                      derived_center, derived_triangle, euler_line,
                                      foot_of_perpendicular, incircle, incircle_inversion, midpoint,
                                      orthocorrespondent, orthotransversal, orthotransversal_points,
                                      reflect_in_line)


def c(T, name):
    return named_center(T, name)


def test_cevian_triangle():
    assert cevian_triangle(HPoint(2, 3, 5)) == (HPoint(0, 3, 5), HPoint(2, 0, 5), HPoint(2, 3, 0))
    with pytest.raises(GeometryError, match="trace degenerates to vertex"):
        cevian_triangle(HPoint(0, 1, 1))


def test_circumcevian_triangle(T):
    O = circumcircle(T)
    verts = oracles.embed(13, 14, 15)
    # through the circumcenter the second points are antipodes
    for i, Vp in enumerate(circumcevian_triangle(T, c(T, "O"))):
        assert O.contains(Vp)
        a = oracles.to_xy(verts, Vp.coords)
        mid = ((a[0] + verts[i][0]) / 2, (a[1] + verts[i][1]) / 2)
        assert mid == oracles.circle3(*verts)[0]
    for i, Vp in enumerate(circumcevian_triangle(T, c(T, "I"))):
        a = oracles.to_xy(verts, Vp.coords)
        assert oracles.d2(a, verts[(i + 1) % 3]) == oracles.d2(a, verts[(i + 2) % 3])
    rng = random.Random(3)
    for _ in range(20):
        q = HPoint(*(rng.randint(1, 9) for _ in range(3)))
        for i, Vp in enumerate(circumcevian_triangle(T, q)):
            assert O.contains(Vp) and collinear(VERTICES[i], q, Vp)
    with pytest.raises(GeometryError):
        circumcevian_triangle(T, B_VERTEX)


def test_bisector_feet_harmonic(T):
    internal, external = bisector_feet(T)
    assert internal.X == HPoint(0, 14, 15)
    assert signed_ratio(internal.X, B_VERTEX, C_VERTEX) == F(-15, 14)
    assert signed_ratio(external.X, B_VERTEX, C_VERTEX) == F(15, 14)
    # the pair divides BC harmonically
    assert signed_ratio(internal.X, B_VERTEX, C_VERTEX) == -signed_ratio(external.X, B_VERTEX, C_VERTEX)
    iso = TriangleMetric.from_sides(5, 5, 6)
    _, ext = bisector_feet(iso)
    assert sum(ext.Z) == 0


def test_apollonius_circle_ratio(T):
    verts = oracles.embed(13, 14, 15)
    for i in range(3):
        circ = apollonius_circle(T, i)
        assert circ.contains(VERTICES[i])
        internal, external = bisector_feet(T)
        assert circ.contains(internal[i]) and circ.contains(external[i])
        assert orthogonal(circ, circumcircle(T))
        assert circle_center(circ)[i] == 0
    circ = apollonius_circle(T, 0)
    # the circle on the two bisector feet as diameter
    X, Xe = (oracles.to_xy(verts, f.X.coords) for f in bisector_feet(T))
    center = ((X[0] + Xe[0]) / 2, (X[1] + Xe[1]) / 2)
    assert (circ.center_xy.x, circ.center_xy.y) == center
    assert circ.radius2 == oracles.d2(center, X)
    assert coaxal(*(apollonius_circle(T, i) for i in range(3))).coaxal
    with pytest.raises(GeometryError, match="degenerates to a line"):
        apollonius_circle(TriangleMetric.from_sides(5, 5, 6), 2)


def test_apollonius_circle_sampled_points(T):
    verts = oracles.embed(13, 14, 15)
    circ = apollonius_circle(T, 0)
    # rational points on the circle: second intersections of lines through A
    rng = random.Random(12)
    for _ in range(10):
        d = HPoint(0, rng.randint(1, 20), rng.randint(-20, -1))
        if sum(d) == 0:
            continue
        line = join(A_VERTEX, d)
        P = conic_line_second_intersection(circ, line, A_VERTEX)
        xy = oracles.to_xy(verts, P.coords)
        assert 196 * oracles.d2(xy, verts[1]) == 225 * oracles.d2(xy, verts[2])


def test_central_similarity(T):
    G = c(T, "G")
    assert central_similarity(G, F(-1, 2), A_VERTEX) == HPoint(0, 1, 1)
    assert central_similarity(G, -2, c(T, "O")) == c(T, "H")
    assert central_similarity(G, F(-1, 2), c(T, "I")) == c(T, "Spieker")
    assert central_similarity(A_VERTEX, 1, c(T, "I")) == c(T, "I")


def test_metric_helpers(T):
    verts = oracles.embed(13, 14, 15)
    # foot of A on BC is (x_A, 0)
    assert altitude_foot(T, 0) == HPoint(*oracles.to_bary(verts, (verts[0][0], F(0))))
    assert foot_of_perpendicular(T, A_VERTEX, HLine(1, 0, 0)) == altitude_foot(T, 0)
    R = reflect_in_line(T, A_VERTEX, HLine(1, 0, 0))
    assert to_cartesian(T, R) == type(T.A)(T.A.x, -T.A.y)
    assert midpoint(B_VERTEX, C_VERTEX) == HPoint(0, 1, 1)
    assert collinear(*(altitude_foot(T, i) for i in range(2)), altitude_foot(T, 2)) is False


def test_orthotransversal_examples(T):
    assert orthotransversal(T, c(T, "I")) == HLine(80, 65, 52)
    assert orthotransversal(T, c(T, "H")) == HLine(1, 1, 1)
    assert orthocorrespondent(T, c(T, "I")) == c(T, "X57")
    with pytest.raises(GeometryError):
        orthotransversal(T, A_VERTEX)


def test_orthotransversal_matches_cartesian(T):
    verts = oracles.embed(13, 14, 15)
    Ixy = oracles.to_xy(verts, (13, 14, 15))
    pts = orthotransversal_points(T, c(T, "I"))
    for i in range(3):
        V, P1, P2 = verts[i], verts[(i + 1) % 3], verts[(i + 2) % 3]
        # perpendicular to IV through I meets side P1 P2
        d = (V[0] - Ixy[0], V[1] - Ixy[1])
        X = oracles.intersect(Ixy, (-d[1], d[0]), P1, (P2[0] - P1[0], P2[1] - P1[1]))
        assert pts[i] == HPoint(*oracles.to_bary(verts, X))


def test_incircle_inversion(T):
    psi = incircle_inversion(T)
    I = c(T, "I")
    for name in ("D", "E", "F"):
        assert psi.point(c(T, name)) == c(T, name)
    contact = [c(T, n) for n in ("D", "E", "F")]
    for i, V in enumerate(VERTICES):
        assert psi.point(V) == midpoint(contact[(i + 1) % 3], contact[(i + 2) % 3])
    rng = random.Random(7)
    for _ in range(20):
        p = HPoint(*(rng.randint(1, 30) for _ in range(3)))
        if p == I:
            continue
        assert psi.point(psi.point(p)) == p
    with pytest.raises(GeometryError):
        psi.point(I)
    assert psi.circle(incircle(T)) == incircle(T)
    # circumcircle maps to the circle through the contact-chord midpoints, radius r/2
    image = psi.circle(circumcircle(T))
    assert image.radius2 == 4
    line_image = psi.line(HLine(1, 0, 0))
    assert line_image.contains(c(T, "D"))
    assert psi.line(join(I, A_VERTEX)).is_line


def test_derived_triangles(T):
    Ia, Ib, Ic = c(T, "Ia"), c(T, "Ib"), c(T, "Ic")
    ex = derived_triangle(T, Ia, Ib, Ic)
    assert derived_center(ex, "H") == c(T, "I")
    contact = [c(T, n) for n in ("D", "E", "F")]
    A1 = [midpoint(contact[(i + 1) % 3], contact[(i + 2) % 3]) for i in range(3)]
    mid = derived_triangle(T, *A1)
    assert euler_line(mid).contains(c(T, "I"))
    contact_tri = derived_triangle(T, *contact)
    assert derived_center(contact_tri, "O") == c(T, "I")
    with pytest.raises(GeometryError):
        derived_triangle(T, A_VERTEX, B_VERTEX, HPoint(1, 1, 0))
    with pytest.raises(GeometryError, match="Euler line undefined"):
        euler_line(TriangleMetric.from_sides(1, 1, 1))
    assert euler_line(T).contains(c(T, "G"))


def test_derived_circle_round_trip(T):
    ex = derived_triangle(T, c(T, "Ia"), c(T, "Ib"), c(T, "Ic"))
    C = circle_through_3(T, A_VERTEX, B_VERTEX, HPoint(1, 2, 2))
    assert ex.circle_to_reference(ex.circle_from_reference(C)) == C
    p = HPoint(3, 5, 7)
    assert ex.to_reference(ex.from_reference(p)) == p
    l = HLine(1, -2, 4)
    assert ex.line_to_reference(ex.line_from_reference(l)) == l
