import json
import random
from fractions import Fraction as F

import pytest

import oracles
from apollonius import theorem_suite as ts
from apollonius.bary_core import (A_VERTEX, B_VERTEX, C_VERTEX, VERTICES, GeometryError, HPoint,
                                  TriangleMetric, join, signed_ratio)
from apollonius.centers import complement, isogonal_conjugate, lemma3_Q, named_center
from apollonius.circles_conics import Conic, circumcircle, on_conic, polar, radical_axis
from apollonius.constructions import derived_center, derived_triangle


def c(T, name):
    return named_center(T, name)


def test_generalized_circles_through_their_points(T):
    P, Q = HPoint(2, 3, 4), HPoint(5, 1, 3)
    traces, primes, circles = ts.generalized_apollonius_circles(T, P, Q)
    for i in range(3):
        for pt in (VERTICES[i], traces[i], primes[i]):
            assert circles[i].contains(pt)
        assert circumcircle(T).contains(primes[i])


def test_incenter_centroid_conic(T):
    K = ts.incenter_centroid_conic(T)
    assert K == Conic(-169, 392, -225)
    assert on_conic(K, c(T, "X58"))
    with pytest.raises(GeometryError, match="equilateral: I = G"):
        ts.incenter_centroid_conic(TriangleMetric.from_sides(1, 1, 1))


# --- vertex/trace pencils ---------------------------------------------------------

def test_lemma1_pencil_contains_vertex_and_trace(T):
    P = HPoint(2, 3, 4)
    for i in range(3):
        for lam in (0, F(1, 3), -5):
            C = ts.lemma1_circle(T, P, i, lam)
            assert C.contains(VERTICES[i])
            assert C.contains(HPoint(*(0 if j == i else P[j] for j in range(3))))


def test_lemma1_concurrent_parameters_pass(T):
    P, Q = HPoint(2, 3, 4), HPoint(5, 1, 3)
    params = ts.lemma1_params_concurrent(T, P, Q)
    rep = ts.check_lemma1(T, P, params)
    assert rep.verdict == "pass"
    assert rep.witnesses["collinear_UVW"] and rep.witnesses["concurrent_cevians"]


def test_lemma1_centroid_generic_params(T):
    rep = ts.check_lemma1(T, c(T, "G"), (1, 2, 3))
    assert rep.verdict == "pass"
    assert rep.witnesses["collinear_UVW"] == rep.witnesses["concurrent_cevians"]


def test_lemma1_trace_at_infinity_is_degenerate(T):
    rep = ts.check_lemma1(T, HPoint(1, 2, -2), (1, 1, 1))
    assert rep.verdict == "degenerate"


# --- Q(k) family and the IBC construction ---------------------------------------

def test_lemma2_ratio_value(T):
    assert ts.lemma2_ratio(T, 0) == F(5, 4)
    assert ts.check_lemma2(T, 0).verdict == "pass"
    assert ts.check_lemma2(T, F(3, 7)).verdict == "pass"


def test_lemma2_ratio_matches_construction(T):
    for k in (0, F(1, 2), 2, F(-5, 3)):
        U = ts.lemma2_points(T, k)[0]
        assert signed_ratio(U, B_VERTEX, C_VERTEX) == ts.lemma2_ratio(T, k)


def test_lemma3_named_instances(T):
    for k, name in ((0, "X56"), (F(1, 2), "X58"), (1, "K")):
        rep = ts.check_lemma3(T, k)
        assert rep.verdict == "pass"
        assert rep.witnesses["Q"] == c(T, name)


def test_lemma2_requires_scalene():
    with pytest.raises(GeometryError):
        ts.check_lemma2(TriangleMetric.from_sides(5, 5, 6), 0)


def test_lemma4(T):
    rep = ts.check_lemma4(T)
    assert rep.verdict == "pass" and not rep.downgrades
    assert rep.witnesses["k_Q_BC"] == F(-3, 5)
    assert ts.lemma4_point(T, 0) == lemma3_Q(T, F(-3, 5))


def test_lemma4_brocard_axis_through_X58(T):
    DT = derived_triangle(T, c(T, "I"), VERTICES[1], VERTICES[2])
    brocard = join(derived_center(DT, "O"), derived_center(DT, "K"))
    assert radical_axis(*ts.lemma4_circles(T, 0)) == brocard
    assert brocard.contains(c(T, "X58"))


def test_lemma4_irrational_cosine_downgrades():
    T = TriangleMetric.from_sides(2, 3, 4)
    rep = ts.check_lemma4(T)
    assert rep.passed
    assert rep.downgrades == ["Q_BC", "Q_CA", "Q_AB"]


# --- P = I ---------------------------------------------------------------------------------

def test_theorem5_named_points(T):
    for name in ("K", "X56", "X58"):
        rep = ts.check_theorem5(T, c(T, name))
        assert rep.verdict == "pass" and rep.witnesses["coaxal"]
    rep = ts.check_theorem5(T, c(T, "I"))
    assert rep.sub_verdicts["incenter_gives_concurrent_bisectors"]
    assert rep.witnesses["pencil_of_lines"]


def test_theorem5_off_conic(T):
    rep = ts.check_theorem5(T, HPoint(1, 2, 3))
    assert rep.verdict == "pass"
    assert not rep.witnesses["on_conic"] and not rep.witnesses["coaxal"]


def test_theorem5_excentral_circles(T):
    rep = ts.check_theorem5(T, c(T, "X56"))
    assert rep.sub_verdicts["excentral_tangent_circles_coaxal_on_OI"]


def test_lemma6_instances(T):
    assert ts.check_lemma6(T).verdict == "pass"
    assert ts.check_lemma6(TriangleMetric.from_sides(6, 8, 10)).verdict == "pass"


# --- inversion -----------------------------------------------------------------------------

@pytest.mark.parametrize("case", sorted(ts.INVERSION_CASES))
def test_inversion_cases(T, case):
    rep = ts.check_inversion_suite(T, case)
    assert rep.passed, rep.sub_verdicts
    assert rep.check_id == f"inversion-{case.lower()}"


def test_inversion_unknown_case(T):
    with pytest.raises(GeometryError):
        ts.check_inversion_suite(T, "Z")


# --- orthocenter family and Euler line ------------------------------------------------------

def test_lemma8_circumcenter(T):
    rep = ts.check_lemma8(T, c(T, "O"))
    assert rep.verdict == "pass"
    assert rep.witnesses["axis"] == join(c(T, "O"), c(T, "H"))


def test_lemma8_at_orthocenter_is_degenerate(T):
    assert ts.check_lemma8(T, c(T, "H")).verdict == "degenerate"


def test_lemma9_incenter(T):
    rep = ts.check_lemma9(T, c(T, "I"))
    assert rep.verdict == "pass"
    assert rep.sub_verdicts["line_is_tripolar_of_X57"]


def test_theorem7_examples(T):
    rep = ts.check_theorem7(T, c(T, "I"))
    assert rep.verdict == "pass" and not rep.witnesses["coaxal"]
    rep = ts.check_theorem7(T, c(T, "N"))
    assert rep.verdict == "pass" and rep.witnesses["coaxal"]
    with pytest.raises(GeometryError, match="equilateral: Euler line undefined"):
        ts.check_theorem7(TriangleMetric.from_sides(1, 1, 1), HPoint(1, 2, 3))
    with pytest.raises(GeometryError):
        ts.check_theorem7(T, c(T, "H"))


# --- general P -----------------------------------------------------------------------------

def delta_oracle(sides, P, Q):
    a2, b2, c2 = (F(s) ** 2 for s in sides)
    p, q, r = P
    u, v, w = Q
    return oracles.det3(((a2 * q * r, b2 * r * p, c2 * p * q),
                         (a2 * v * w, b2 * w * u, c2 * u * v),
                         (q + r, r + p, p + q)))


def test_delta_values(T):
    I = c(T, "I")
    assert ts.delta_determinant(T, I, HPoint(1, 2, 3)) == delta_oracle((13, 14, 15), (13, 14, 15), (1, 2, 3))
    assert ts.delta_determinant(T, I, HPoint(1, 2, 3)) == 33022080
    assert ts.delta_determinant(T, I, c(T, "K")) == 0


def test_theorem10_incenter_reduces_to_theorem5(T):
    I = c(T, "I")
    assert ts.theorem10_R(T, I) == c(T, "X58")
    K, vertex, _ = ts.theorem10_conic(T, I)
    assert vertex is None
    assert K == ts.incenter_centroid_conic(T)


def test_theorem10_R_forms_agree(T):
    P = HPoint(7, 3, 5)
    assert ts.theorem10_R(T, P) == ts.theorem10_R_representative(T, P)
    assert ts.theorem10_R(T, P) == isogonal_conjugate(T, complement(P))


def test_theorem10_on_and_off(T):
    P = HPoint(7, 3, 5)
    K, _, _ = ts.theorem10_conic(T, P)
    rng = random.Random(1)
    for _ in range(3):
        Q = ts.sample_on_circumconic(rng, K, avoid=(P,))
        rep = ts.check_theorem10(T, P, Q)
        assert rep.passed and rep.witnesses["coaxal"], rep.sub_verdicts
        Q = ts.sample_off_conic(rng, K)
        rep = ts.check_theorem10(T, P, Q)
        assert rep.passed and not rep.witnesses["coaxal"]


def test_theorem10_Q_equals_R_gives_tangent(T):
    P = HPoint(7, 3, 5)
    R = ts.theorem10_R(T, P)
    rep = ts.check_theorem10(T, P, R)
    assert rep.passed
    assert rep.sub_verdicts["axis_tangent_to_K_at_R"]
    K, _, _ = ts.theorem10_conic(T, P)
    assert rep.witnesses["axis"] == polar(K, R)


def test_theorem10_degenerate_conic(T):
    P = ts.degenerate_theorem10_P(T, 2, 3)
    K, vertex, line = ts.theorem10_conic(T, P)
    assert vertex == 0
    assert line.contains(A_VERTEX)
    R = ts.theorem10_R(T, P)
    apr = join(A_VERTEX, P)
    assert apr.contains(R)
    Q = HPoint(*(x + 2 * y for x, y in zip(A_VERTEX.coords, P.coords)))
    rep = ts.check_theorem10(T, P, Q)
    assert rep.passed and rep.sub_verdicts["R_on_line_APR"]
    assert rep.witnesses["coaxal"]


def test_closed_form_t_matches_circle_pencil(T):
    P, Q = HPoint(2, 3, 4), HPoint(5, 1, 3)
    _, _, circles = ts.generalized_apollonius_circles(T, P, Q)
    for i in range(3):
        assert ts.theorem10_circle(T, P, Q, i) == circles[i]


def test_closed_form_radical_axis_matches_cartesian_oracle():
    sides = (13, 14, 15)
    T = TriangleMetric.from_sides(*sides)
    verts = oracles.embed(*sides)
    center, r2 = oracles.circle3(*verts)
    rng = random.Random(21)
    checked = 0
    while checked < 10:
        P, Q = ts.random_point(rng), ts.random_point(rng)
        try:
            line = ts.radical_axis_rBC(T, P, Q)
        except GeometryError:
            continue
        coeffs = []
        for i in (1, 2):
            V = verts[i]
            trace = oracles.to_xy(verts, tuple(0 if j == i else P[j] for j in range(3)))
            q_xy = oracles.to_xy(verts, Q.coords)
            prime = oracles.second_on_circle(center, r2, V, (q_xy[0] - V[0], q_xy[1] - V[1]))
            if oracles.area2(V, trace, prime) == 0:
                break
            coeffs.append(oracles.circle_coeffs(*oracles.circle3(V, trace, prime)))
        else:
            # two points of the Cartesian radical axis, as barycentrics
            dD, dE, dF = (x - y for x, y in zip(*coeffs))
            if dE != 0:
                pts = [(x, -(dD * x + dF) / dE) for x in (F(0), F(1))]
            else:
                pts = [(-dF / dD, y) for y in (F(0), F(1))]
            for pt in pts:
                assert line.contains(HPoint(*oracles.to_bary(verts, pt)))
            checked += 1


def test_rBC_at_R_is_minus_delta_over_product(T):
    rng = random.Random(4)
    seen = 0
    while seen < 20:
        P, Q = ts.random_point(rng), ts.random_point(rng)
        p, q, r = P
        u, v, w = Q
        prod = (q + r) * (r + p) * (p + q) * (v * p - u * q) * (u * r - w * p)
        if prod == 0:
            continue
        Rrep = ts.theorem10_R_representative(T, P)
        val = ts.rBC_value(T, P, Q, Rrep)
        assert val * prod == -delta_oracle((13, 14, 15), P.coords, Q.coords)
        seen += 1


def test_pH_remark(T):
    H, O = c(T, "H"), c(T, "O")
    rep = ts.check_theorem10(T, H, O)
    assert rep.check_id == "p-equals-h"
    assert rep.passed and rep.witnesses["axis"] == join(O, H)
    rep = ts.check_pH_remark(T, H)
    assert rep.passed and rep.sub_verdicts["concurrent_altitudes"]
    with pytest.raises(GeometryError):
        ts.check_pH_remark(TriangleMetric.from_sides(3, 4, 5), HPoint(1, 2, 3))


def test_theorem10_rejects_bad_inputs(T):
    with pytest.raises(GeometryError):
        ts.check_theorem10(T, A_VERTEX, HPoint(1, 2, 3))
    with pytest.raises(GeometryError):
        ts.check_theorem10(T, HPoint(0, 1, 2), HPoint(1, 2, 3))
    with pytest.raises(GeometryError):
        ts.check_theorem10(TriangleMetric.from_sides(1, 1, 1), HPoint(1, 2, 3), HPoint(3, 1, 2))


# --- reports -------------------------------------------------------------------------------

def test_report_serialization(T):
    rep = ts.check_theorem5(T, c(T, "X58"))
    d = rep.to_dict()
    assert d["verdict"] == "pass" and d["backend"] == "exact"
    assert d["inputs"]["Q"] == ["507", "609", "725"]
    assert "counterexample" not in d
    json.dumps(d)


def test_failed_report_has_counterexample(T):
    rep = ts.CheckReport("demo", "exact", {"x": F(1, 2)})
    rep.check("good", True)
    rep.check("bad", False)
    d = rep.to_dict()
    assert d["verdict"] == "fail"
    assert d["counterexample"] == {"failed": ["bad"], "inputs": {"x": "1/2"}}
    rep.downgrade("bad")
    assert rep.to_dict()["backend"] == "exact+float"


def test_samplers(T):
    rng = random.Random(0)
    K = ts.incenter_centroid_conic(T)
    for _ in range(10):
        p = ts.random_point(rng)
        assert 0 not in p.coords and sum(p.coords) != 0
        assert on_conic(K, ts.sample_on_circumconic(rng, K))
        assert not on_conic(K, ts.sample_off_conic(rng, K))
    with pytest.raises(GeometryError, match="equilateral"):
        ts.sample_on_euler_line(rng, TriangleMetric.from_sides(1, 1, 1))
