"""
When are the three circles (A X A') coaxal?
===========================================

X, Y, Z are the traces of P on the sidelines and A', B', C' the second
intersections of AQ, BQ, CQ with the circumcircle. We count how often the
three circles share a radical axis, first for P = I and then for a random P.
"""

import random

from apollonius import theorem_suite as ts
from apollonius.bary_core import HPoint, TriangleMetric
from apollonius.circles_conics import coaxal

T = TriangleMetric.from_sides(13, 14, 15)
rng = random.Random(1)

# P = I: coaxal exactly when Q is on the incenter-centroid conic
conic = ts.incenter_centroid_conic(T)
for label, sampler in (("on conic", lambda: ts.sample_on_circumconic(rng, conic)),
                       ("off conic", lambda: ts.sample_off_conic(rng, conic))):
    reps = [ts.check_theorem5(T, sampler()) for _ in range(20)]
    print(f"P = I, Q {label}: {sum(r.witnesses['coaxal'] for r in reps)}/20 coaxal,",
          "all checks passed" if all(r.passed for r in reps) else "FAILURES")

# a general P: the conic through P and R = isogonal(complement(P)) plays the same role
P = HPoint(7, 3, 5)
K, _, _ = ts.theorem10_conic(T, P)
R = ts.theorem10_R(T, P)
print("P", P.cleared(), " R", R.cleared(), " K", tuple(int(c) for c in K.coeffs))

Q = ts.sample_on_circumconic(rng, K, avoid=(P,))
_, _, circles = ts.generalized_apollonius_circles(T, P, Q)
verdict = coaxal(*circles)
print("Q on K:", Q.cleared(), "coaxal:", verdict.coaxal, "axis:", verdict.common_radical_axis.cleared())
print("axis passes through R:", verdict.common_radical_axis.contains(R))

# the determinant test agrees without building any circle
print("delta(P, Q) =", ts.delta_determinant(T, P, Q))
Q2 = ts.sample_off_conic(rng, K)
print("off-conic Q", Q2.cleared(), "delta =", ts.delta_determinant(T, P, Q2),
      "coaxal:", coaxal(*ts.generalized_apollonius_circles(T, P, Q2)[2]).coaxal)
