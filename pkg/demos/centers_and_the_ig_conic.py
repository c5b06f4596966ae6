"""
Triangle centers and the incenter-centroid circumconic
======================================================

Works in the 13-14-15 triangle, where everything stays rational.
"""

from fractions import Fraction

from apollonius.bary_core import TriangleMetric, join
from apollonius.centers import CenterId, isogonal_conjugate, lemma3_Q, lemma3_Qstar, named_center
from apollonius.circles_conics import circumconic_from_line, on_conic, power, circumcircle

T = TriangleMetric.from_sides(13, 14, 15)
print("area", T.area, "inradius", T.r, "circumradius", T.R)

# a few named centers, with denominators cleared
for cid in (CenterId.I, CenterId.G, CenterId.K, CenterId.X56, CenterId.X57, CenterId.X58):
    print(f"{cid.value:>8}", named_center(T, cid).cleared())

# the line IG and its isogonal image, a conic through A, B, C
I, G = named_center(T, CenterId.I), named_center(T, CenterId.G)
IG = join(I, G)
K = circumconic_from_line(T, IG)
print("line IG", IG.cleared())
print("conic  ", tuple(int(c) for c in K.coeffs))

# K, X56 and X58 lie on it because their isogonal conjugates lie on IG
for cid in (CenterId.K, CenterId.X56, CenterId.X58):
    p = named_center(T, cid)
    print(cid.value, "on conic:", on_conic(K, p), " conjugate on IG:", IG.contains(isogonal_conjugate(T, p)))

# the one-parameter family Q(k) runs along the conic, Q*(k) along IG
for k in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(-3, 5), Fraction(4)):
    print(f"k={str(k):>5}  Q*={lemma3_Qstar(T, k).cleared()}  Q={lemma3_Q(T, k).cleared()}")

# the power of I is -2Rr
print("power of I wrt circumcircle:", power(circumcircle(T), I), "= -2Rr =", -2 * T.R * T.r)
