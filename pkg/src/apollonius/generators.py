"""Seeded generators of scalene Heronian triangles.

Two Pythagorean right triangles are scaled to share a leg and glued along it.
The result has integer sides (the two hypotenuses and the sum of the other
legs) and rational area.
"""
from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .bary_core import TriangleMetric, exact_sqrt


def primitive_triples(m_max: int):
    out = []
    for m in range(2, m_max + 1):
        for n in range(1, m):
            if (m - n) % 2 == 1 and gcd(m, n) == 1:
                out.append((m * m - n * n, 2 * m * n, m * m + n * n))
    return out


def heron_area(a, b, c):
    """Exact area if rational, else None."""
    s = Fraction(a + b + c, 2)
    return exact_sqrt(s * (s - a) * (s - b) * (s - c))


def glue(t1, t2, leg1: int, leg2: int):
    """Glue right triangles t1, t2 along legs t1[leg1] and t2[leg2]."""
    h1, h2 = t1[leg1], t2[leg2]
    s1, s2 = h2 // gcd(h1, h2), h1 // gcd(h1, h2)
    base = t1[1 - leg1] * s1 + t2[1 - leg2] * s2
    sides = (base, t1[2] * s1, t2[2] * s2)
    g = gcd(gcd(*sides[:2]), sides[2])
    return tuple(x // g for x in sides)


def generate_heronian(seed: int, n: int, m_max: int = 7) -> list[TriangleMetric]:
    """``n`` distinct (up to similarity) scalene Heronian triangles."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    triples = primitive_triples(m_max)
    seen, out = set(), []
    attempts = 0
    while len(out) < n:
        attempts += 1
        if attempts > 50 * (len(out) + 1) * len(triples):
            m_max += 1
            triples = primitive_triples(m_max)
            attempts = 0
        sides = glue(rng.choice(triples), rng.choice(triples), rng.randrange(2), rng.randrange(2))
        if len(set(sides)) < 3:
            continue
        key = tuple(sorted(sides))
        if key in seen:
            continue
        area = heron_area(*sides)
        if area is None or area <= 0:
            continue
        seen.add(key)
        # random labelling so no vertex is special
        k = rng.randrange(3)
        sides = sides[k:] + sides[:k]
        out.append(TriangleMetric.from_sides(*sides))
    return out
