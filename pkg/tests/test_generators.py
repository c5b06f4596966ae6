from fractions import Fraction as F

import pytest

import oracles
from apollonius.generators import generate_heronian, glue, heron_area, primitive_triples


def test_primitive_triples():
    triples = primitive_triples(4)
    assert (3, 4, 5) in triples and (5, 12, 13) in triples and (15, 8, 17) in triples
    for a, b, c in primitive_triples(7):
        assert a * a + b * b == c * c


def test_glue_gives_13_14_15():
    # (5, 12, 13) and (9, 12, 15) share the leg 12
    assert sorted(glue((5, 12, 13), (3, 4, 5), 1, 1)) == [13, 14, 15]


def test_heron_area():
    assert heron_area(13, 14, 15) == 84
    assert heron_area(2, 3, 4) is None


def test_hundred_triangles():
    tris = generate_heronian(0, 100)
    keys = set()
    for T in tris:
        a, b, c = T.sides
        assert len({a, b, c}) == 3
        assert heron_area(a, b, c) is not None
        # the oracle embedding needs a rational area as well
        oracles.embed(a, b, c)
        assert T.backend == "exact"
        g = F(min(a, b, c))
        keys.add(tuple(sorted((a / g, b / g, c / g))))
    assert len(keys) == 100


def test_seed_determinism():
    assert [T.sides for T in generate_heronian(7, 20)] == [T.sides for T in generate_heronian(7, 20)]
    assert [T.sides for T in generate_heronian(7, 20)] != [T.sides for T in generate_heronian(8, 20)]


def test_count_must_be_positive():
    with pytest.raises(ValueError):
        generate_heronian(0, 0)
