import random

import pytest

from multiproj import binomial_relations, veronese_generators, zero_subring_generators
from multiproj.cones import HilbertBasis
from multiproj.errors import ResourceLimitError, TorsionUnsupportedError
from multiproj.grading import Multidegree, degree_of_vector
from multiproj.sections import relation_holds

from _builders import determinantal, doubled_line, graded, p2, projection_algebra, random_spec


def test_determinantal_generators_and_minor():
    hb = zero_subring_generators(determinantal(1, 2))
    assert set(hb) == {(1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)}
    rels = binomial_relations(hb, 4)
    assert len(rels) == 1
    assert relation_holds(hb, rels[0])
    assert sorted(map(abs, rels[0])) == [1, 1, 1, 1]


def test_projection_algebra_is_polynomial():
    hb = zero_subring_generators(projection_algebra(1))
    assert set(hb) == {(1, 0, 1, 0), (0, 1, 1, 0), (0, 0, 1, 1)}
    assert binomial_relations(hb, 4) == []


def test_doubled_line_degree_zero():
    assert zero_subring_generators(doubled_line()).elements == ((1, 1),)


def test_degree_zero_with_torsion():
    # x + y = 0 on Z and x = 0 mod 2 on the torsion part; nothing nonnegative but 0.
    spec = graded([(1,), (1,)], torsion_orders=(2,), torsion=[(1,), (0,)])
    assert zero_subring_generators(spec).elements == ()
    spec = graded([(), ()], torsion_orders=(2,), torsion=[(1,), (1,)])
    assert set(zero_subring_generators(spec)) == {(2, 0), (1, 1), (0, 2)}


def test_zero_subring_generators_have_degree_zero():
    rng = random.Random(61)
    for _ in range(60):
        spec = random_spec(rng, kmax=5)
        tors = [(rng.randrange(3),) for _ in range(spec.k)]
        spec = graded([d.free for d in spec.degrees], torsion_orders=(3,), torsion=tors)
        zero = Multidegree((0,) * spec.s, (0,))
        for g in zero_subring_generators(spec):
            assert all(x >= 0 for x in g)
            assert degree_of_vector(spec, g) == zero


def test_veronese_examples():
    assert set(veronese_generators(doubled_line(), [(1,)])) == {(1, 0), (1, 1)}
    assert veronese_generators(p2(), [(-1,)]).elements == ()
    assert set(veronese_generators(p2(), [])) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_veronese_rejects_torsion():
    spec = graded([(1,), (1,)], torsion_orders=(2,), torsion=[(1,), (0,)])
    with pytest.raises(TorsionUnsupportedError):
        veronese_generators(spec, [(1,)])


def test_veronese_form_length_checked():
    with pytest.raises(ValueError):
        veronese_generators(p2(), [(1, 0)])


def test_veronese_at_zero_equals_zero_subring():
    rng = random.Random(62)
    for _ in range(60):
        spec = random_spec(rng, kmax=5)
        s = spec.s
        forms = [tuple(sgn * int(i == j) for j in range(s)) for i in range(s) for sgn in (1, -1)]
        assert veronese_generators(spec, forms) == zero_subring_generators(spec)


def test_relations_hold_and_are_primitive():
    hb = zero_subring_generators(determinantal(2, 2))
    rels = binomial_relations(hb, 4)
    assert len(rels) == 3
    for u in rels:
        assert relation_holds(hb, u)
        assert next(x for x in u if x) > 0
    assert rels == sorted(rels, reverse=True)


def test_single_generator_has_no_relations():
    assert binomial_relations(HilbertBasis(2, ((1, 1),)), 5) == []


def test_relation_bound_validation_and_ceiling():
    hb = zero_subring_generators(determinantal(3, 3))
    with pytest.raises(ValueError):
        binomial_relations(hb, 0)
    with pytest.raises(ResourceLimitError):
        binomial_relations(hb, 8, ceiling=1000)


def test_relation_holds_rejects_non_relations():
    hb = zero_subring_generators(determinantal(1, 2))
    assert not relation_holds(hb, (1, 0, 0, 0))
    assert not relation_holds(hb, (0, 0, 0, 0))
