import itertools
import random

import pytest

from multiproj import (
    Monomial,
    irrelevant_radical_generators,
    is_relevant_monomial,
    is_relevant_support,
    minimal_relevant_supports,
)
from multiproj.errors import ResourceLimitError
from multiproj.relevance import parse_support, support_names

from _builders import doubled_line, graded, p2, random_spec, z2_example


def test_doubled_line():
    spec = doubled_line()
    assert minimal_relevant_supports(spec).minimal_supports == ((0,), (1,))
    assert not is_relevant_support(spec, ())


def test_p1_x_p1_irrelevant_ideal():
    spec = graded([(1, 0), (1, 0), (0, 1), (0, 1)], ["x0", "x1", "y0", "y1"])
    gens = irrelevant_radical_generators(spec)
    names = [support_names(spec, m.support) for m in gens]
    assert names == [("x0", "y0"), ("x0", "y1"), ("x1", "y0"), ("x1", "y1")]


def test_z2_example_supports():
    spec = z2_example()
    fam = minimal_relevant_supports(spec).minimal_supports
    assert len(fam) == 24
    assert parse_support(spec, "X1,Z") in fam
    assert not is_relevant_support(spec, parse_support(spec, "Z"))


def test_zero_free_rank_everything_relevant():
    spec = graded([(), ()], torsion_orders=(2,), torsion=[(1,), (0,)])
    assert spec.s == 0
    assert minimal_relevant_supports(spec).minimal_supports == ((),)
    assert is_relevant_monomial(spec, Monomial((0, 0)))


def test_degrees_not_spanning():
    spec = graded([(1, 0), (2, 0)])
    assert minimal_relevant_supports(spec).minimal_supports == ()
    assert irrelevant_radical_generators(spec) == []


def test_relevant_monomial():
    spec = p2()
    assert is_relevant_monomial(spec, Monomial((0, 3, 0)))
    assert not is_relevant_monomial(spec, Monomial((0, 0, 0)))
    with pytest.raises(ValueError):
        is_relevant_monomial(spec, Monomial((1, 0)))


def test_cap_on_variables():
    spec = graded([(1,)] * 6)
    with pytest.raises(ResourceLimitError):
        minimal_relevant_supports(spec, max_vars=5)


def test_parse_support_unknown_name():
    with pytest.raises(KeyError):
        parse_support(p2(), "w")


def _brute_minimal(spec):
    rel = [
        J
        for size in range(spec.k + 1)
        for J in itertools.combinations(range(spec.k), size)
        if is_relevant_support(spec, J)
    ]
    return sorted(J for J in rel if not any(set(I) < set(J) for I in rel))


def test_minimal_supports_match_brute_force():
    rng = random.Random(11)
    for _ in range(150):
        spec = random_spec(rng, kmax=8, smax=3, lo=-2, hi=2)
        assert list(minimal_relevant_supports(spec).minimal_supports) == _brute_minimal(spec)


def test_relevance_is_upward_closed():
    rng = random.Random(12)
    for _ in range(50):
        spec = random_spec(rng)
        for size in range(spec.k + 1):
            for J in itertools.combinations(range(spec.k), size):
                if is_relevant_support(spec, J):
                    for i in range(spec.k):
                        assert is_relevant_support(spec, tuple(sorted(set(J) | {i})))


def test_torsion_does_not_change_relevance():
    rng = random.Random(13)
    for _ in range(50):
        spec = random_spec(rng)
        tors = [(rng.randrange(3),) for _ in range(spec.k)]
        twisted = graded([d.free for d in spec.degrees], torsion_orders=(3,), torsion=tors)
        assert (
            minimal_relevant_supports(spec).minimal_supports
            == minimal_relevant_supports(twisted).minimal_supports
        )
