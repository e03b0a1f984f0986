from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from coble import configs as cf

small = st.fractions(min_value=-9, max_value=9, max_denominator=4)
point = st.tuples(small, small, small).filter(lambda p: any(p))
matrix = st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3)


def config_strategy(n):
    return st.lists(point, min_size=n, max_size=n).filter(_distinct).map(cf.PointConfig.rational)


def _distinct(pts):
    for p, q in combinations(pts, 2):
        if all(p[a] * q[b] == p[b] * q[a] for a, b in ((0, 1), (0, 2), (1, 2))):
            return False
    return True


def brute_force_structures(n):
    """Factor sets with det-weight n, point weight 3 and full pair coverage, by plain search."""
    triples = list(combinations(range(1, n + 1), 3))
    sixes = list(combinations(range(1, n + 1), 6))
    found = set()
    for k6 in range(n // 4 + 1):
        k3 = n - 4 * k6
        for six in combinations(sixes, k6):
            for tri in combinations(triples, k3):
                fs = tri + six
                w = Counter(i for f in fs for i in f for _ in range(1 if len(f) == 3 else 2))
                pairs = {p for f in fs for p in combinations(f, 2)}
                if all(w[i] == 3 for i in range(1, n + 1)) and len(pairs) == n * (n - 1) // 2:
                    found.add(frozenset(fs))
    return found


@pytest.mark.parametrize("d", [5, 4, 3])
def test_enumeration_matches_brute_force(d):
    mine = {frozenset(s.factors) for s in cf.enumerate_structures(d)}
    assert mine == brute_force_structures(9 - d)


def test_counts_and_splits():
    assert [len(cf.enumerate_structures(d)) for d in (5, 4, 3, 2)] == [1, 12, 40, 135]
    shapes = Counter(s.shape for s in cf.enumerate_structures(2))
    # seven triples covering every pair once are the Fano planes on seven labels: 7!/168
    assert shapes == {(7, 0): 30, (3, 1): 105}
    assert Counter(s.shape for s in cf.enumerate_structures(3)) == {(6, 0): 30, (2, 1): 10}


def test_repeated_factors_are_excluded_by_default():
    assert len(cf.enumerate_structures(4, distinct=False)) == 22
    extras = set(cf.enumerate_structures(4, distinct=False)) - set(cf.enumerate_structures(4))
    assert all(len(set(s.factors)) < len(s.factors) for s in extras)


@pytest.mark.parametrize("d", [5, 4, 3, 2])
def test_structures_validate(d):
    for s in cf.enumerate_structures(d):
        s.validate()
        assert len(s.pair_multiplicities()) == s.n * (s.n - 1) // 2


@pytest.mark.parametrize("d,factors", [
    (4, ((1, 2, 3), (1, 2, 4), (1, 2, 5), (3, 4, 5), (1, 4, 5))),           # weights
    (3, ((1, 2, 3),) * 3 + ((4, 5, 6),) * 3),                               # pair 14 uncovered
    (3, ((1, 2, 2), (3, 4, 5))),                                            # malformed factor
])
def test_invalid_structure_is_rejected(d, factors):
    with pytest.raises(ValueError):
        cf.CovariantStructure(d, factors).validate()


def test_det3_and_det6_match_sympy():
    pts = [[1, 2, 3], [0, 1, -4], [5, -2, 1], [2, 2, 7], [-3, 1, 1], [4, 0, 9]]
    c = cf.PointConfig.rational(pts)
    m = sympy.Matrix([pts[0], pts[3], pts[4]])
    assert cf.det3(c, 1, 4, 5) == m.det()
    q = sympy.Matrix([[x * x, y * y, z * z, y * z, z * x, x * y] for x, y, z in pts])
    assert cf.det6(c, 1, 2, 3, 4, 5, 6) == q.det()


def test_repeated_index_rejected():
    c = cf.PointConfig.rational([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    with pytest.raises(ValueError):
        cf.det3(c, 1, 1, 2)


def test_bad_points_rejected():
    with pytest.raises(ValueError):
        cf.PointConfig.rational([[0, 0, 0]])
    with pytest.raises(ValueError):
        cf.PointConfig.rational([[1, 2, 3], [2, 4, 6]])
    with pytest.raises(ValueError):
        cf.PointConfig.rational([[1, 2]])


@given(config_strategy(5))
def test_json_round_trip(c):
    assert cf.PointConfig.from_json(c.to_json()) == c


@given(st.sampled_from([5, 4, 3]), st.data(), matrix)
def test_projective_covariance(d, data, g):
    g = [[Fraction(x) for x in r] for r in g]
    dg = cf.determinant(g)
    assume(dg != 0)
    c = data.draw(config_strategy(9 - d))
    moved = c.transform(g)
    s = data.draw(st.sampled_from(cf.enumerate_structures(d)))
    assert cf.evaluate(moved, s) == dg ** (9 - d) * cf.evaluate(c, s)


@given(st.sampled_from([5, 4, 3]), st.data(), small.filter(bool))
def test_rescaling_a_point_scales_by_its_cube(d, data, lam):
    c = data.draw(config_strategy(9 - d))
    i = data.draw(st.integers(0, 8 - d))
    pts = [list(p) for p in c.points]
    pts[i] = [lam * x for x in pts[i]]
    scaled = cf.PointConfig.rational(pts)
    for s in cf.enumerate_structures(d):
        assert cf.evaluate(scaled, s) == lam ** 3 * cf.evaluate(c, s)


def test_collinear_triple_kills_exactly_the_structures_containing_it():
    c = cf.PointConfig.rational([[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 1, 1], [2, 3, 7]])
    assert cf.genericity_check(c)["collinear_triples"] == [(1, 2, 3)]
    for s in cf.enumerate_structures(4):
        assert (cf.evaluate(c, s) == 0) == ((1, 2, 3) in s.factors)


def test_covariant_vector_flags_and_length():
    import random
    c = cf.random_config(random.Random(3), 6)
    v, zero = cf.covariant_vector(c, 3)
    assert len(v) == 40 and not zero and v[next(i for i, x in enumerate(v) if x)] == 1
    with pytest.raises(ValueError):
        cf.covariant_vector(c, 4)


def test_degree5_explicit():
    r = cf.degree5_explicit_check()
    assert r["count"] == 12 and r["cubic"] and r["span"] == 6
    assert r["generators_independent"] and r["inside_generator_span"]
    assert r["worked_factors"] and r["worked_product"] and r["det125"] and r["det145"]
    assert not r["worked_product_printed"]


def test_sampling_experiments():
    assert cf.transform_experiment(3, trials=4, seed=5)["proportional"] == 4
    assert cf.separation_experiment(3, pairs=4, seed=5)["separated"] == 4


def test_cross_ratio_invariants_are_projective():
    import random
    rng = random.Random(7)
    c = cf.random_config(rng, 6)
    g = cf.random_transform(rng)
    assert cf.cross_ratio_invariants(c) == cf.cross_ratio_invariants(c.transform(g))
