import random
from fractions import Fraction

import pytest

from coble import covariants as cv
from coble.linalg import matmul, rational_rank
from coble.poly import sign_key

EXPECTED = {5: (1, 1), 4: (12, 6), 3: (40, 10), 2: (135, 15)}


def evaluation_rank(d: int, points: int, seed: int = 1) -> int:
    """Rank of covariant values at random points, each value a product of root-form values."""
    lat = cv.chart_for(d).lattice
    rng = random.Random(seed)
    pts = [[Fraction(rng.randint(-50, 50), rng.randint(1, 7)) for _ in range(lat.n)] for _ in range(points)]
    rows = []
    for c in cv.coble_covariants(d):
        row = []
        for p in pts:
            v = Fraction(1)
            for r in c.roots:
                v *= sum(Fraction(a) * x for a, x in zip(r[1:], p))
            row.append(v)
        rows.append(row)
    return rational_rank(rows)


@pytest.mark.parametrize("d", [5, 4, 3, 2])
def test_counts_degrees_and_distinctness(d):
    count, _ = EXPECTED[d]
    covs = cv.coble_covariants(d)
    assert len(covs) == count
    assert {c.degree for c in covs} == {cv.covariant_degree(d)}
    assert len({sign_key(c.poly) for c in covs}) == count


def test_degree_formula():
    assert [cv.covariant_degree(d) for d in (5, 4, 3, 2)] == [10, 10, 9, 7]


@pytest.mark.parametrize("d", [5, 4, 3, 2])
def test_span_dimension_agrees_with_evaluation_rank(d):
    count, dim = EXPECTED[d]
    assert cv.coble_basis(d).dimension == dim
    assert evaluation_rank(d, points=count + 10) == dim


@pytest.mark.parametrize("d", [4, 3, 2])
def test_covariants_are_weyl_stable_up_to_sign(d):
    assert cv.covariant_set_is_stable(d)


@pytest.mark.parametrize("d", [4, 3])
def test_representation_satisfies_coxeter_relations(d):
    mats = cv.representation_matrices(d)
    m = len(mats[0])
    ident = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
    for a in mats:
        assert matmul(a, a) == ident
    lat = cv.chart_for(d).lattice
    roots = lat.simple_roots
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            order = 3 if lat.pairing(roots[i], roots[j]) else 2
            p = matmul(mats[i], mats[j])
            acc = ident
            for _ in range(order):
                acc = matmul(acc, p)
            assert acc == ident


@pytest.mark.parametrize("d", [4, 3, 2])
def test_commutant_is_one_dimensional(d):
    assert cv.irreducibility_check(d) == 1


def test_central_element_negates_degree_two_covariants():
    assert all(cv.central_action_check().values())


def test_export_shape():
    data = cv.coble_basis(4).to_json()
    assert (data["d"], data["degree"], data["count"], data["dimension"]) == (4, 10, 12, 6)
    first = data["covariants"][0]
    assert set(first) >= {"vars", "terms", "provenance"}


def test_ab_relation_and_negative_control():
    assert cv.verify_AB_relation()
    assert not cv.verify_AB_relation(None)
    assert cv.ab_type_a_as_difference()


def test_s3_annihilation_rejects_repeated_indices():
    with pytest.raises(ValueError):
        cv.verify_s3_annihilation(cv.coble_covariants(2)[0].poly, [1, 1, 2])


@pytest.mark.slow
def test_s3_sweep():
    r = cv.s3_sweep()
    assert (r["covariants"], r["subsets"], r["annihilated"]) == (30, 35, 1050)


def test_s3_annihilation_negative_control():
    chart = cv.chart_for(2)
    t1, t2 = chart.gens[:2]
    assert not cv.verify_s3_annihilation(t1 ** 5 * t2 * t2, [1, 2, 3])
    # type-A covariants are differences of type-B ones, so they are annihilated as well
    keys = {c.subsystem.roots for c in cv.type_b_covariants()}
    type_a = next(c for c in cv.coble_covariants(2) if c.subsystem.roots not in keys)
    assert cv.verify_s3_annihilation(type_a.poly, [1, 2, 3])


def test_d4_relation_on_d5_and_e6():
    for d, n in ((4, 15), (3, 135)):
        r = cv.d4_relation_sweep(d)
        assert r == {"checked": n, "passed": n, "planes": True}


@pytest.mark.slow
def test_d4_relation_on_e7():
    assert cv.d4_relation_sweep(2) == {"checked": 945, "passed": 945, "planes": True}


def test_cross_sum_and_plane_decomposition():
    r = cv.cross_sum_sweep()
    assert r["systems"] == r["holds"] == 40 and r["injective"] and r["types"] == ["2A1+A2"]
    p = cv.d5_plane_decomposition()
    assert p.plane_ranks == [2] * 5 and all(p.sums_vanish)
    assert p.total_rank == 10
    assert p.pairwise_ranks == [4] * 10 and p.four_plane_ranks == [8] * 5


def test_cross_rejects_bad_alpha():
    chart = cv.chart_for(3)
    s = cv.subsystems(3, "3A2")[0]
    with pytest.raises(ValueError):
        cv.cross(chart, s, s.positive_roots[0])


def test_quintic_quotient_is_invariant():
    chart = cv.chart_for(3)
    four = cv.subsystems(3, "4A1")[0].positive_roots
    c = cv.cross_from_4A1(chart, four)
    q = cv.cross_quintic_quotient(chart, c.poly, four)
    assert q.invariant and q.quotient.is_homogeneous(5)
    assert cv.cross_pair_consistency(chart, four)


def test_restriction_quintics_form_one_orbit():
    r = cv.d3_restriction_quintics()
    assert r["orbit_size"] == 40 and r["family1"] + r["family2"] == 40
    assert r["family1_in_orbit"] and r["family2_in_orbit"] and r["sign_closed"]


def test_zero_loci():
    z6 = cv.zero_locus_check(3)
    assert z6["passed"] and z6["a3_count"] == 270


@pytest.mark.slow
def test_zero_loci_e7():
    fp = cv.zero_locus_check(2)
    assert fp["passed"] and (fp["d4_count"], fp["special_a5_count"]) == (315, 336)
