"""Acceptance criteria, one PASS/FAIL line each.

Where a printed claim fails as stated, the criterion line reports FAIL for
the literal claim, the literal claim is kept as a strict xfail test, and the
corrected statement is asserted so that a regression in it still fails.
"""
import time
from collections import Counter
from fractions import Fraction

import pytest

from coble import configs, covariants as cv, cremona, cuspidal, naruki
from coble.lattice import _roots_for, build_lattice, enumerate_subsystems, orbits, permute_vector, s7_orbit_split
from coble.linalg import span_dimension


@pytest.fixture
def announce(capsys):
    def emit(number: int, ok: bool, summary: str) -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {summary}")
    return emit


# -- 1 ---------------------------------------------------------------------------

def test_criterion_01_root_counts(announce):
    counts, times = {}, {}
    for n in (4, 5, 6, 7):
        start = time.perf_counter()
        counts[n] = len(_roots_for.__wrapped__(n))
        times[n] = time.perf_counter() - start
    ok = counts == {4: 20, 5: 40, 6: 72, 7: 126} and max(times.values()) < 1
    announce(1, ok, f"root counts {counts}, slowest {max(times.values()):.3f}s")
    assert ok


# -- 2 ---------------------------------------------------------------------------

def test_criterion_02_subsystem_counts(announce):
    d5, e6, e7 = build_lattice(4), build_lattice(3), build_lattice(2)
    start = time.perf_counter()
    seven = enumerate_subsystems(e7, "7A1")
    e7_seconds = time.perf_counter() - start
    split = tuple(len(x) for x in s7_orbit_split(e7, seven))
    d4s = enumerate_subsystems(d5, "D4")
    got = {
        "3A2 in E6": len(enumerate_subsystems(e6, "3A2")),
        "7A1 in E7": len(seven),
        "S7 split": split,
        "4A1 in D4": sorted({len(enumerate_subsystems(d5, "4A1", x)) for x in d4s}),
        "D4 in D5": len(d4s),
        "2A1+A2 in D5": len(enumerate_subsystems(d5, "2A1+A2")),
    }
    want = {"3A2 in E6": 40, "7A1 in E7": 135, "S7 split": (105, 30), "4A1 in D4": [3],
            "D4 in D5": 5, "2A1+A2 in D5": 40}
    ok = got == want and e7_seconds < 180
    announce(2, ok, f"{got}, E7 enumeration {e7_seconds:.1f}s")
    assert ok


# -- 3 ---------------------------------------------------------------------------

def test_criterion_03_covariant_counts_two_routes(announce):
    # route (a): discriminants of subsystems and orbit generation
    route_a = {d: len(cv.coble_covariants(d)) for d in (5, 4, 3, 2)}
    split_a = {d: sorted(len(o) for o in _orbit_sets(d)) for d in (3, 2)}
    # route (b): combinatorial enumeration of factor products
    route_b = {d: len(configs.enumerate_structures(d)) for d in (5, 4, 3, 2)}
    split_b = {d: sorted(Counter(s.shape for s in configs.enumerate_structures(d)).values()) for d in (3, 2)}
    # agreement factor for factor: each structure is one discriminant times a Vandermonde factor
    agree = {}
    classes_match = True
    for d in (5, 4, 3, 2):
        results = [cuspidal.covariant_identity_check(d, s) for s in configs.enumerate_structures(d)]
        matched = {id(r.covariant) for r in results if r.holds}
        agree[d] = len(matched) == len(results) == route_a[d]
        if d in (3, 2):
            by_shape: dict = {}
            for s, r in zip(configs.enumerate_structures(d), results):
                by_shape.setdefault(s.shape, set()).add(frozenset(r.covariant.subsystem.roots))
            orbit_sets = _orbit_sets(d)
            classes_match &= sorted(map(frozenset, by_shape.values()), key=len) == \
                sorted(orbit_sets, key=len)
    expected = {5: 1, 4: 12, 3: 40, 2: 135}
    ok = (route_a == route_b == expected and split_a == split_b == {3: [10, 30], 2: [30, 105]}
          and all(agree.values()) and classes_match)
    announce(3, ok, f"route a {route_a} splits {split_a}; route b {route_b} splits {split_b}; "
                    f"factor-for-factor {agree}, split classes correspond: {classes_match}")
    assert ok


def _orbit_sets(d: int) -> list[frozenset]:
    """Orbits of the coordinate permutations on the subsystems behind the covariants."""
    lat = build_lattice(d)
    systems = cv.subsystems(d, "3A2" if d == 3 else "7A1")
    gens = []
    for i in range(lat.n - 1):
        p = list(range(lat.n))
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append(p)

    def act(p, roots):
        return frozenset(permute_vector(p, r) for r in roots)
    return [frozenset(frozenset(s.roots) for s in o) for o in orbits(list(systems), gens, act)]


# -- 4 ---------------------------------------------------------------------------

def test_criterion_04_span_dimensions(announce):
    dims, seconds = {}, {}
    for d in (5, 4, 3, 2):
        polys = [c.poly for c in cv.coble_covariants(d)]
        start = time.perf_counter()
        dims[d] = span_dimension(polys)
        seconds[d] = time.perf_counter() - start
    ok = dims == {5: 1, 4: 6, 3: 10, 2: 15} and seconds[2] < 180
    announce(4, ok, f"dimensions {dims}, fraction-free rank of the 135-row matrix in {seconds[2]:.1f}s")
    assert ok


# -- 5 ---------------------------------------------------------------------------

def test_criterion_05_degree_formula(announce):
    bad = [(d, i) for d in (5, 4, 3, 2) for i, c in enumerate(cv.coble_covariants(d))
           if not c.poly.is_homogeneous(d * (9 - d) // 2)]
    ok = not bad and [cv.covariant_degree(d) for d in (5, 4, 3, 2)] == [10, 10, 9, 7]
    announce(5, ok, f"every covariant homogeneous of degree d(9-d)/2; violations {bad}")
    assert ok


# -- 6 ---------------------------------------------------------------------------

def test_criterion_06_identities(announce):
    chart = cv.chart_for(3)
    fours = cv.subsystems(3, "4A1")
    quintics = 0
    for f in fours:
        c = cv.cross_from_4A1(chart, f.positive_roots)
        q = cv.cross_quintic_quotient(chart, c.poly, f.positive_roots)
        quintics += q.invariant and q.quotient.is_homogeneous(5)
    d4 = {d: cv.d4_relation_sweep(d) for d in (4, 3, 2)}
    s3 = cv.s3_sweep()
    cs = cv.cross_sum_sweep()
    conversions = cremona.worked_conversions()
    checks = {
        "det3": cuspidal.det3_identity().holds,
        "det6": cuspidal.det6_identity("uvw").holds and cuspidal.det6_identity("config").holds,
        "restriction set": set(cuspidal.restriction_degrees()) == {0, 1, 2, 3, 4, 5, 6, 7, 9},
        "AB": cv.verify_AB_relation() and not cv.verify_AB_relation(None),
        "d4 relation": all(r["checked"] == r["passed"] > 0 and r["planes"] for r in d4.values()),
        "S3 30x35": (s3["covariants"], s3["subsets"], s3["annihilated"]) == (30, 35, 1050),
        "cross sums 40": cs["systems"] == cs["holds"] == 40,
        "crosses/quintics": quintics == len(fours) and all(
            cv.cross_pair_consistency(chart, f.positive_roots) for f in fours),
        "factor table": all(cremona.factor_table().values()),
        "conversions up to sign": all(conversions.values()),
    }
    ok = all(checks.values())
    failed = [k for k, v in checks.items() if not v]
    announce(6, ok, f"{len(checks)} identity families exact, failed: {failed}; "
                    f"conversion signs {conversions} (the first is printed with a minus sign)")
    assert ok


# -- 7 ---------------------------------------------------------------------------

def test_criterion_07_zero_loci(announce):
    z6, fp = cv.zero_locus_check(3), cv.zero_locus_check(2)
    ok = z6["passed"] and fp["passed"]
    announce(7, ok, f"40 x {z6['a3_count']} A3 and 135 x ({fp['d4_count']} D4 + "
                    f"{fp['special_a5_count']} special A5) all meet; both disjoint witnesses hold")
    assert ok


# -- 8 ---------------------------------------------------------------------------

def test_criterion_08_representation_theory(announce):
    comm = {d: cv.irreducibility_check(d) for d in (3, 2)}
    central = cv.central_action_check()
    planes = cv.d5_plane_decomposition()
    ok = (comm == {3: 1, 2: 1} and all(central.values()) and planes.plane_ranks == [2] * 5
          and all(planes.sums_vanish) and planes.total_rank == 10)
    announce(8, ok, f"commutant dims {comm} (over Q), central element {central}, "
                    f"plane ranks {planes.plane_ranks} summing to {planes.total_rank}")
    assert ok


# -- 9 ---------------------------------------------------------------------------

def test_criterion_09_vector_fields(announce):
    e6, d5 = cuspidal.e6_field_report(), cuspidal.d5_field_report()
    frob = cuspidal.distribution_rank_check(samples=20, seed=0)
    literal = {
        "sigma formulas": cuspidal.sigma_formulas_symbolic() and cuspidal.sigma_formulas_solved(),
        "X invariant": e6["invariant"],
        "invariant field dim 1": e6["invariant_field_dimension"] == 1,
        "X = c grad f5": e6["proportional_to_gradient"],
        "X3 = c' grad f5": d5["x3_decomposes"],
        "X2 = a grad f4 + b f2 E": d5["x2_decomposes"],
        "rank <= 2": frob["plain_ok"],
    }
    corrected = {
        "sigma formulas": literal["sigma formulas"],
        "X invariant mod Euler": e6["invariant_mod_euler"],
        "invariant field dim 1": literal["invariant field dim 1"],
        "X = c grad f5 mod Euler, c = 11/9": e6["gradient_mod_euler"] == Fraction(11, 9),
        "X2 = a grad f4 mod Euler": d5["x2_mod_euler"] is not None,
        "X3 = -1/2 grad f5 + (s1/4) X2 mod Euler":
            d5["x3_mod_euler_and_x2"] == [Fraction(-1, 2)] + [Fraction(1, 4)] * 5,
        "rank{E, X2, X3, [X2, X3]} <= 3": frob["with_euler_ok"],
    }
    literal_failed = [k for k, v in literal.items() if not v]
    announce(9, not literal_failed,
             f"literal claims failing: {literal_failed}; corrected statements all hold: "
             f"{all(corrected.values())} (fields are invariant and gradient-like only modulo the Euler field)")
    assert all(corrected.values()), corrected


@pytest.mark.xfail(strict=True, reason="the tangent field is Weyl-invariant only modulo the Euler field")
def test_criterion_09_literal_invariance():
    assert cuspidal.e6_field_report()["invariant"]


@pytest.mark.xfail(strict=True, reason="the tangent field equals (11/9) grad f5 only modulo the Euler field")
def test_criterion_09_literal_gradient():
    assert cuspidal.e6_field_report()["proportional_to_gradient"]


@pytest.mark.xfail(strict=True, reason="D5 decompositions hold only modulo the Euler field")
def test_criterion_09_literal_d5_decompositions():
    r = cuspidal.d5_field_report()
    assert r["x2_decomposes"] and r["x3_decomposes"]


@pytest.mark.xfail(strict=True, reason="X2, X3 and their bracket span 3 dimensions; with Euler the rank is 3")
def test_criterion_09_literal_frobenius_rank():
    assert cuspidal.distribution_rank_check(samples=20, seed=0)["plain_ok"]


# -- 10 --------------------------------------------------------------------------

def test_criterion_10_naruki_table(announce):
    printed = naruki.naruki_table_check()
    fixed = naruki.naruki_table_check(naruki.corrected_table())
    w = fixed.worked_examples
    literal_ok = printed.ok and w["first_printed"] and w["second_printed"]
    corrected_ok = fixed.ok and w["first_intermediate"] and w["second_intermediate"] \
        and w["first_corrected"] and w["second_corrected"]
    announce(10, literal_ok,
             f"printed table {len(printed.matched)}/40 (unmatched {printed.unmatched}, entry "
             f"{printed.missing} is off by one power of delta); printed worked finals hold: "
             f"{w['first_printed'] and w['second_printed']}; division and b-balance clean for all 40; "
             f"corrected table 40/40 with both worked examples: {corrected_ok}")
    assert corrected_ok and not printed.division_failures and not printed.unbalanced


@pytest.mark.xfail(strict=True, reason="table entry 2 carries delta^2 where evaluation gives delta^3")
def test_criterion_10_literal_table():
    assert naruki.naruki_table_check().ok


@pytest.mark.xfail(strict=True, reason="both printed worked finals disagree with their own intermediate lines")
def test_criterion_10_literal_worked_examples():
    w = naruki.worked_examples()
    assert w["first_printed"] and w["second_printed"]


# -- 11 --------------------------------------------------------------------------

def test_criterion_11_degree_five(announce):
    r = configs.degree5_explicit_check()
    span_ok = r["count"] == 12 and r["cubic"] and r["span"] == 6 and r["generators_independent"] \
        and r["inside_generator_span"]
    announce(11, span_ok and r["worked_product_printed"],
             f"12 cubics spanning the 6-dim space of z0z1z2 - zi^2 zj: {span_ok}; worked product equals "
             f"z0z1z2 - z1^2 z2: {r['worked_product_printed']} (its own factors multiply to "
             f"z0z1z2 - z0 z2^2: {r['worked_product']})")
    assert span_ok and r["worked_factors"] and r["worked_product"]


@pytest.mark.xfail(strict=True, reason="the printed factors multiply to z0z1z2 - z0z2^2")
def test_criterion_11_literal_worked_product():
    assert configs.degree5_explicit_check()["worked_product_printed"]


# -- 12 --------------------------------------------------------------------------

def test_criterion_12_cross_ratio_and_sampling(announce):
    symbolic = all(cuspidal.cross_ratio_check(5, 5).values()) and all(cuspidal.cross_ratio_check(7, 6).values())
    sep = {d: configs.separation_experiment(d, pairs=10, seed=0) for d in (3, 2)}
    moved = {d: configs.transform_experiment(d, trials=10, seed=0) for d in (3, 2)}
    ok = symbolic and all(s["separated"] == 10 for s in sep.values()) \
        and all(m["proportional"] == 10 for m in moved.values())
    announce(12, ok, f"cross ratio symbolic: {symbolic}; [evidence: sampling] separated "
                     f"{ {d: s['separated'] for d, s in sep.items()} } of 10 pairs, proportional under "
                     f"{ {d: m['proportional'] for d, m in moved.items()} } of 10 transformations")
    assert ok
