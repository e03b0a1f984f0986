"""Named verification suites, each a list of exact checks with witnesses.

A check recorded with ``expect_false`` is a printed claim that fails as
stated; the corrected statement is always checked alongside it.
"""
from __future__ import annotations

from typing import Callable

from . import configs, covariants, cremona, cuspidal, naruki
from .lattice import build_lattice, enumerate_subsystems, s7_orbit_split
from .reports import VerificationReport, timed


def roots_suite(report: VerificationReport, seed: int) -> None:
    counts = {9 - d: len(build_lattice(d).roots) for d in (5, 4, 3, 2)}
    report.check("root_counts", counts == {4: 20, 5: 40, 6: 72, 7: 126}, counts)
    e6, e7 = covariants.subsystems(3, "3A2"), covariants.subsystems(2, "7A1")
    report.check("3A2_in_E6", len(e6) == 40, len(e6))
    report.check("7A1_in_E7", len(e7) == 135, len(e7))
    a, b = s7_orbit_split(build_lattice(2), list(e7))
    report.check("7A1_s7_split", (len(a), len(b)) == (105, 30), [len(a), len(b)])
    d5 = build_lattice(4)
    d4s = covariants.subsystems(4, "D4")
    report.check("D4_in_D5", len(d4s) == 5, len(d4s))
    inner = sorted({len(enumerate_subsystems(d5, "4A1", x)) for x in d4s})
    report.check("4A1_in_D4", inner == [3], inner)
    mixed = len(enumerate_subsystems(d5, "2A1+A2"))
    report.check("2A1+A2_in_D5", mixed == 40, mixed)


def covariants_suite(report: VerificationReport, seed: int) -> None:
    expected = {5: (1, 1), 4: (12, 6), 3: (40, 10), 2: (135, 15)}
    for d, (count, dim) in expected.items():
        space = covariants.coble_basis(d)
        degrees = {c.degree for c in space.covariants}
        report.check(f"count_d{d}", len(space.covariants) == count, len(space.covariants))
        report.check(f"span_d{d}", space.dimension == dim, space.dimension)
        report.check(f"degree_d{d}", degrees == {covariants.covariant_degree(d)}, sorted(degrees))
        shapes = sorted({s.shape for s in configs.enumerate_structures(d)})
        n_struct = len(configs.enumerate_structures(d))
        report.check(f"structures_d{d}", n_struct == count, {"count": n_struct, "shapes": shapes})
        sweep = cuspidal.covariant_identity_sweep(d)
        ok = sweep["structures"] == sweep["identities"] == sweep["discriminants"] == count
        report.check(f"structures_match_discriminants_d{d}", ok and sweep["bijective"], sweep)
    split3 = _shape_split(3)
    report.check("d3_split", split3 == {(6, 0): 30, (2, 1): 10}, split3)
    split2 = _shape_split(2)
    report.check("d2_split", sorted(split2.values()) == [30, 105], split2)


def _shape_split(d: int) -> dict:
    out: dict = {}
    for s in configs.enumerate_structures(d):
        out[s.shape] = out.get(s.shape, 0) + 1
    return out


def z6_suite(report: VerificationReport, seed: int) -> None:
    r = covariants.zero_locus_check(3)
    report.check("3A2_meets_every_A3", r["sweep"], {"a3": r["a3_count"]})
    report.check("disjoint_witness", r["witness_disjoint"], r["witness_types"])


def fixpart_suite(report: VerificationReport, seed: int) -> None:
    r = covariants.zero_locus_check(2)
    report.check("7A1_meets_every_D4", r["sweep_d4"], {"d4": r["d4_count"]})
    report.check("7A1_meets_every_special_A5", r["sweep_special_a5"], {"a5": r["special_a5_count"]})
    report.check("disjoint_witness", r["witness_disjoint"], r["witness_type"])


def crosssum_suite(report: VerificationReport, seed: int) -> None:
    r = covariants.cross_sum_sweep()
    report.check("intersections_are_2A1+A2", r["types"] == ["2A1+A2"], r["types"])
    report.check("cross_sum_all_systems", r["systems"] == r["holds"] == 40, r)
    report.check("intersection_injective", r["injective"] and r["d5_2A1+A2"] == 40, r["d5_2A1+A2"])


def d4_suite(report: VerificationReport, seed: int) -> None:
    for d in (4, 3, 2):
        r = covariants.d4_relation_sweep(d)
        report.check(f"d4_relation_d{d}", r["checked"] == r["passed"] > 0 and r["planes"], r)


def ab_suite(report: VerificationReport, seed: int) -> None:
    report.check("relation_AB", covariants.verify_AB_relation())
    report.check("identity_swap_fails", not covariants.verify_AB_relation(None))
    report.check("type_a_is_difference_of_type_b", covariants.ab_type_a_as_difference())


def s3_suite(report: VerificationReport, seed: int) -> None:
    r = covariants.s3_sweep()
    report.check("type_b_count", r["covariants"] == 30, r["covariants"])
    report.check("all_annihilated", r["annihilated"] == r["covariants"] * r["subsets"] == 30 * 35, r)


def quintic_suite(report: VerificationReport, seed: int) -> None:
    chart = covariants.chart_for(3)
    fours = covariants.subsystems(3, "4A1")
    pairs = sum(covariants.cross_pair_consistency(chart, f.positive_roots) for f in fours)
    report.check("cross_independent_of_alpha", pairs == len(fours), {"4A1": len(fours), "ok": pairs})
    inv = divisible = 0
    for f in fours:
        c = covariants.cross_from_4A1(chart, f.positive_roots)
        try:
            q = covariants.cross_quintic_quotient(chart, c.poly, f.positive_roots)
        except ArithmeticError:
            continue
        divisible += 1
        inv += q.invariant and q.quotient.is_homogeneous(5)
    report.check("cross_divisible", divisible == len(fours), divisible)
    report.check("quotient_is_D4_invariant_quintic", inv == len(fours), inv)
    r = covariants.d3_restriction_quintics()
    report.check("restriction_quintics_one_orbit",
                 r["family1_in_orbit"] and r["family2_in_orbit"] and r["sign_closed"], r)


def det_identities_suite(report: VerificationReport, seed: int) -> None:
    r = cuspidal.det3_identity()
    report.check("det3_cuspidal", r.holds, {"sign": r.sign})
    for basis in ("uvw", "config"):
        r = cuspidal.det6_identity(basis)
        report.check(f"det6_cuspidal_{basis}", r.holds, {"sign": r.sign})
    degs = cuspidal.restriction_degrees()
    report.check("restriction_degrees", set(degs) == {0, 1, 2, 3, 4, 5, 6, 7, 9}, sorted(degs))
    for d in (5, 4):
        ok = all(cuspidal.covariant_identity_check(d, s, expand=True).holds
                 for s in configs.enumerate_structures(d))
        report.check(f"covariant_identity_expanded_d{d}", ok)


def vector_fields_suite(report: VerificationReport, seed: int) -> None:
    report.check("sigma_formulas_symbolic", cuspidal.sigma_formulas_symbolic())
    report.check("sigma_formulas_solved", cuspidal.sigma_formulas_solved(seed=seed))
    e6 = cuspidal.e6_field_report()
    report.check("e6_field_homogeneous", e6["homogeneous_degree_4"])
    report.expect_false("e6_field_invariant_literal", e6["invariant"])
    report.check("e6_field_invariant_mod_euler", e6["invariant_mod_euler"])
    report.check("e6_invariant_field_dimension", e6["invariant_field_dimension"] == 1,
                 e6["invariant_field_dimension"])
    report.expect_false("e6_field_proportional_to_gradient_literal", e6["proportional_to_gradient"])
    report.check("e6_field_gradient_mod_euler", e6["gradient_mod_euler"] is not None,
                 {"c": e6["gradient_mod_euler"], "h": e6["euler_cofactor"]})
    d5 = cuspidal.d5_field_report()
    report.check("d5_invariant_field_dimensions",
                 (d5["invariant_fields_deg3"], d5["invariant_fields_deg4"]) == (2, 1),
                 [d5["invariant_fields_deg3"], d5["invariant_fields_deg4"]])
    report.check("d5_x2_invariant_mod_euler", d5["x2_invariant_mod_euler"])
    report.expect_false("d5_x2_gradient_plus_f2_euler_literal", d5["x2_decomposes"])
    report.expect_false("d5_x3_gradient_literal", d5["x3_decomposes"])
    report.check("d5_x2_gradient_mod_euler", d5["x2_mod_euler"] is not None, d5["x2_mod_euler"])
    report.check("d5_x3_gradient_and_x2_mod_euler", d5["x3_mod_euler_and_x2"] is not None,
                 d5["x3_mod_euler_and_x2"])
    report.check("d5_specializes_e6_field", d5["specialization"])
    r = cuspidal.distribution_rank_check(samples=20, seed=seed)
    report.expect_false("frobenius_rank_le_2_literal", r["plain_ok"], r["plain"])
    report.check("frobenius_rank_le_3_with_euler", r["with_euler_ok"], r["with_euler"])


def naruki_suite(report: VerificationReport, seed: int) -> None:
    ids = naruki.simple_identities()
    report.check("configuration_identities", all(ids.values()), ids)
    printed = naruki.naruki_table_check()
    report.expect_false("printed_table_40_of_40", printed.ok,
                        {"matched": len(printed.matched), "unmatched": printed.unmatched,
                         "missing": printed.missing})
    fixed = naruki.naruki_table_check(naruki.corrected_table())
    report.check("corrected_table_40_of_40", fixed.ok,
                 {"matched": len(fixed.matched), "division_failures": len(fixed.division_failures),
                  "unbalanced": len(fixed.unbalanced)})
    w = fixed.worked_examples
    report.check("worked_intermediate_lines", w["first_intermediate"] and w["second_intermediate"])
    report.expect_false("worked_printed_finals", w["first_printed"] or w["second_printed"])
    report.check("worked_corrected_finals", w["first_corrected"] and w["second_corrected"])


def degree5_suite(report: VerificationReport, seed: int) -> None:
    r = configs.degree5_explicit_check()
    report.check("twelve_cubics", r["count"] == 12 and r["cubic"])
    report.check("span_dimension_6", r["span"] == 6, r["span"])
    report.check("generators_independent", r["generators_independent"])
    report.check("inside_generator_span", r["inside_generator_span"])
    report.check("worked_factors", r["worked_factors"] and r["det125"] and r["det145"])
    report.expect_false("worked_product_printed", r["worked_product_printed"])
    report.check("worked_product_recomputed", r["worked_product"])


def irreducibility_suite(report: VerificationReport, seed: int) -> None:
    for d in (4, 3, 2):
        dim = covariants.irreducibility_check(d)
        report.check(f"commutant_d{d}", dim == 1, dim)
    c = covariants.central_action_check()
    report.check("central_element_negates", all(c.values()), c)
    p = covariants.d5_plane_decomposition()
    report.check("five_planes", p.plane_ranks == [2] * 5 and all(p.sums_vanish),
                 {"ranks": p.plane_ranks, "sums_vanish": p.sums_vanish})
    report.check("planes_direct_sum", p.total_rank == 10, p.total_rank)


def weyl_transform_suite(report: VerificationReport, seed: int) -> None:
    table = cremona.factor_table()
    report.check("factor_substitution_table", all(table.values()), table)
    conv = cremona.worked_conversions()
    report.check("worked_conversions_up_to_sign", all(conv.values()), conv)
    report.expect_false("six_triple_conversion_minus_delta", conv["six_triples"] == -1)
    sweep = cremona.cremona_sweep()
    report.check("all_d3_structures_move_by_h123", sweep.ok, vars(sweep))


def cross_ratio_suite(report: VerificationReport, seed: int) -> None:
    for n, i in ((5, 5), (7, 6)):
        r = cuspidal.cross_ratio_check(n, i)
        report.check(f"cross_ratio_symbolic_n{n}", all(r.values()), r)
    lhs, rhs = cuspidal.cross_ratio_numeric([0, 1, 2, 3, 5])
    report.check("cross_ratio_numeric", lhs == rhs, [lhs, rhs])
    for d in (3, 2):
        t = configs.transform_experiment(d, trials=10, seed=seed)
        report.check(f"projective_transform_d{d}", t["proportional"] == t["trials"], t)
        s = configs.separation_experiment(d, pairs=10, seed=seed)
        report.check(f"separation_d{d}", s["separated"] == s["pairs"], s)


SUITES: dict[str, Callable[[VerificationReport, int], None]] = {
    "roots": roots_suite,
    "covariants": covariants_suite,
    "z6": z6_suite,
    "fixpart": fixpart_suite,
    "crosssum": crosssum_suite,
    "d4": d4_suite,
    "ab": ab_suite,
    "s3": s3_suite,
    "quintic": quintic_suite,
    "det-identities": det_identities_suite,
    "vector-fields": vector_fields_suite,
    "naruki": naruki_suite,
    "degree5": degree5_suite,
    "irreducibility": irreducibility_suite,
    "weyl-transform": weyl_transform_suite,
    "cross-ratio": cross_ratio_suite,
}


def run_suite(name: str, seed: int = 0) -> VerificationReport:
    if name not in SUITES:
        raise KeyError(name)
    report = VerificationReport(name)
    with timed(report):
        SUITES[name](report, seed)
    return report
