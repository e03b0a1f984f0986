import pytest

from coble import cremona, naruki
from coble.poly import Polynomial


def test_configuration_identities():
    assert all(naruki.simple_identities().values())


def test_torus_map_requires_balanced_b_exponents():
    b0 = Polynomial.variable(naruki.CONFIG_VARS, 0, laurent=True)
    b1 = Polynomial.variable(naruki.CONFIG_VARS, 1, laurent=True)
    b2 = Polynomial.variable(naruki.CONFIG_VARS, 2, laurent=True)
    assert naruki.to_torus(b0) is None
    delta = Polynomial.variable(naruki.TORUS_VARS, 3, laurent=True)
    assert naruki.to_torus(b0 * b1 * b2) == -delta


def test_printed_table_misses_one_entry():
    r = naruki.naruki_table_check()
    assert not r.ok
    assert len(r.matched) == 39 and r.missing == ["2"]
    assert r.unmatched == ["|124||136||145||235||256||346|"]
    assert not r.division_failures and not r.unbalanced


def test_corrected_table_matches_all_forty():
    r = naruki.naruki_table_check(naruki.corrected_table())
    assert r.ok and r.evaluated == 40
    assert sorted(r.matched.values()) == sorted(naruki.corrected_table())


def test_worked_examples():
    w = naruki.worked_examples()
    assert w["first_intermediate"] and w["second_intermediate"]
    assert w["first_corrected"] and w["second_corrected"]
    assert not w["first_printed"] and not w["second_printed"]


def test_factor_substitution_table():
    assert all(cremona.factor_table().values())


def test_worked_conversions_hold_with_plus_sign():
    assert cremona.worked_conversions() == {"six_triples": 1, "triple_triple_six": 1}


def test_every_structure_moves_by_the_quadratic_transformation():
    s = cremona.cremona_sweep()
    assert s.ok and s.checked == 40


@pytest.mark.parametrize("n", [6, 7])
def test_frames_have_the_right_size(n):
    old, new = cremona.frames(n)
    assert len(old) == len(new) == n
