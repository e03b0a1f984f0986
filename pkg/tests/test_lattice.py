from itertools import product

import pytest
from hypothesis import given, strategies as st

from coble.lattice import (build_lattice, enumerate_subsystems, from_word, identity, labeled_root, make_subsystem,
                           reflect, root_label, s7_orbit_split, simple_reflections)

LATTICES = {d: build_lattice(d) for d in (5, 4, 3, 2)}


def orbit_closure(lat):
    """All roots as the Weyl orbit of e1 - e2 (every root system here is simply laced)."""
    seen = {labeled_root(lat, "h12")}
    frontier = list(seen)
    while frontier:
        nxt = []
        for r in frontier:
            for a in lat.simple_roots:
                img = reflect(lat, a, r)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
    return seen


@pytest.mark.parametrize("d,count", [(5, 20), (4, 40), (3, 72), (2, 126)])
def test_root_counts_match_orbit_oracle(d, count):
    lat = LATTICES[d]
    assert len(lat.roots) == count
    assert set(lat.roots) == orbit_closure(lat)
    assert len(lat.positive_roots) == count // 2


@pytest.mark.parametrize("d", [5, 4])
def test_root_counts_match_brute_force(d):
    lat = LATTICES[d]
    box = range(-3, 4)
    found = {v for v in product(box, repeat=lat.rank) if lat.is_root(v)}
    assert found == set(lat.roots)


@pytest.mark.parametrize("d", [5, 4, 3, 2])
def test_labels_round_trip(d):
    lat = LATTICES[d]
    for r in lat.roots:
        assert labeled_root(lat, root_label(lat, r)) == r


def test_bad_labels():
    lat = LATTICES[3]
    with pytest.raises(ValueError):
        labeled_root(lat, "h7")
    with pytest.raises(ValueError):
        labeled_root(lat, "h11")
    with pytest.raises(ValueError):
        build_lattice(6)


@given(st.sampled_from([5, 4, 3, 2]), st.lists(st.integers(0, 6), max_size=12), st.data())
def test_weyl_words_preserve_pairing_and_canonical_class(d, word, data):
    lat = LATTICES[d]
    word = [i % lat.n for i in word]
    w = from_word(lat, word)
    assert w.is_valid(lat)
    x = data.draw(st.sampled_from(lat.roots))
    y = data.draw(st.sampled_from(lat.roots))
    assert lat.pairing(w.apply(x), w.apply(y)) == lat.pairing(x, y)
    assert w.inverse(lat).apply(w.apply(x)) == x


def test_simple_roots_give_cartan_matrix_of_the_right_type():
    for d, name in ((5, "A4"), (4, "D5"), (3, "E6"), (2, "E7")):
        lat = LATTICES[d]
        assert lat.root_system_name == name
        full = make_subsystem(lat, lat.roots)
        assert full.label == name


def test_positive_roots_are_nonnegative_in_simple_coordinates():
    lat = LATTICES[2]
    for r in lat.positive_roots:
        coords = lat.simple_coordinates(r)
        assert all(c >= 0 for c in coords) and all(c.denominator == 1 for c in coords)


def test_reflections_are_involutions():
    lat = LATTICES[3]
    ident = identity(lat).m
    for s in simple_reflections(lat):
        assert (s * s).m == ident


@pytest.mark.parametrize("d,type_spec,count", [
    (3, "3A2", 40), (4, "D4", 5), (4, "2A1+A2", 40), (3, "A3", 270), (3, "4A1", 135)])
def test_subsystem_counts(d, type_spec, count):
    systems = enumerate_subsystems(LATTICES[d], type_spec)
    assert len(systems) == count
    assert all(s.label == type_spec for s in systems)


def test_4A1_inside_each_D4():
    lat = LATTICES[4]
    for d4 in enumerate_subsystems(lat, "D4"):
        assert len(enumerate_subsystems(lat, "4A1", d4)) == 3


@pytest.mark.slow
def test_7A1_in_E7_and_its_S7_split():
    lat = LATTICES[2]
    systems = enumerate_subsystems(lat, "7A1")
    assert len(systems) == 135
    a, b = s7_orbit_split(lat, systems)
    assert (len(a), len(b)) == (105, 30)
