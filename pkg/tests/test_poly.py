from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from coble.poly import Polynomial, det, exact_divide, monomials, permutation_sign, signed_symmetrization

VARS = ("x", "y", "z")
SX = sympy.symbols(VARS)

coeffs = st.fractions(min_value=-20, max_value=20, max_denominator=7)
exponents = st.tuples(*[st.integers(0, 3)] * 3)
polys = st.dictionaries(exponents, coeffs, max_size=6).map(lambda t: Polynomial(VARS, t))


def to_sympy(p: Polynomial):
    return sympy.expand(sum((sympy.Rational(c.numerator, c.denominator)
                             * sympy.Mul(*[s ** k for s, k in zip(SX, e)]) for e, c in p.terms.items()),
                            sympy.Integer(0)))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == Polynomial.zero(VARS)


@given(polys, polys)
def test_product_matches_sympy(a, b):
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(polys, polys)
def test_exact_divide_recovers_factor(a, b):
    if b.is_zero():
        return
    assert exact_divide(a * b, b) == a


def test_exact_divide_reports_non_divisibility():
    x, y, _ = Polynomial.gens(VARS)
    assert exact_divide(x * x + y, x) is None


@given(polys)
def test_json_round_trip(a):
    assert Polynomial.from_json(a.to_json()) == a


def test_json_uses_decimal_strings():
    p = Polynomial(VARS, {(1, 0, 0): Fraction(-3, 7)})
    assert p.to_json() == {"vars": ["x", "y", "z"], "terms": [{"e": [1, 0, 0], "c": ["-3", "7"]}]}


@given(polys, st.lists(coeffs, min_size=3, max_size=3))
def test_evaluate_matches_sympy(a, point):
    expected = to_sympy(a).subs(dict(zip(SX, [sympy.Rational(v.numerator, v.denominator) for v in point])))
    assert a.evaluate(point) == Fraction(int(expected.p), int(expected.q))


@given(polys)
def test_derivative_matches_sympy(a):
    for i, s in enumerate(SX):
        assert sympy.expand(to_sympy(a.diff(i)) - sympy.diff(to_sympy(a), s)) == 0


def test_symbolic_determinant_matches_sympy():
    x, y, z = Polynomial.gens(VARS)
    rows = [[x, y, z], [y * y, x + z, y], [z, x * y, x - y + 1]]
    ours = to_sympy(det(rows))
    theirs = sympy.Matrix([[to_sympy(e) for e in r] for r in rows]).det()
    assert sympy.expand(ours - theirs) == 0


def test_monomial_count():
    assert len(monomials(7, 7)) == 1716


def test_signed_symmetrization_kills_alternating_only_when_symmetric():
    x, y, z = Polynomial.gens(VARS)
    assert signed_symmetrization(x * y + y * z + z * x, [0, 1, 2]).is_zero()
    assert not signed_symmetrization(x * x * y, [0, 1, 2]).is_zero()


def test_permutation_sign():
    assert permutation_sign([0, 1, 2], [1, 0, 2]) == -1
    assert permutation_sign([0, 1, 2], [1, 2, 0]) == 1


def test_mixing_rings_is_an_error():
    with pytest.raises(ValueError):
        Polynomial.gens(VARS)[0] + Polynomial.gens(("u", "v", "w"))[0]


def test_laurent_negative_exponents():
    p = Polynomial.variable(VARS, 0, laurent=True)
    q = Polynomial(VARS, {(-1, 0, 0): 1}, laurent=True)
    assert p * q == Polynomial.constant(VARS, 1, laurent=True)
