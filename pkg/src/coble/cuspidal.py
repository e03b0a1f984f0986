"""Points on the cuspidal cubic u^2 w = v^3 and what Coble factors become there.

A point with parameter t is [1 : t : t^3]; three such points are collinear
exactly when their parameters sum to zero.  On these points every Coble
factor is a product of linear forms, which lets covariant identities be
certified factor by factor instead of by expansion.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .chart import TChart
from .configs import (CovariantStructure, PointConfig, det3, determinant, enumerate_structures, evaluate,
                      structure_roots)
from .covariants import Covariant, chart_for, coble_covariants, normalize_roots
from .fields import (PolyVectorField, decompose, elementary_symmetric, gradient_field, invariant_fields,
                     invariant_mod_euler, invariant_polynomial_basis, is_invariant)
from .lattice import labeled_root
from .linalg import rational_rank, solve
from .poly import Polynomial, product


@dataclass(frozen=True)
class IdentityResult:
    name: str
    holds: bool
    sign: int = 1


def cuspidal_point(t):
    """Homogeneous coordinates (1, t, t^3) in the (u, v, w) frame."""
    return (t ** 0 if isinstance(t, Polynomial) else Fraction(1), t, t ** 3)


def on_cubic(p) -> bool:
    u, v, w = p
    return u * u * w == v ** 3


def cuspidal_config(params) -> PointConfig:
    pts = []
    for t in params:
        u, v, w = cuspidal_point(t)
        if isinstance(t, Polynomial):
            u = Polynomial.constant(t.vars, 1)
        pts.append((u, v, w))
    ring = "polynomial" if isinstance(params[0], Polynomial) else "rational"
    return PointConfig(tuple(pts), ring)


def vandermonde(ts) -> Polynomial | Fraction:
    """prod_{a<b} (t_a - t_b) in the given order."""
    return product([ts[a] - ts[b] for a, b in combinations(range(len(ts)), 2)], ts[0].vars) \
        if isinstance(ts[0], Polynomial) else _fprod(ts[a] - ts[b] for a, b in combinations(range(len(ts)), 2))


def _fprod(xs) -> Fraction:
    out = Fraction(1)
    for x in xs:
        out *= x
    return out


def _signed_match(lhs, rhs) -> int:
    return 1 if lhs == rhs else -1 if lhs == -rhs else 0


def det3_identity() -> IdentityResult:
    """det of rows (1, t, t^3) = Delta(t_i, t_j, t_k) * (-(t_i + t_j + t_k))."""
    ts = Polynomial.gens(("ti", "tj", "tk"))
    lhs = determinant([cuspidal_config(ts).points[i] for i in range(3)])
    rhs = vandermonde(ts) * -(ts[0] + ts[1] + ts[2])
    s = _signed_match(lhs, rhs)
    return IdentityResult("det3", s == 1, s)


def quadric_row_uvw(p) -> list:
    """Quadratic monomials in the order u^2, uv, uw, v^2, vw, w^2."""
    u, v, w = p
    return [u * u, u * v, u * w, v * v, v * w, w * w]


def det6_identity(basis: str = "uvw") -> IdentityResult:
    """6x6 determinant of squared coordinates = sign * (sum t) * Delta(t).

    ``basis`` picks the monomial order: "uvw" for (u^2, uv, uw, v^2, vw, w^2)
    or "config" for the (x^2, y^2, z^2, yz, zx, xy) order used by det6.
    """
    from .configs import det6

    ts = Polynomial.gens(tuple(f"s{i}" for i in range(1, 7)))
    cfg = cuspidal_config(ts)
    if basis == "uvw":
        lhs = determinant([quadric_row_uvw(p) for p in cfg.points])
    else:
        lhs = det6(cfg, 1, 2, 3, 4, 5, 6)
    rhs = sum(ts, Polynomial.zero(ts[0].vars)) * vandermonde(ts)
    s = _signed_match(lhs, rhs)
    return IdentityResult(f"det6[{basis}]", s != 0, s)


def restriction_degree(a: int, b: int, c: int) -> int:
    """Degree in t of u^a v^b w^c restricted to the cubic."""
    if min(a, b, c) < 0 or a + b + c != 3:
        raise ValueError("need a cubic monomial")
    return b + 3 * c


def restriction_degrees() -> Counter:
    return Counter(restriction_degree(a, b, 3 - a - b) for a in range(4) for b in range(4 - a))


# -- covariant identities ----------------------------------------------------------

@lru_cache(maxsize=None)
def _det6_sign() -> int:
    return det6_identity("config").sign


def factor_forms(chart: TChart, structure: CovariantStructure) -> tuple[int, list[Polynomial]]:
    """sign and linear forms whose product is the structure on cuspidal points."""
    t = chart.gens
    sign, forms = 1, []
    for f in structure.factors:
        ts = [t[i - 1] for i in f]
        forms += [ts[a] - ts[b] for a, b in combinations(range(len(ts)), 2)]
        if len(f) == 3:
            forms.append(-(ts[0] + ts[1] + ts[2]))
        else:
            sign *= _det6_sign()
            forms.append(sum(ts, Polynomial.zero(chart.vars)))
    return sign, forms


def _normalized(forms) -> tuple[int, Counter]:
    sign, out = 1, Counter()
    for f in forms:
        g = f.canonical_sign()
        if g != f:
            sign = -sign
        out[g] += 1
    return sign, out


@lru_cache(maxsize=None)
def _covariants_by_roots(d: int) -> dict:
    lat = chart_for(d).lattice
    return {normalize_roots(lat, c.roots): c for c in coble_covariants(d)}


@dataclass(frozen=True)
class CovariantIdentity:
    structure: str
    discriminant: bool      # roots from the dictionary form a subsystem discriminant
    holds: bool             # product on cuspidal points = sign * Delta * root product
    sign: int
    covariant: Covariant | None


def covariant_identity_check(d: int, structure: CovariantStructure, expand: bool = False) -> CovariantIdentity:
    """The structure on cuspidal points is +-Delta(t) times its covariant's root product.

    The certificate compares multisets of linear forms, which is exact because
    linear forms are irreducible.  ``expand`` also multiplies everything out.
    """
    if structure.d != d:
        raise ValueError(f"structure has degree {structure.d}, expected {d}")
    structure.validate()
    chart = chart_for(d)
    lat = chart.lattice
    roots = structure_roots(lat, structure)
    cov = _covariants_by_roots(d).get(normalize_roots(lat, roots))
    s1, forms = factor_forms(chart, structure)
    t = chart.gens
    target = [t[a] - t[b] for a, b in combinations(range(len(t)), 2)] + [chart.root_form(r) for r in roots]
    s2, lhs = _normalized(forms)
    s3, rhs = _normalized(target)
    holds = lhs == rhs
    sign = s1 * s2 * s3 if holds else 0
    if holds and expand:
        value = evaluate(cuspidal_config(t), structure)
        full = vandermonde(t) * chart.root_product(roots)
        holds = value == full.scale(sign)
    return CovariantIdentity(structure.label(), cov is not None, holds, sign, cov)


def covariant_identity_sweep(d: int) -> dict:
    results = [covariant_identity_check(d, s) for s in enumerate_structures(d)]
    matched = {id(r.covariant) for r in results if r.covariant is not None}
    return {
        "structures": len(results),
        "identities": sum(r.holds for r in results),
        "discriminants": sum(r.discriminant for r in results),
        "bijective": len(matched) == len(results) == len(coble_covariants(d)),
    }


# -- the vector field of tangent directions ----------------------------------------------

SIGMA_COEFFICIENTS = {  # coefficient / c2 as (multiplier, sigma index)
    "a2": (Fraction(-2, 3), 1), "c1": (Fraction(1), 2), "a1": (Fraction(-2, 3), 3),
    "a0": (Fraction(2, 3), 4), "b1": (Fraction(2), 5), "b0": (Fraction(-2), 6),
}


def tangency_polynomial(params: dict, t):
    """2c2 t^6 + 3a2 t^5 + 2c1 t^4 + 3a1 t^3 + 3a0 t^2 - b1 t - b0."""
    p = params
    return (2 * p["c2"] * t ** 6 + 3 * p["a2"] * t ** 5 + 2 * p["c1"] * t ** 4 + 3 * p["a1"] * t ** 3
            + 3 * p["a0"] * t ** 2 - p["b1"] * t - p["b0"])


def sigma_formulas_symbolic() -> bool:
    """Expanding 2 prod (t - t_i) reproduces the coefficient formulas."""
    vs = ("t",) + tuple(f"t{i}" for i in range(1, 7))
    g = Polynomial.gens(vs)
    t, ts = g[0], g[1:]
    sig = [elementary_symmetric(ts, k) for k in range(7)]
    params = {"c2": Polynomial.constant(vs, 1)}
    for name, (m, k) in SIGMA_COEFFICIENTS.items():
        params[name] = sig[k].scale(m)
    lhs = tangency_polynomial(params, t)
    rhs = product([t - x for x in ts]).scale(2)
    return lhs == rhs


def sigma_formulas_solved(seed: int = 0, trials: int = 5) -> bool:
    """Solve the six vanishing conditions at random rational parameters."""
    rng = random.Random(seed)
    names = ["a2", "c1", "a1", "a0", "b1", "b0"]
    for _ in range(trials):
        ts = set()
        while len(ts) < 6:
            ts.add(Fraction(rng.randint(-30, 30), rng.randint(1, 7)))
        ts = sorted(ts)
        rows = [[3 * x ** 5, 2 * x ** 4, 3 * x ** 3, 3 * x ** 2, -x, Fraction(-1)] for x in ts]
        rhs = [-2 * x ** 6 for x in ts]
        sol = solve(rows, rhs)
        if sol is None:
            return False
        sig = [Fraction(1)] + [sum((_fprod(c) for c in combinations(ts, k)), Fraction(0)) for k in range(1, 7)]
        want = [SIGMA_COEFFICIENTS[n][0] * sig[SIGMA_COEFFICIENTS[n][1]] for n in names]
        if sol != want:
            return False
    return True


def _field_from(gens, shift: int) -> PolyVectorField:
    """Coefficients (2/3 s_{4-k} - 2/3 s_{3-k} t + s_{2-k} t^2 - 2/3 s_{1-k} t^3 + s_{-k} t^4) with k = shift."""
    sig = [elementary_symmetric(gens, k) for k in range(len(gens) + 1)]
    zero = Polynomial.zero(gens[0].vars)

    def s(k):
        return sig[k] if 0 <= k < len(sig) else zero

    k = shift
    return PolyVectorField(tuple(
        s(4 - k).scale(Fraction(2, 3)) - (s(3 - k) * t).scale(Fraction(2, 3)) + s(2 - k) * t * t
        - (s(1 - k) * t ** 3).scale(Fraction(2, 3)) + s(-k) * t ** 4 for t in gens))


def derive_vector_field_X() -> PolyVectorField:
    """The field on the E6 chart, after confirming the coefficient formulas."""
    if not (sigma_formulas_symbolic() and sigma_formulas_solved()):
        raise ArithmeticError("tangency coefficients disagree with the symmetric-function formulas")
    return _field_from(chart_for(3).gens, 0)


def d5_fields() -> tuple[PolyVectorField, PolyVectorField]:
    """(X2, X3) on the D5 chart, of coefficient degrees 3 and 4."""
    g = chart_for(4).gens
    return _field_from(g, 1), _field_from(g, 0)


def specialization_check() -> bool:
    """With t6 a parameter, the first five coefficients of X are X3 + t6 X2."""
    vs = chart_for(4).vars + ("t6",)
    g = Polynomial.gens(vs)
    big = _field_from(g, 0).coefficients[:5]
    x2, x3 = d5_fields()
    lift = [Polynomial(vs, {e + (0,): c for e, c in p.terms.items()}) for p in (*x2.coefficients, *x3.coefficients)]
    return all(big[i] == lift[5 + i] + g[5] * lift[i] for i in range(5))


def new_invariant(chart: TChart, degree: int) -> Polynomial:
    """An invariant of the given degree that is not a product of lower ones."""
    from .linalg import SpanBasis

    basis = invariant_polynomial_basis(chart, degree)
    lower = {k: invariant_polynomial_basis(chart, k) for k in range(2, degree - 1)}
    decomposable = []
    for k, ps in lower.items():
        for q in invariant_polynomial_basis(chart, degree - k):
            decomposable += [p * q for p in ps]
    span = SpanBasis(decomposable) if decomposable else None
    for p in basis:
        if span is None or not span.contains(p):
            return p
    raise ValueError(f"no new invariant in degree {degree}")


def e6_field_report() -> dict:
    chart = chart_for(3)
    x = derive_vector_field_X()
    mats = chart.simple_matrices
    f2 = new_invariant(chart, 2)
    g5 = gradient_field(new_invariant(chart, 5), f2)
    lit = decompose(x, [g5])
    mod = decompose(x, [g5], euler_degree=3)
    return {
        "homogeneous_degree_4": x.is_homogeneous(4),
        "invariant": is_invariant(x, mats),
        "invariant_mod_euler": invariant_mod_euler(x, mats),
        "invariant_field_dimension": len(invariant_fields(chart, 4)),
        "gradient_invariant": is_invariant(g5, mats),
        "proportional_to_gradient": lit is not None,
        "gradient_mod_euler": None if mod is None else mod[0][0],
        "euler_cofactor": None if mod is None else mod[1],
        "gradient_f2_is_twice_euler": gradient_field(f2, f2) == PolyVectorField.euler(chart.vars).scale(2),
    }


def d5_field_report() -> dict:
    chart = chart_for(4)
    x2, x3 = d5_fields()
    mats = chart.simple_matrices
    f2 = new_invariant(chart, 2)
    g4 = gradient_field(new_invariant(chart, 4), f2)
    g5 = gradient_field(new_invariant(chart, 5), f2)
    f2e = PolyVectorField.euler(chart.vars).scale(f2)
    x2_lit = decompose(x2, [g4, f2e])
    x3_lit = decompose(x3, [g5])
    # modulo Euler multiples f2*Euler drops out, leaving a unique multiple of grad f4
    x2_mod = decompose(x2, [g4], euler_degree=2)
    # X3 picks up a linear multiple of X2 as well as of the Euler field
    x3_mod = decompose(x3, [g5] + [x2.scale(t) for t in chart.gens], euler_degree=3)
    return {
        "invariant_fields_deg3": len(invariant_fields(chart, 3)),
        "invariant_fields_deg4": len(invariant_fields(chart, 4)),
        "x2_invariant": is_invariant(x2, mats),
        "x3_invariant": is_invariant(x3, mats),
        "x2_invariant_mod_euler": invariant_mod_euler(x2, mats),
        "x2_decomposes": x2_lit is not None,
        "x3_decomposes": x3_lit is not None,
        "x2_mod_euler": None if x2_mod is None else x2_mod[0],
        "x3_mod_euler_and_x2": None if x3_mod is None else x3_mod[0],
        "specialization": specialization_check(),
    }


def _regular(vals2, vals3) -> bool:
    n = len(vals2)
    return all(vals2[i] * vals3[j] - vals2[j] * vals3[i] for i, j in combinations(range(n), 2))


def distribution_rank_check(samples: int = 20, seed: int = 0) -> dict:
    """Pointwise ranks at seeded rational points of the D5 chart.

    ``plain`` is rank{X2, X3, [X2, X3]}; ``with_euler`` adds the Euler field,
    which is the condition for the plane distribution on projective space.
    """
    chart = chart_for(4)
    x2, x3 = d5_fields()
    br = x2.bracket(x3)
    euler = PolyVectorField.euler(chart.vars)
    rng = random.Random(seed)
    plain, with_euler = [], []
    while len(plain) < samples:
        p = [Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in chart.vars]
        v2, v3 = x2.evaluate(p), x3.evaluate(p)
        if not _regular(v2, v3):
            continue
        vb, ve = br.evaluate(p), euler.evaluate(p)
        plain.append(rational_rank([v2, v3, vb]))
        with_euler.append(rational_rank([ve, v2, v3, vb]))
    return {"samples": samples, "plain": plain, "with_euler": with_euler,
            "plain_ok": max(plain) <= 2, "with_euler_ok": max(with_euler) <= 3}


# -- cross ratios --------------------------------------------------------------

def cross_ratio_check(n: int = 5, i: int = 5) -> dict:
    """Three expressions for the cross ratio of the lines p1p2, p1p3, p1p4, p1pi."""
    chart = chart_for(9 - n) if 4 <= n <= 7 else None
    vs = tuple(f"t{k}" for k in range(1, n + 1))
    t = Polynomial.gens(vs)
    lat = chart.lattice if chart else None
    m = {j: t[j - 1] ** 2 + t[j - 1] * t[0] + t[0] ** 2 for j in range(2, n + 1)}
    slope_num = (m[2] - m[i]) * (m[3] - m[4])
    slope_den = (m[3] - m[i]) * (m[2] - m[4])
    cfg = cuspidal_config(t)
    det_num = det3(cfg, 1, 2, i) * det3(cfg, 1, 3, 4)
    det_den = det3(cfg, 1, 3, i) * det3(cfg, 1, 2, 4)

    def r(*labels):
        return product([chart.root_form(labeled_root(lat, lab)) for lab in labels])

    root_num = r(f"h2{i}", f"h12{i}", "h34", "h134")
    root_den = r(f"h3{i}", f"h13{i}", "h24", "h124")
    factor = all((t[j - 1] ** 2 + t[j - 1] * t[0]) - (t[k - 1] ** 2 + t[k - 1] * t[0])
                 == (t[j - 1] - t[k - 1]) * (t[j - 1] + t[k - 1] + t[0])
                 for j, k in combinations(range(2, n + 1), 2))
    return {
        "factorization": factor,
        "slopes_vs_roots": slope_num * root_den == slope_den * root_num,
        "determinants_vs_roots": det_num * root_den == det_den * root_num,
    }


def cross_ratio_numeric(ts, i: int = 5) -> tuple[Fraction, Fraction]:
    """Determinant and root-form values of the cross ratio at rational parameters."""
    cfg = cuspidal_config([Fraction(x) for x in ts])
    lhs = Fraction(det3(cfg, 1, 2, i) * det3(cfg, 1, 3, 4)) / (det3(cfg, 1, 3, i) * det3(cfg, 1, 2, 4))
    t = [None] + [Fraction(x) for x in ts]

    def h(*idx):
        return t[idx[0]] - t[idx[1]] if len(idx) == 2 else -(t[idx[0]] + t[idx[1]] + t[idx[2]])

    rhs = (h(2, i) * h(1, 2, i) * h(3, 4) * h(1, 3, 4)) / (h(3, i) * h(1, 3, i) * h(2, 4) * h(1, 2, 4))
    return lhs, rhs

