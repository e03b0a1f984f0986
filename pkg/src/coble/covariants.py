"""Coble covariants as root polynomials, crosses, and the relations among them.

Every covariant here is a product of root forms in the t-chart, so it is
stored together with the (sign-normalized) roots it is built from.  The
Weyl group acts on covariants by acting on those roots, which keeps orbit
computations combinatorial; polynomial substitution is used only where a
linear relation has to be checked.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

from .chart import TChart
from .lattice import (LobatchevskiLattice, Root, RootSubsystem, build_lattice, enumerate_subsystems,
                      is_special_A5, labeled_root, make_subsystem, perp, reflect, reflection_closure,
                      s7_orbit_split, subsystem_from_generators, WeylElement, _components)
from .linalg import SpanBasis, commutant_dimension, span_dimension, solve
from .poly import Polynomial, canonical_sign, exact_divide, sign_key, signed_symmetrization

def covariant_degree(d: int) -> int:
    """Half of d(9 - d)."""
    return d * (9 - d) // 2


@dataclass(frozen=True)
class Covariant:
    poly: Polynomial
    roots: tuple[Root, ...]
    kind: str
    subsystem: RootSubsystem | None = None
    word: tuple[int, ...] | None = None

    @property
    def degree(self) -> int:
        return self.poly.degree()

    def provenance(self) -> dict:
        out: dict = {"kind": self.kind, "roots": [list(r) for r in self.roots]}
        if self.word is not None:
            out["word"] = list(self.word)
        return out


@dataclass
class CobleSpace:
    d: int
    covariants: list[Covariant]
    dimension: int
    basis_indices: list[int] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return covariant_degree(self.d)

    @property
    def basis(self) -> list[Polynomial]:
        return [self.covariants[i].poly for i in self.basis_indices]

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "degree": self.degree,
            "count": len(self.covariants),
            "dimension": self.dimension,
            "covariants": [dict(c.poly.to_json(), provenance=c.provenance()) for c in self.covariants],
        }


@lru_cache(maxsize=None)
def chart_for(d: int) -> TChart:
    return TChart(build_lattice(d))


@lru_cache(maxsize=None)
def subsystems(d: int, type_spec: str) -> tuple[RootSubsystem, ...]:
    """Memoized enumeration, shared by every check in this module."""
    return tuple(enumerate_subsystems(build_lattice(d), type_spec))


def discriminant(chart: TChart, s: RootSubsystem | Sequence[Root]) -> Polynomial:
    roots = s.positive_roots if isinstance(s, RootSubsystem) else s
    return canonical_sign(chart.root_product(roots))


def normalize_roots(lattice: LobatchevskiLattice, roots) -> tuple[Root, ...]:
    """Sign-normalize to positive roots and sort: a root product up to sign."""
    return tuple(sorted(lattice.positive(r) for r in roots))


def reflect_roots(lattice: LobatchevskiLattice, alpha: Root, roots) -> list[Root]:
    return [reflect(lattice, alpha, r) for r in roots]


def reflected_product(chart: TChart, alpha: Root, roots) -> Polynomial:
    """s_α applied to a product of root forms, computed factor by factor."""
    return chart.root_product(reflect_roots(chart.lattice, alpha, roots))


# -- the ε-model of D5 -----------------------------------------------------------

def epsilon_forms(chart: TChart) -> list[Polynomial]:
    """Linear forms ε_1..ε_5 with ε_i - ε_{i+1} = h_{i,i+1} and ε_4 + ε_5 = h123."""
    lat = chart.lattice
    if lat.n != 5:
        raise ValueError("the ε-model lives on the D5 chart")
    n = 5
    rows, rhs = [], []
    for i in range(4):
        r = [0] * n
        r[i], r[i + 1] = 1, -1
        rows.append(r)
        rhs.append(chart.root_form(labeled_root(lat, f"h{i + 1}{i + 2}")))
    r = [0] * n
    r[3] = r[4] = 1
    rows.append(r)
    rhs.append(chart.root_form(labeled_root(lat, "h123")))
    # solve coordinate-wise: one rational system per t-variable
    eps = [Polynomial.zero(chart.vars) for _ in range(n)]
    for j in range(n):
        unit = tuple(int(i == j) for i in range(n))
        x = solve(rows, [f.coefficient(unit) for f in rhs])
        if x is None:
            raise ArithmeticError("ε-dictionary is inconsistent")
        for i in range(n):
            eps[i] = eps[i] + Polynomial.linear(chart.vars, unit).scale(x[i])
    return eps


def epsilon_root(chart: TChart, eps: list[Polynomial], i: int, j: int, sign: int) -> Root:
    """The root whose form is ε_i + sign·ε_j (0-based indices)."""
    return chart.root_of_form(eps[i] + eps[j].scale(sign))


def d4_seed_roots(chart: TChart) -> tuple[Root, ...]:
    eps = epsilon_forms(chart)
    roots = []
    for i in range(5):
        j = (i + 1) % 5
        roots.append(epsilon_root(chart, eps, i, j, -1))
        roots.append(epsilon_root(chart, eps, i, j, +1))
    return tuple(roots)


def root_multiset_orbit(lattice: LobatchevskiLattice, seed: Sequence[Root],
                        generators: Sequence[Root] | None = None) -> list[tuple[tuple[Root, ...], tuple[int, ...]]]:
    """Orbit of a root product (up to sign) with one Weyl word per member."""
    gens = list(generators if generators is not None else lattice.simple_roots)
    start = normalize_roots(lattice, seed)
    words = {start: ()}
    order = [start]
    i = 0
    while i < len(order):
        cur = order[i]
        i += 1
        for g, alpha in enumerate(gens):
            img = normalize_roots(lattice, (reflect(lattice, alpha, r) for r in cur))
            if img not in words:
                words[img] = words[cur] + (g,)
                order.append(img)
    return [(m, words[m]) for m in order]


# -- the covariants ---------------------------------------------------------------

def coble_covariants(d: int) -> list[Covariant]:
    if d not in (2, 3, 4, 5):
        raise ValueError(f"degree must be one of 2, 3, 4, 5; got {d}")
    return list(_coble_covariants(d))


@lru_cache(maxsize=None)
def _coble_covariants(d: int) -> tuple[Covariant, ...]:
    chart = chart_for(d)
    lat = chart.lattice
    out: list[Covariant] = []
    if d == 5:
        full = make_subsystem(lat, lat.roots)
        out.append(Covariant(discriminant(chart, full), full.positive_roots, "A4", full))
    elif d == 4:
        for roots, word in root_multiset_orbit(lat, d4_seed_roots(chart)):
            out.append(Covariant(canonical_sign(chart.root_product(roots)), roots, "D5-orbit", word=word))
    else:
        kind = "3A2" if d == 3 else "7A1"
        for s in subsystems(d, kind):
            out.append(Covariant(discriminant(chart, s), s.positive_roots, kind, s))
    seen = set()
    for c in out:
        key = sign_key(c.poly)
        if key in seen:
            raise AssertionError("two provenances gave proportional covariants")
        seen.add(key)
    return tuple(out)


def coble_basis(d: int) -> CobleSpace:
    covs = coble_covariants(d)
    polys = [c.poly for c in covs]
    dim = span_dimension(polys)
    sb = _span_basis(d)
    idx = [polys.index(p) for p in sb.basis]
    if len(idx) != dim:
        raise AssertionError("Bareiss rank and echelon rank disagree")
    return CobleSpace(d, covs, dim, idx)


@lru_cache(maxsize=None)
def _span_basis(d: int) -> SpanBasis:
    return SpanBasis([c.poly for c in coble_covariants(d)])


def covariant_set_is_stable(d: int) -> bool:
    """Every simple reflection permutes the covariants up to sign."""
    chart = chart_for(d)
    lat = chart.lattice
    covs = coble_covariants(d)
    keys = {sign_key(c.poly) for c in covs}
    root_keys = {normalize_roots(lat, c.roots) for c in covs}
    for alpha in lat.simple_roots:
        for c in covs:
            img = reflect_roots(lat, alpha, c.roots)
            if normalize_roots(lat, img) not in root_keys:
                return False
            if sign_key(chart.root_product(img)) not in keys:
                return False
    return True


def _sign_of(chart: TChart, c: Covariant) -> int:
    return 1 if chart.root_product(c.roots) == c.poly else -1


# -- representation on the Coble span --------------------------------------------

def representation_matrices(d: int) -> list[list[list[Fraction]]]:
    """Matrices of the simple reflections on the selected basis (columns are images)."""
    chart = chart_for(d)
    sb = _span_basis(d)
    space = coble_basis(d)
    members = [space.covariants[i] for i in space.basis_indices]
    signs = [_sign_of(chart, c) for c in members]
    mats = []
    for alpha in chart.lattice.simple_roots:
        cols = []
        for c, sg in zip(members, signs):
            coords = sb.coordinates(reflected_product(chart, alpha, c.roots).scale(sg))
            if coords is None:
                raise AssertionError("Coble span is not Weyl-stable")
            cols.append(coords)
        m = len(cols)
        mats.append([[cols[j][i] for j in range(m)] for i in range(m)])
    return mats


def irreducibility_check(d: int) -> int:
    """Commutant dimension of the Weyl action on the Coble span (1 means irreducible)."""
    if d not in (2, 3, 4):
        raise ValueError("irreducibility is checked for d in 2, 3, 4")
    return commutant_dimension(representation_matrices(d))


def central_element(lattice: LobatchevskiLattice) -> WeylElement:
    """x ↦ -x + ⟨x,k⟩k on E7, the central element of its Weyl group."""
    if lattice.n != 7:
        raise ValueError("the central element is used on E7")
    n1 = lattice.rank
    k = lattice.k
    cols = []
    for j in range(n1):
        x = [int(i == j) for i in range(n1)]
        xk = lattice.pairing(x, k)
        cols.append([-x[i] + xk * k[i] for i in range(n1)])
    m = tuple(tuple(cols[j][i] for j in range(n1)) for i in range(n1))
    return WeylElement(m)


def central_action_check() -> dict:
    chart = chart_for(2)
    lat = chart.lattice
    c = central_element(lat)
    subst = chart.weyl_substitution(c)
    minus = [g.scale(-1) for g in chart.gens]
    negated = all(c_.poly.substitute(subst) == -c_.poly for c_ in coble_covariants(2))
    return {"valid": c.is_valid(lat), "acts_as_minus_one": subst == minus, "negates_all": negated}


# -- crosses -----------------------------------------------------------------------

def summands(lattice: LobatchevskiLattice, s: RootSubsystem) -> list[frozenset]:
    """Root sets of the irreducible summands of ``s``."""
    comps = _components(lattice, list(s.simple_roots))
    out = []
    for comp in comps:
        out.append(frozenset(reflection_closure(lattice, comp)))
    return out


def cross(chart: TChart, s: RootSubsystem, alpha: Root) -> Polynomial:
    """(1 - s_α) applied to the discriminant of the positive roots of ``s``."""
    lat = chart.lattice
    if s.cartan_type != ("A2", "A2", "A2"):
        raise ValueError("a cross is built from a 3A2-system")
    alpha = tuple(alpha)
    if not lat.is_root(alpha):
        raise ValueError("α must be a root")
    for comp in summands(lat, s):
        if all(lat.pairing(alpha, r) == 0 for r in comp):
            raise ValueError("α is orthogonal to a summand")
    orth = [r for r in s.positive_roots if lat.pairing(alpha, r) == 0]
    if len(orth) != 3 or any(lat.pairing(a, b) for a, b in combinations(orth, 2)):
        raise ValueError("roots of S orthogonal to α must form a 3A1")
    delta = chart.root_product(s.positive_roots)
    return delta - reflected_product(chart, alpha, s.positive_roots)


def three_a2_containing(lattice: LobatchevskiLattice, roots: Sequence[Root]) -> list[RootSubsystem]:
    if lattice.n != 6:
        raise ValueError("crosses live on E6")
    return [s for s in subsystems(3, "3A2") if all(tuple(r) in s for r in roots)]


@dataclass(frozen=True)
class Cross:
    poly: Polynomial
    system: RootSubsystem
    alpha: Root
    triple: tuple[Root, ...]


def cross_from_4A1(chart: TChart, four: Sequence[Root], alpha_index: int = 0) -> Cross:
    """The cross divisible by the product of a 4A1-system, one pair taken as α."""
    lat = chart.lattice
    four = [tuple(r) for r in four]
    if len(four) != 4 or any(lat.pairing(a, b) for a, b in combinations(four, 2)):
        raise ValueError("need four pairwise orthogonal roots")
    alpha = four[alpha_index]
    triple = tuple(r for i, r in enumerate(four) if i != alpha_index)
    candidates = three_a2_containing(lat, triple)
    if len(candidates) != 2:
        raise AssertionError(f"expected two 3A2-systems through the triple, found {len(candidates)}")
    s = candidates[0]
    return Cross(cross(chart, s, alpha), s, alpha, triple)


@dataclass(frozen=True)
class QuinticQuotient:
    quotient: Polynomial
    d4: RootSubsystem
    invariant: bool


def d4_containing(lattice: LobatchevskiLattice, roots: Sequence[Root]) -> list[RootSubsystem]:
    return [s for s in subsystems(9 - lattice.n, "D4") if all(tuple(r) in s for r in roots)]


def cross_quintic_quotient(chart: TChart, cross_poly: Polynomial, four: Sequence[Root]) -> QuinticQuotient:
    """Divide a cross by its four root forms; test W(D4)-invariance of the quotient."""
    lat = chart.lattice
    q = cross_poly
    for r in four:
        q = exact_divide(q, chart.root_form(r))
        if q is None:
            raise ArithmeticError("cross is not divisible by the root forms")
    (d4,) = d4_containing(lat, four)
    invariant = all(chart.act(chart.reflection_substitution(a), q) == q for a in d4.simple_roots)
    return QuinticQuotient(q, d4, invariant)


def cross_pair_consistency(chart: TChart, four: Sequence[Root]) -> bool:
    """All four choices of α within a 4A1 give the same cross up to sign."""
    keys = {sign_key(cross_from_4A1(chart, four, i).poly) for i in range(4)}
    return len(keys) == 1


# -- the D4 relation ---------------------------------------------------------------

@dataclass(frozen=True)
class D4RelationReport:
    holds_noncommuting: bool
    fails_commuting: bool
    other_systems_distinct: bool


def verify_d4_relation(chart: TChart, d4: RootSubsystem, four: RootSubsystem) -> D4RelationReport:
    """Check f = s f + s' f for non-commuting s, s' in W(D4) - W(4A1), and its failure otherwise."""
    lat = chart.lattice
    if d4.cartan_type != ("D4",) or four.cartan_type != ("A1",) * 4:
        raise ValueError("need a D4-system and a 4A1-system inside it")
    if not all(r in d4 for r in four.roots):
        raise ValueError("4A1-system is not inside the D4-system")
    f = chart.root_product(four.positive_roots)
    outside = [r for r in d4.positive_roots if r not in four]
    s = outside[0]
    fs = reflected_product(chart, s, four.positive_roots)
    ok_nc, ok_c, distinct = True, True, True
    base = frozenset(four.roots)
    for t in outside[1:]:
        ft = reflected_product(chart, t, four.positive_roots)
        holds = f == fs + ft
        if lat.pairing(s, t):
            ok_nc &= holds
            imgs = {base,
                    frozenset(reflect(lat, s, r) for r in four.roots),
                    frozenset(reflect(lat, t, r) for r in four.roots)}
            distinct &= len(imgs) == 3
        else:
            ok_c &= not holds
    return D4RelationReport(ok_nc, ok_c, distinct)


def d4_relation_sweep(d: int) -> dict:
    """Run the D4 relation on every D4-system and every 4A1 inside it."""
    chart = chart_for(d)
    lat = chart.lattice
    total = passed = 0
    planes_ok = True
    for d4 in subsystems(d, "D4"):
        fours = enumerate_subsystems(lat, "4A1", d4)
        if len(fours) != 3:
            planes_ok = False
        discs = [chart.root_product(x.positive_roots) for x in fours]
        planes_ok &= span_dimension(discs) == 2
        for four in fours:
            rep = verify_d4_relation(chart, d4, four)
            total += 1
            passed += rep.holds_noncommuting and rep.fails_commuting and rep.other_systems_distinct
    return {"checked": total, "passed": passed, "planes": planes_ok}


# -- E7 relations ----------------------------------------------------------------

def _forms(chart: TChart, labels: Sequence[str]) -> Polynomial:
    lat = chart.lattice
    return chart.root_product(labeled_root(lat, x) for x in labels)


def _transposition(n: int, a: int, b: int) -> list[int]:
    p = list(range(n))
    p[a - 1], p[b - 1] = b - 1, a - 1
    return p


AB_LEFT = ("h7", "h12", "h34", "h56")
AB_RIGHT = ("h246", "h235", "h145", "h136")
AB_MULTIPLIER = ("h127", "h347", "h567")


def verify_AB_relation(swap: tuple[int, int] | None = (3, 4)) -> bool:
    """h7 h12 h34 h56 = (1 - (34)) h246 h235 h145 h136 in the E7 chart.

    ``swap=None`` replaces the transposition by the identity (a negative control).
    """
    chart = chart_for(2)
    lhs = _forms(chart, AB_LEFT)
    g = _forms(chart, AB_RIGHT)
    moved = g if swap is None else g.permute(_transposition(7, *swap))
    return lhs == g - moved


def ab_type_a_as_difference() -> bool:
    """The type-A product equals G - (34)G with G a type-B product."""
    chart = chart_for(2)
    lat = chart.lattice
    f = _forms(chart, AB_LEFT + AB_MULTIPLIER)
    g_labels = AB_MULTIPLIER + AB_RIGHT
    g = _forms(chart, g_labels)
    g_system = subsystem_from_generators(lat, g_labels)
    _, type_b = s7_orbit_split(lat, list(subsystems(2, "7A1")))
    is_b = any(g_system.roots == s.roots for s in type_b)
    return is_b and f == g - g.permute(_transposition(7, 3, 4))


def verify_s3_annihilation(g: Polynomial, indices: Sequence[int]) -> bool:
    """Signed sum over permutations of t_i, t_j, t_k (1-based) kills ``g``."""
    if len(set(indices)) != len(indices):
        raise ValueError("indices must be distinct")
    return signed_symmetrization(g, [i - 1 for i in indices]).is_zero()


def type_b_covariants() -> list[Covariant]:
    lat = chart_for(2).lattice
    _, type_b = s7_orbit_split(lat, list(subsystems(2, "7A1")))
    keys = {s.roots for s in type_b}
    return [c for c in coble_covariants(2) if c.subsystem.roots in keys]


def s3_sweep() -> dict:
    covs = type_b_covariants()
    subsets = list(combinations(range(1, 8), 3))
    killed = sum(verify_s3_annihilation(c.poly, s) for c in covs for s in subsets)
    return {"covariants": len(covs), "subsets": len(subsets), "annihilated": killed,
            "type_b_span": span_dimension([c.poly for c in covs])}


# -- cross sums and the five-plane decomposition -------------------------------

def fixed_d5(lattice: LobatchevskiLattice) -> RootSubsystem:
    """The D5-system of E6 orthogonal to e6."""
    if lattice.n != 6:
        raise ValueError("expected E6")
    return make_subsystem(lattice, [r for r in lattice.roots if r[6] == 0])


@dataclass(frozen=True)
class CrossSumReport:
    intersection_type: str
    holds: bool


def verify_cross_sum(s: RootSubsystem, r_o: RootSubsystem | None = None) -> CrossSumReport:
    chart = chart_for(3)
    lat = chart.lattice
    r_o = r_o or fixed_d5(lat)
    inter = make_subsystem(lat, [r for r in s.roots if r in r_o])
    if inter.cartan_type != ("A1", "A1", "A2"):
        raise ValueError(f"S ∩ R_o has type {inter.label}, expected 2A1+A2")
    parts = summands(lat, inter)
    a1s = [p for p in parts if len(p) == 2]
    (a2,) = [p for p in parts if len(p) == 6]
    singles = [lat.positive(next(iter(p))) for p in a1s]
    delta = chart.root_product(s.positive_roots)
    total = Polynomial.zero(chart.vars)
    for beta in sorted(lat.positive(r) for r in a2 if lat.is_positive(r)):
        extra = [r for r in perp(lat, singles + [beta]).positive_roots]
        if len(extra) != 1:
            raise AssertionError("3A1 does not have a single perpendicular root")
        gamma = extra[0]
        total = total + delta - reflected_product(chart, gamma, s.positive_roots)
    return CrossSumReport(inter.label, delta.scale(2) == total)


def cross_sum_sweep() -> dict:
    lat = chart_for(3).lattice
    r_o = fixed_d5(lat)
    reports = [verify_cross_sum(s, r_o) for s in subsystems(3, "3A2")]
    inters = {frozenset(r for r in s.roots if r in r_o) for s in subsystems(3, "3A2")}
    return {"systems": len(reports), "holds": sum(r.holds for r in reports),
            "types": sorted({r.intersection_type for r in reports}),
            "injective": len(inters) == len(reports),
            "d5_2A1+A2": len(enumerate_subsystems(lat, "2A1+A2", r_o))}


@dataclass
class PlaneDecomposition:
    planes: list[list[Polynomial]]
    plane_ranks: list[int]
    sums_vanish: list[bool]
    total_rank: int
    pairwise_ranks: list[int]
    four_plane_ranks: list[int]


def d5_plane_decomposition(r_o: RootSubsystem | None = None) -> PlaneDecomposition:
    chart = chart_for(3)
    lat = chart.lattice
    r_o = r_o or fixed_d5(lat)
    planes: list[list[Polynomial]] = []
    vanish = []
    for d4 in enumerate_subsystems(lat, "D4", r_o):
        crosses = [cross_from_4A1(chart, four.positive_roots).poly
                   for four in enumerate_subsystems(lat, "4A1", d4)]
        planes.append(crosses)
        a, b, c = crosses
        vanish.append(any((a + b.scale(x) + c.scale(y)).is_zero() for x in (1, -1) for y in (1, -1)))
    ranks = [span_dimension(p) for p in planes]
    total = span_dimension([x for p in planes for x in p])
    pair = [span_dimension(planes[i] + planes[j]) for i, j in combinations(range(len(planes)), 2)]
    four = [span_dimension([x for k in idx for x in planes[k]])
            for idx in combinations(range(len(planes)), 4)]
    return PlaneDecomposition(planes, ranks, vanish, total, pair, four)


# -- zero loci --------------------------------------------------------------------

def _meets(a: RootSubsystem, b: RootSubsystem | frozenset) -> bool:
    other = b if isinstance(b, frozenset) else frozenset(b.roots)
    return any(r in other for r in a.roots)


Z6_WITNESS = (("h12", "h23", "h45", "h56", "h123", "h"), ("h16", "h125", "h34", "h136", "h25"))
FIXPART_WITNESS = ("h123", "h145", "h167", "h256", "h247", "h357", "h346")


def zero_locus_check(d: int) -> dict:
    if d == 3:
        lat = chart_for(3).lattice
        a3s = subsystems(3, "A3")
        sweep = all(_meets(s, a) for s in subsystems(3, "3A2") for a in a3s)
        w1 = subsystem_from_generators(lat, Z6_WITNESS[0])
        w2 = subsystem_from_generators(lat, Z6_WITNESS[1])
        return {"a3_count": len(a3s), "sweep": sweep, "witness_types": [w1.label, w2.label],
                "witness_disjoint": not _meets(w1, w2), "passed": sweep and not _meets(w1, w2)}
    if d == 2:
        lat = chart_for(2).lattice
        d4s = subsystems(2, "D4")
        special = [a for a in subsystems(2, "A5") if is_special_A5(lat, a)]
        systems = subsystems(2, "7A1")
        sweep_d4 = all(_meets(s, x) for s in systems for x in d4s)
        sweep_a5 = all(_meets(s, x) for s in systems for x in special)
        w = subsystem_from_generators(lat, FIXPART_WITNESS)
        a7 = frozenset(r for r in lat.roots if r[0] == 0 or abs(r[0]) == 2)
        disjoint = not _meets(w, a7)
        return {"d4_count": len(d4s), "special_a5_count": len(special), "sweep_d4": sweep_d4,
                "sweep_special_a5": sweep_a5, "witness_type": w.label, "witness_disjoint": disjoint,
                "passed": sweep_d4 and sweep_a5 and disjoint}
    raise ValueError("zero-locus checks exist for d = 2, 3")


# -- quintics of the D5 restriction ----------------------------------------------

def d3_restriction_quintics() -> dict:
    """Both quintic families in the ε-model lie in one W(D5)-orbit."""
    chart = chart_for(4)
    lat = chart.lattice
    eps = epsilon_forms(chart)

    def minus(i, j):
        return epsilon_root(chart, eps, i, j, -1)

    def plus(i, j):
        return epsilon_root(chart, eps, i, j, +1)

    fam1, fam2 = set(), set()
    for i, j, k in permutations(range(5), 3):
        l, m = [x for x in range(5) if x not in (i, j, k)]
        tail = [minus(l, m), plus(l, m)]
        fam1.add(normalize_roots(lat, [minus(i, j), minus(j, k), minus(i, k)] + tail))
        fam2.add(normalize_roots(lat, [minus(i, j), plus(j, k), plus(i, k)] + tail))
    seed = normalize_roots(lat, [minus(0, 1), minus(1, 2), minus(0, 2), minus(3, 4), plus(3, 4)])
    orbit = [m for m, _ in root_multiset_orbit(lat, seed)]
    members = set(orbit)
    polys = [canonical_sign(chart.root_product(m)) for m in orbit]
    closed = len({sign_key(p) for p in polys}) == len(polys)
    return {"orbit_size": len(orbit), "family1": len(fam1), "family2": len(fam2),
            "family1_in_orbit": fam1 <= members, "family2_in_orbit": fam2 <= members,
            "sign_closed": closed}
