"""Point configurations in the projective plane and products of Coble factors.

A Coble factor is either a 3x3 determinant |ijk| of point coordinates or a
6x6 determinant |i1..i6| of their quadratic monomials.  A covariant
structure is a multiset of such factors in which every point has weight 3
(a triple counts once, a sextuple twice) and every pair of points occurs in
some factor.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Union

from .lattice import LobatchevskiLattice, Root, labeled_root
from .poly import Polynomial, det as poly_det, product

Scalar = Union[Fraction, Polynomial]


@dataclass(frozen=True)
class PointConfig:
    points: tuple[tuple[Scalar, Scalar, Scalar], ...]
    ring: str = "rational"

    def __post_init__(self):
        for p in self.points:
            if len(p) != 3:
                raise ValueError("points need three homogeneous coordinates")
            if all(_is_zero(x) for x in p):
                raise ValueError("(0, 0, 0) is not a point")
        if self.ring == "rational":
            for (i, p), (j, q) in combinations(enumerate(self.points, 1), 2):
                if all(p[a] * q[b] == p[b] * q[a] for a, b in ((0, 1), (0, 2), (1, 2))):
                    raise ValueError(f"points {i} and {j} coincide")

    def __len__(self) -> int:
        return len(self.points)

    @classmethod
    def rational(cls, points) -> "PointConfig":
        return cls(tuple(tuple(Fraction(x) for x in p) for p in points), "rational")

    @classmethod
    def from_json(cls, data: dict) -> "PointConfig":
        return cls.rational([[Fraction(str(x)) for x in p] for p in data["points"]])

    def to_json(self) -> dict:
        if self.ring != "rational":
            raise ValueError("only rational configurations serialize")
        return {"points": [[_frac_str(x) for x in p] for p in self.points]}

    def transform(self, g: Sequence[Sequence]) -> "PointConfig":
        """Apply a 3x3 matrix to every point (column vectors)."""
        pts = tuple(tuple(sum((g[r][c] * p[c] for c in range(3)), _zero_like(p[0])) for r in range(3))
                    for p in self.points)
        return PointConfig(pts, self.ring)


def _frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, Polynomial) else x == 0


def _zero_like(x):
    return Polynomial.zero(x.vars, x.laurent) if isinstance(x, Polynomial) else Fraction(0)


def determinant(rows: Sequence[Sequence[Scalar]]) -> Scalar:
    poly = next((x for r in rows for x in r if isinstance(x, Polynomial)), None)
    if poly is not None:
        lift = [[x if isinstance(x, Polynomial) else Polynomial.constant(poly.vars, x, poly.laurent)
                 for x in r] for r in rows]
        return poly_det(lift)
    a = [[Fraction(x) for x in r] for r in rows]
    n = len(a)
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        result *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return result


def _point(config: PointConfig, i: int):
    if not 1 <= i <= len(config):
        raise IndexError(f"point {i} out of range")
    return config.points[i - 1]


def det3(config: PointConfig, i: int, j: int, k: int) -> Scalar:
    """|ijk|, rows in the given index order (1-based)."""
    if len({i, j, k}) != 3:
        raise ValueError("repeated index")
    return determinant([_point(config, x) for x in (i, j, k)])


def quadric_row(p) -> list:
    """Quadratic monomials in the order x², y², z², yz, zx, xy."""
    x, y, z = p
    return [x * x, y * y, z * z, y * z, z * x, x * y]


def det6(config: PointConfig, *idx: int) -> Scalar:
    if len(idx) != 6 or len(set(idx)) != 6:
        raise ValueError("need six distinct indices")
    return determinant([quadric_row(_point(config, i)) for i in idx])


# -- covariant structures --------------------------------------------------------

Factor = tuple[int, ...]


@dataclass(frozen=True)
class CovariantStructure:
    d: int
    factors: tuple[Factor, ...]

    @property
    def n(self) -> int:
        return 9 - self.d

    @property
    def shape(self) -> tuple[int, int]:
        """(number of triples, number of sextuples)."""
        t = sum(len(f) == 3 for f in self.factors)
        return t, len(self.factors) - t

    def pair_multiplicities(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for f in self.factors:
            for p in combinations(sorted(f), 2):
                out[p] = out.get(p, 0) + 1
        return out

    def validate(self) -> None:
        n = self.n
        weight = [0] * (n + 1)
        for f in self.factors:
            if len(f) not in (3, 6) or len(set(f)) != len(f):
                raise ValueError(f"bad factor {f}")
            for i in f:
                weight[i] += 1 if len(f) == 3 else 2
        if any(w != 3 for w in weight[1:]):
            raise ValueError("every index must have weight 3")
        if sum(1 if len(f) == 3 else 4 for f in self.factors) != n:
            raise ValueError("determinant weight must equal the number of points")
        pairs = self.pair_multiplicities()
        if len(pairs) != n * (n - 1) // 2:
            raise ValueError("some pair of points is not covered")

    def label(self) -> str:
        return "".join("|" + "".join(map(str, f)) + "|" for f in self.factors)


def enumerate_structures(d: int, distinct: bool = True) -> list[CovariantStructure]:
    """All factor multisets obeying the weight and coverage rules.

    With ``distinct`` (the default) a factor may occur at most once; for d=4
    the rules alone also admit ten structures with a squared factor, whose
    root products repeat a root and so are not discriminants.
    """
    if d not in (2, 3, 4, 5):
        raise ValueError("d must be in 2..5")
    return list(_structures(d, distinct))


@lru_cache(maxsize=None)
def _structures(d: int, distinct: bool) -> tuple[CovariantStructure, ...]:
    n = 9 - d
    factors = [f for f in combinations(range(1, n + 1), 3)]
    factors += [f for f in combinations(range(1, n + 1), 6)]
    out: list[CovariantStructure] = []
    weight = [0] * (n + 1)
    chosen: list[Factor] = []

    def rec(start: int, detw: int):
        if detw == n:
            if all(w == 3 for w in weight[1:]):
                s = CovariantStructure(d, tuple(chosen))
                if len(s.pair_multiplicities()) == n * (n - 1) // 2:
                    out.append(s)
            return
        for idx in range(start, len(factors)):
            f = factors[idx]
            w = 1 if len(f) == 3 else 2
            cost = 1 if len(f) == 3 else 4
            if detw + cost > n or any(weight[i] + w > 3 for i in f):
                continue
            for i in f:
                weight[i] += w
            chosen.append(f)
            rec(idx + 1 if distinct else idx, detw + cost)
            chosen.pop()
            for i in f:
                weight[i] -= w

    rec(0, 0)
    return tuple(out)


def structure_roots(lattice: LobatchevskiLattice, s: CovariantStructure) -> list[Root]:
    """The cuspidal dictionary: a structure's factors as roots."""
    n = lattice.n
    roots = []
    for f in s.factors:
        if len(f) == 3:
            roots.append(labeled_root(lattice, "h" + "".join(map(str, f))))
        else:
            v = [2] + [-1 if i in f else 0 for i in range(1, n + 1)]
            roots.append(tuple(v))
    for (i, j), m in sorted(s.pair_multiplicities().items()):
        roots += [labeled_root(lattice, f"h{i}{j}")] * (m - 1)
    return roots


def evaluate(config: PointConfig, s: CovariantStructure) -> Scalar:
    if len(config) != s.n:
        raise ValueError(f"structure needs {s.n} points, configuration has {len(config)}")
    vals = [det3(config, *f) if len(f) == 3 else det6(config, *f) for f in s.factors]
    if isinstance(vals[0], Polynomial):
        return product(vals)
    out = Fraction(1)
    for v in vals:
        out *= v
    return out


# -- the degree-5 system -------------------------------------------------------

Z_VARS = ("z0", "z1", "z2")


def degree5_config() -> PointConfig:
    z = Polynomial.gens(Z_VARS)
    one, zero = Polynomial.constant(Z_VARS, 1), Polynomial.zero(Z_VARS)
    pts = ((one, zero, zero), (zero, one, zero), (zero, zero, one), (one, one, one), tuple(z))
    return PointConfig(pts, "polynomial")


def degree5_explicit_check() -> dict:
    from .linalg import SpanBasis, span_dimension

    config = degree5_config()
    structures = enumerate_structures(4)
    values = [evaluate(config, s) for s in structures]
    z = Polynomial.gens(Z_VARS)
    gens = [z[0] * z[1] * z[2] - z[i] * z[i] * z[j] for i in range(3) for j in range(3) if i != j]
    basis = SpanBasis(gens)
    worked = product(det3(config, *f) for f in ((4, 1, 5), (1, 5, 2), (5, 2, 3), (2, 3, 4), (3, 4, 1)))
    return {
        "count": len(values),
        "cubic": all(v.is_homogeneous(3) for v in values),
        "span": span_dimension(values),
        "generators_independent": basis.dimension == 6,
        "inside_generator_span": all(basis.contains(v) for v in values),
        # the printed value z0z1z2 - z1^2 z2 does not match its own factors
        "worked_factors": worked == (z[1] - z[2]) * (-z[2]) * z[0] * (-1),
        "worked_product": worked == z[0] * z[1] * z[2] - z[0] * z[2] * z[2],
        "worked_product_printed": worked == z[0] * z[1] * z[2] - z[1] * z[1] * z[2],
        "det125": det3(config, 1, 2, 5) == z[2],
        "det145": det3(config, 1, 4, 5) == z[2] - z[1],
    }


# -- rational configurations -------------------------------------------------------

def genericity_check(config: PointConfig) -> dict:
    n = len(config)
    collinear = [t for t in combinations(range(1, n + 1), 3) if det3(config, *t) == 0]
    conic = [s for s in combinations(range(1, n + 1), 6) if det6(config, *s) == 0]
    return {"collinear_triples": collinear, "conic_sextuples": conic,
            "generic": not collinear and not conic}


def covariant_vector(config: PointConfig, d: int) -> tuple[list[Fraction], bool]:
    """Values of all structures, scaled so the first nonzero entry is 1; flag all-zero."""
    structures = enumerate_structures(d)
    if len(config) != 9 - d:
        raise ValueError(f"degree {d} needs {9 - d} points")
    vals = [Fraction(evaluate(config, s)) for s in structures]
    lead = next((v for v in vals if v), None)
    if lead is None:
        return vals, True
    return [v / lead for v in vals], False


def proportional(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    if len(u) != len(v):
        return False
    return all(a * v[j] == b * u[j] for a, b in zip(u, v) for j in range(len(u)))


def random_config(rng: random.Random, n: int, bound: int = 20) -> PointConfig:
    while True:
        pts = [[Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(3)]
               for _ in range(n)]
        if any(all(x == 0 for x in p) for p in pts):
            continue
        c = PointConfig.rational(pts)
        if genericity_check(c)["generic"]:
            return c


def random_transform(rng: random.Random, bound: int = 9) -> list[list[Fraction]]:
    while True:
        g = [[Fraction(rng.randint(-bound, bound)) for _ in range(3)] for _ in range(3)]
        if determinant(g) != 0:
            return g


def line_cross_ratio(config: PointConfig, center: int, a: int, b: int, c: int, x: int) -> Fraction:
    """Cross ratio of the lines from ``center`` to a, b, c, x."""
    num = det3(config, center, a, x) * det3(config, center, b, c)
    den = det3(config, center, b, x) * det3(config, center, a, c)
    return Fraction(num) / Fraction(den)


def cross_ratio_invariants(config: PointConfig) -> list[Fraction]:
    """Line cross ratios that determine a generic configuration up to projective equivalence."""
    n = len(config)
    out = []
    for center, (a, b, c) in ((1, (2, 3, 4)), (2, (1, 3, 4))):
        for x in range(5, n + 1):
            out.append(line_cross_ratio(config, center, a, b, c, x))
    return out


def transform_experiment(d: int, trials: int = 10, seed: int = 0) -> dict:
    rng = random.Random(seed)
    ok = 0
    for _ in range(trials):
        c = random_config(rng, 9 - d)
        g = random_transform(rng)
        u, zu = covariant_vector(c, d)
        v, zv = covariant_vector(c.transform(g), d)
        ok += (not zu) and (not zv) and proportional(u, v)
    return {"trials": trials, "proportional": ok, "evidence": "sampling"}


def separation_experiment(d: int, pairs: int = 10, seed: int = 0) -> dict:
    """Inequivalent generic pairs should have non-proportional covariant vectors."""
    rng = random.Random(seed)
    separated = 0
    for _ in range(pairs):
        a = random_config(rng, 9 - d)
        b = random_config(rng, 9 - d)
        if cross_ratio_invariants(a) == cross_ratio_invariants(b):
            continue
        separated += not proportional(covariant_vector(a, d)[0], covariant_vector(b, d)[0])
    return {"pairs": pairs, "separated": separated, "evidence": "sampling"}

