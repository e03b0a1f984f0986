"""Polynomial vector fields on a t-chart and their Weyl-invariant pieces."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Sequence

from .chart import TChart
from .linalg import inverse, nullspace, solve
from .poly import Polynomial, exact_divide, monomials, product


@dataclass(frozen=True)
class PolyVectorField:
    """sum_i coefficients[i] * d/dt_i."""
    coefficients: tuple[Polynomial, ...]

    def __post_init__(self):
        vs = {c.vars for c in self.coefficients}
        if len(vs) != 1 or len(next(iter(vs))) != len(self.coefficients):
            raise ValueError("one coefficient per variable, all in the same ring")

    @property
    def vars(self) -> tuple[str, ...]:
        return self.coefficients[0].vars

    @classmethod
    def euler(cls, vars: Sequence[str]) -> "PolyVectorField":
        return cls(tuple(Polynomial.gens(vars)))

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "PolyVectorField":
        return cls(tuple(Polynomial.zero(vars) for _ in vars))

    def __add__(self, other: "PolyVectorField") -> "PolyVectorField":
        return PolyVectorField(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "PolyVectorField") -> "PolyVectorField":
        return PolyVectorField(tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self) -> "PolyVectorField":
        return PolyVectorField(tuple(-a for a in self.coefficients))

    def scale(self, c) -> "PolyVectorField":
        """Multiply by a scalar or a polynomial function."""
        if isinstance(c, Polynomial):
            return PolyVectorField(tuple(c * a for a in self.coefficients))
        return PolyVectorField(tuple(a.scale(c) for a in self.coefficients))

    def is_zero(self) -> bool:
        return all(a.is_zero() for a in self.coefficients)

    def degree(self) -> int:
        """Coefficient degree; the field degree is one less."""
        return max(a.degree() for a in self.coefficients if not a.is_zero())

    def is_homogeneous(self, degree: int | None = None) -> bool:
        nz = [a for a in self.coefficients if not a.is_zero()]
        if not nz:
            return True
        d = nz[0].degree() if degree is None else degree
        return all(a.is_homogeneous(d) for a in nz)

    def apply(self, f: Polynomial) -> Polynomial:
        """The derivative of f along the field."""
        return sum((a * f.diff(i) for i, a in enumerate(self.coefficients)), Polynomial.zero(self.vars))

    def bracket(self, other: "PolyVectorField") -> "PolyVectorField":
        return PolyVectorField(tuple(self.apply(b) - other.apply(a)
                                     for a, b in zip(self.coefficients, other.coefficients)))

    def evaluate(self, point: Sequence) -> list[Fraction]:
        return [a.evaluate(point) for a in self.coefficients]

    def to_json(self) -> list:
        return [a.to_json() for a in self.coefficients]

    @classmethod
    def from_json(cls, data: list) -> "PolyVectorField":
        return cls(tuple(Polynomial.from_json(a) for a in data))


def lie_bracket(x: PolyVectorField, y: PolyVectorField) -> PolyVectorField:
    return x.bracket(y)


def pushforward(x: PolyVectorField, matrix: Sequence[Sequence]) -> PolyVectorField:
    """The field transported by the linear point map t -> A t.

    (A_* X)(s) = A X(A^-1 s); a field is invariant under A when this returns it.
    """
    try:
        inv = inverse(matrix)
    except ZeroDivisionError:
        raise ValueError("singular substitution") from None
    vs = x.vars
    images = [Polynomial.linear(vs, row) for row in inv]
    moved = [a.substitute(images) for a in x.coefficients]
    out = []
    for row in matrix:
        acc = Polynomial.zero(vs)
        for c, m in zip(row, moved):
            if c:
                acc = acc + m.scale(c)
        out.append(acc)
    return PolyVectorField(tuple(out))


def euler_multiple(x: PolyVectorField) -> Polynomial | None:
    """h with x = h * Euler, or None."""
    h = None
    for t, a in zip(Polynomial.gens(x.vars), x.coefficients):
        q = exact_divide(a, t)
        if q is None or (h is not None and q != h):
            return None
        h = q
    return h


def is_invariant(x: PolyVectorField, matrices) -> bool:
    return all(pushforward(x, a) == x for a in matrices)


def invariant_mod_euler(x: PolyVectorField, matrices) -> bool:
    """Each pushforward differs from x by a polynomial multiple of the Euler field."""
    return all(euler_multiple(pushforward(x, a) - x) is not None for a in matrices)


# -- symmetric bases ----------------------------------------------------------

def partitions(k: int, max_parts: int, max_part: int | None = None):
    if max_part is None:
        max_part = k
    if k == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for p in range(min(k, max_part), 0, -1):
        for rest in partitions(k - p, max_parts - 1, p):
            yield (p,) + rest


def monomial_symmetric(vars: Sequence[str], shape: Sequence[int], indices: Sequence[int]) -> Polynomial:
    """m_shape in the variables at ``indices``."""
    shape = list(shape) + [0] * (len(indices) - len(shape))
    terms = {}
    for perm in set(permutations(shape)):
        e = [0] * len(vars)
        for i, k in zip(indices, perm):
            e[i] = k
        terms[tuple(e)] = 1
    return Polynomial(vars, terms)


def elementary_symmetric(gens: Sequence[Polynomial], k: int) -> Polynomial:
    vs = gens[0].vars
    return sum((product(c) for c in combinations(gens, k)), Polynomial.zero(vs)) if k else Polynomial.constant(vs, 1)


def is_permutation_matrix(a) -> bool:
    return all(sorted(row) == [0] * (len(row) - 1) + [1] for row in a) and \
        all(sorted(col) == [0] * (len(col) - 1) + [1] for col in zip(*a))


def _kernel_combinations(basis, differences, zero):
    rows: dict = {}
    for k, diffs in enumerate(differences):
        for i, p in enumerate(diffs):
            for e, c in p.terms.items():
                rows.setdefault((i, e), {})[k] = c
    out = []
    for v in nullspace(list(rows.values()), len(basis)):
        out.append(sum_combination(basis, v, zero))
    return out


def sum_combination(basis, coeffs: dict, zero):
    acc = zero
    for k, c in sorted(coeffs.items()):
        acc = acc + basis[k].scale(c)
    return acc


def _extra_matrices(chart: TChart):
    """Simple-reflection matrices that are not coordinate permutations."""
    return [a for a in chart.simple_matrices if not is_permutation_matrix(a)]


def invariant_polynomial_basis(chart: TChart, degree: int) -> list[Polynomial]:
    """Basis of the Weyl-invariant forms of the given degree.

    Every simple reflection but one permutes the coordinates, so the kernel is
    taken on the monomial symmetric functions.
    """
    vs, n = chart.vars, len(chart.vars)
    basis = [monomial_symmetric(vs, lam, range(n)) for lam in partitions(degree, n)]
    extra = _extra_matrices(chart)
    diffs = []
    for p in basis:
        diffs.append([p.substitute([Polynomial.linear(vs, row) for row in a]) - p for a in extra])
    return _kernel_combinations(basis, diffs, Polynomial.zero(vs))


def invariant_polynomial_basis_full(chart: TChart, degree: int) -> list[Polynomial]:
    """The same space computed on all monomials against every simple reflection."""
    vs = chart.vars
    basis = [Polynomial(vs, {e: 1}) for e in monomials(len(vs), degree)]
    subs = [[Polynomial.linear(vs, row) for row in a] for a in chart.simple_matrices]
    diffs = [[p.substitute(s) - p for s in subs] for p in basis]
    return _kernel_combinations(basis, diffs, Polynomial.zero(vs))


def equivariant_field_basis(vars: Sequence[str], degree: int) -> list[PolyVectorField]:
    """Fields X with X_i = t_i^a m_mu(others), a basis of the permutation-equivariant ones."""
    n = len(vars)
    out = []
    for a in range(degree, -1, -1):
        for mu in partitions(degree - a, n - 1):
            coeffs = []
            for i in range(n):
                e = [0] * n
                e[i] = a
                others = [j for j in range(n) if j != i]
                coeffs.append(Polynomial(vars, {tuple(e): 1}) * monomial_symmetric(vars, mu, others))
            out.append(PolyVectorField(tuple(coeffs)))
    return out


def invariant_fields(chart: TChart, degree: int) -> list[PolyVectorField]:
    """Basis of invariant fields with coefficients of the given degree."""
    basis = equivariant_field_basis(chart.vars, degree)
    extra = _extra_matrices(chart)
    diffs = [[c for a in extra for c in (pushforward(x, a) - x).coefficients] for x in basis]
    return _kernel_combinations(basis, diffs, PolyVectorField.zero(chart.vars))


# -- gradients ------------------------------------------------------------------

def quadratic_matrix(f2: Polynomial) -> list[list[Fraction]]:
    n = len(f2.vars)
    b = [[Fraction(0)] * n for _ in range(n)]
    for e, c in f2.terms.items():
        idx = [i for i in range(n) for _ in range(e[i])]
        if len(idx) != 2:
            raise ValueError("not a quadratic form")
        i, j = idx
        if i == j:
            b[i][i] += c
        else:
            b[i][j] += c / 2
            b[j][i] += c / 2
    return b


def gradient_field(f: Polynomial, f2: Polynomial) -> PolyVectorField:
    """Raise df with the inverse of the symmetric matrix of f2."""
    try:
        binv = inverse(quadratic_matrix(f2))
    except ZeroDivisionError:
        raise ValueError("degenerate quadratic form") from None
    partial = [f.diff(j) for j in range(len(f.vars))]
    coeffs = []
    for row in binv:
        acc = Polynomial.zero(f.vars)
        for c, p in zip(row, partial):
            if c:
                acc = acc + p.scale(c)
        coeffs.append(acc)
    return PolyVectorField(tuple(coeffs))


def decompose(target: PolyVectorField, pieces: Sequence[PolyVectorField],
              euler_degree: int | None = None) -> tuple[list[Fraction], Polynomial | None] | None:
    """Solve target = sum c_k pieces[k] (+ h * Euler with h of the given degree).

    Returns (c, h) or None when no solution exists.
    """
    vs = target.vars
    n = len(vs)
    emons = monomials(n, euler_degree) if euler_degree is not None else []
    gens = Polynomial.gens(vs)
    columns = list(pieces) + [PolyVectorField(tuple(Polynomial(vs, {e: 1}) * t for t in gens)) for e in emons]
    unknowns = len(columns)
    keys = sorted({(i, e) for x in columns + [target] for i, a in enumerate(x.coefficients) for e in a.terms})
    index = {k: r for r, k in enumerate(keys)}
    mat = [[Fraction(0)] * unknowns for _ in keys]
    rhs = [Fraction(0)] * len(keys)
    for k, x in enumerate(columns):
        for i, a in enumerate(x.coefficients):
            for e, c in a.terms.items():
                mat[index[(i, e)]][k] += c
    for i, a in enumerate(target.coefficients):
        for e, c in a.terms.items():
            rhs[index[(i, e)]] = c
    sol = solve(mat, rhs)
    if sol is None:
        return None
    coeffs = list(sol[:len(pieces)])
    h = None
    if euler_degree is not None:
        h = sum((Polynomial(vs, {e: 1}).scale(c) for e, c in zip(emons, sol[len(pieces):]) if c),
                Polynomial.zero(vs))
    return coeffs, h
