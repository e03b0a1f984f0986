"""Exact linear algebra: fraction-free rank, sparse echelon forms, kernels."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .poly import Polynomial, grlex_key

SparseRow = dict[int, Fraction]


def bareiss_rank(matrix: Sequence[Sequence[int]], trace: list | None = None) -> int:
    """Rank of an integer matrix by fraction-free Gaussian elimination.

    Every intermediate entry is a minor of the input, so all divisions are
    exact.  If ``trace`` is a list, each division quotient is appended to it
    (used by tests to confirm integrality).
    """
    a = [[_exact_int(x) for x in row] for row in matrix]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    prev = 1
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if a[r][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        prow = a[rank]
        p = prow[col]
        for r in range(rank + 1, nrows):
            row = a[r]
            f = row[col]
            if f:
                for j in range(col + 1, ncols):
                    num = p * row[j] - f * prow[j]
                    if num:
                        q, rem = divmod(num, prev)
                        if rem:
                            raise ArithmeticError("Bareiss division was not exact")
                        row[j] = q
                    else:
                        row[j] = 0
                    if trace is not None:
                        trace.append(row[j])
            elif p != prev:
                for j in range(col + 1, ncols):
                    v = row[j] * p
                    if v:
                        q, rem = divmod(v, prev)
                        if rem:
                            raise ArithmeticError("Bareiss division was not exact")
                        row[j] = q
            row[col] = 0
        prev = p
        rank += 1
    return rank


def _exact_int(x) -> int:
    if isinstance(x, int):
        return x
    f = Fraction(x)
    if f.denominator != 1:
        raise ValueError("bareiss_rank needs integer entries; use rational_rank")
    return f.numerator


def rational_rank(matrix: Sequence[Sequence]) -> int:
    return bareiss_rank(clear_denominators(matrix))


def clear_denominators(matrix: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    """Scale each column by the lcm of its denominators; rank is unchanged."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    scales = [1] * ncols
    for row in matrix:
        for j, x in enumerate(row):
            if x:
                d = Fraction(x).denominator
                if d != 1:
                    scales[j] = lcm(scales[j], d)
    return [[int(Fraction(x) * scales[j]) for j, x in enumerate(row)] for row in matrix]


def monomial_columns(polys: Iterable[Polynomial]) -> list[tuple]:
    """Union of supports in decreasing graded-lex order."""
    cols = set()
    for p in polys:
        cols.update(p.terms)
    return sorted(cols, key=grlex_key, reverse=True)


def coefficient_matrix(polys: Sequence[Polynomial], columns=None) -> tuple[list[list[Fraction]], list]:
    if columns is None:
        columns = monomial_columns(polys)
    index = {e: i for i, e in enumerate(columns)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(columns)
        for e, c in p.terms.items():
            row[index[e]] = c
        rows.append(row)
    return rows, columns


def span_dimension(polys: Sequence[Polynomial]) -> int:
    """Rank over the rationals of the coefficient matrix (Bareiss)."""
    polys = list(polys)
    if not polys:
        return 0
    rows, _ = coefficient_matrix(polys)
    if not rows[0]:
        return 0
    return bareiss_rank(clear_denominators(rows))


def _dense_to_sparse(row: Sequence) -> SparseRow:
    return {j: Fraction(x) for j, x in enumerate(row) if x}


class Echelon:
    """Incremental sparse row echelon form over the rationals.

    Each stored row is normalized to leading coefficient 1 and carries the
    combination of inserted vectors that produced it, so membership queries
    also return coordinates.
    """

    def __init__(self, track: bool = False):
        self.pivots: dict[int, tuple[SparseRow, dict[int, Fraction]]] = {}
        self.track = track
        self.count = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, row: SparseRow, combo: dict[int, Fraction] | None):
        row = dict(row)
        done: SparseRow = {}
        while row:
            c = min(row)
            f = row.pop(c)
            entry = self.pivots.get(c)
            if entry is None:
                done[c] = f
                continue
            prow, pcombo = entry
            for j, v in prow.items():
                if j == c:
                    continue
                nv = row.get(j, 0) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
            if combo is not None:
                for k, v in pcombo.items():
                    nv = combo.get(k, 0) - f * v
                    if nv:
                        combo[k] = nv
                    else:
                        combo.pop(k, None)
        return done, combo

    def add(self, row: SparseRow | Sequence) -> bool:
        """Insert a vector; return True when it increased the rank."""
        if not isinstance(row, dict):
            row = _dense_to_sparse(row)
        idx = self.count
        self.count += 1
        combo = {idx: Fraction(1)} if self.track else None
        rem, combo = self._reduce(row, combo)
        if not rem:
            return False
        c = min(rem)
        inv = 1 / rem[c]
        rem = {j: v * inv for j, v in rem.items()}
        if combo is not None:
            combo = {k: v * inv for k, v in combo.items()}
        self.pivots[c] = (rem, combo or {})
        return True

    def coordinates(self, row: SparseRow | Sequence) -> dict[int, Fraction] | None:
        """Express ``row`` through the inserted vectors, or None if outside the span."""
        if not isinstance(row, dict):
            row = _dense_to_sparse(row)
        combo: dict[int, Fraction] = {}
        row = dict(row)
        while row:
            c = min(row)
            f = row.pop(c)
            entry = self.pivots.get(c)
            if entry is None:
                return None
            prow, pcombo = entry
            for j, v in prow.items():
                if j == c:
                    continue
                nv = row.get(j, 0) - f * v
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
            for k, v in pcombo.items():
                nv = combo.get(k, 0) + f * v
                if nv:
                    combo[k] = nv
                else:
                    combo.pop(k, None)
        return combo

    def rref(self) -> dict[int, SparseRow]:
        """Fully reduced rows keyed by pivot column."""
        cols = sorted(self.pivots, reverse=True)
        reduced: dict[int, SparseRow] = {}
        for c in cols:
            row = dict(self.pivots[c][0])
            for j in sorted(k for k in row if k != c and k in reduced):
                f = row.get(j)
                if not f:
                    continue
                for k, v in reduced[j].items():
                    nv = row.get(k, 0) - f * v
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
            reduced[c] = row
        return reduced


def sparse_rank(rows: Iterable[SparseRow | Sequence]) -> int:
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(rows: Iterable[SparseRow | Sequence], ncols: int) -> list[SparseRow]:
    """Basis of {x : A x = 0}, one vector per free column."""
    e = Echelon()
    for r in rows:
        e.add(r)
    red = e.rref()
    free = [j for j in range(ncols) if j not in red]
    basis = []
    for f in free:
        vec: SparseRow = {f: Fraction(1)}
        for c, row in red.items():
            v = row.get(f)
            if v:
                vec[c] = -v
        basis.append(vec)
    return basis


class SpanBasis:
    """A basis selected from a list of polynomials, with coordinate lookup."""

    def __init__(self, polys: Sequence[Polynomial]):
        self.columns: dict[tuple, int] = {}
        self.echelon = Echelon(track=True)
        self.basis: list[Polynomial] = []
        self._slot: dict[int, int] = {}
        for p in polys:
            if self.echelon.add(self._vector(p, grow=True)):
                self._slot[self.echelon.count - 1] = len(self.basis)
                self.basis.append(p)

    def _vector(self, p: Polynomial, grow: bool = False) -> SparseRow | None:
        row: SparseRow = {}
        for e, c in p.terms.items():
            j = self.columns.get(e)
            if j is None:
                if not grow:
                    return None
                j = self.columns[e] = len(self.columns)
            row[j] = c
        return row

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coordinates(self, p: Polynomial) -> list[Fraction] | None:
        row = self._vector(p)
        if row is None:
            return None
        combo = self.echelon.coordinates(row)
        if combo is None:
            return None
        out = [Fraction(0)] * len(self.basis)
        for k, v in combo.items():
            out[self._slot[k]] = v
        return out

    def contains(self, p: Polynomial) -> bool:
        return self.coordinates(p) is not None


def commutant_dimension(generators: Sequence[Sequence[Sequence]]) -> int:
    """Dimension of {M : M G = G M for every generator G}."""
    if not generators:
        raise ValueError("need at least one generator")
    m = len(generators[0])
    for g in generators:
        if len(g) != m or any(len(r) != m for r in g):
            raise ValueError("generator matrices must share one square size")
    e = Echelon()
    # unknown M[a][k] has index a*m + k
    for g in generators:
        g = [[Fraction(x) for x in r] for r in g]
        for a in range(m):
            for b in range(m):
                row: SparseRow = {}
                for k in range(m):
                    if g[k][b]:
                        j = a * m + k
                        row[j] = row.get(j, 0) + g[k][b]
                    if g[a][k]:
                        j = k * m + b
                        row[j] = row.get(j, 0) - g[a][k]
                e.add({j: v for j, v in row.items() if v})
    return m * m - e.rank


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One solution of A x = b over the rationals, or None if inconsistent."""
    n = len(matrix[0]) if matrix else 0
    e = Echelon()
    for row, b in zip(matrix, rhs):
        r = _dense_to_sparse(row)
        if b:
            r[n] = Fraction(b)
        e.add(r)
    if n in e.pivots:
        return None
    red = e.rref()
    x = [Fraction(0)] * n
    for c, row in red.items():
        x[c] = row.get(n, Fraction(0))
    return x


def inverse(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
            for i in range(len(a))]
