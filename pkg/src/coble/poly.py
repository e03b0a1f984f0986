"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` lives in a ring described by an ordered tuple of
variable names and a Laurent flag.  Terms are stored as a dict mapping
exponent tuples to nonzero :class:`fractions.Fraction` coefficients.
Instances are treated as immutable values.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


def grlex_key(e: Exponent) -> tuple:
    """Sort key for graded lexicographic order with t1 > t2 > ... ."""
    return (sum(e), e)


def _as_fraction(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    __slots__ = ("vars", "terms", "laurent", "_hash")

    def __init__(self, vars: Sequence[str], terms: Mapping[Exponent, object] | None = None,
                 laurent: bool = False):
        self.vars = tuple(vars)
        self.laurent = laurent
        clean: dict[Exponent, Fraction] = {}
        n = len(self.vars)
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} does not match {n} variables")
            if not laurent and any(x < 0 for x in e):
                raise ValueError("negative exponent outside Laurent mode")
            c = _as_fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
                if not clean[e]:
                    del clean[e]
        self.terms = clean
        self._hash = None

    # -- construction helpers -------------------------------------------------
    @classmethod
    def _raw(cls, vars, terms, laurent):
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        p.laurent = laurent
        p._hash = None
        return p

    @classmethod
    def zero(cls, vars, laurent=False) -> "Polynomial":
        return cls._raw(tuple(vars), {}, laurent)

    @classmethod
    def constant(cls, vars, c, laurent=False) -> "Polynomial":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c}, laurent)

    @classmethod
    def variable(cls, vars, name_or_index, laurent=False) -> "Polynomial":
        vars = tuple(vars)
        i = name_or_index if isinstance(name_or_index, int) else vars.index(name_or_index)
        e = [0] * len(vars)
        e[i] = 1
        return cls._raw(vars, {tuple(e): Fraction(1)}, laurent)

    @classmethod
    def linear(cls, vars, coeffs: Sequence, const=0, laurent=False) -> "Polynomial":
        vars = tuple(vars)
        n = len(vars)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        if const:
            terms[(0,) * n] = const
        return cls(vars, terms, laurent)

    @classmethod
    def gens(cls, vars, laurent=False) -> list["Polynomial"]:
        return [cls.variable(vars, i, laurent) for i in range(len(vars))]

    # -- ring bookkeeping ----------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
        if self.laurent != other.laurent:
            raise ValueError("cannot mix Laurent and plain polynomials")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.vars, other, self.laurent)
        return NotImplemented

    def nvars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Polynomial._raw(self.vars, terms, self.laurent)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vars, {e: -c for e, c in self.terms.items()}, self.laurent)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = _as_fraction(c)
        if not c:
            return Polynomial.zero(self.vars, self.laurent)
        return Polynomial._raw(self.vars, {e: v * c for e, v in self.terms.items()}, self.laurent)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out: dict[Exponent, Fraction] = {}
        get = out.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        return Polynomial._raw(self.vars, {e: c for e, c in out.items() if c}, self.laurent)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) == 1 and self.laurent:
                (e, c), = self.terms.items()
                return Polynomial._raw(self.vars, {tuple(-x * -k for x in e): 1 / c ** -k},
                                       self.laurent)
            raise ValueError("negative power of a non-monomial")
        result = Polynomial.constant(self.vars, 1, self.laurent)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.vars, other, self.laurent)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self.laurent == other.laurent and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, self.laurent, frozenset(self.terms.items())))
        return self._hash

    # -- degree and order ----------------------------------------------------
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if len(degs) > 1:
            return False
        return degree is None or not degs or degs == {degree}

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in decreasing graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def canonical_sign(self) -> "Polynomial":
        return canonical_sign(self)

    # -- substitution and evaluation -----------------------------------------
    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Ring homomorphism sending variable i to ``images[i]``."""
        if len(images) != len(self.vars):
            raise ValueError("need one image per variable")
        target = images[0] if images else None
        if target is None:
            return self
        vars, laurent = target.vars, target.laurent
        one = Polynomial.constant(vars, 1, laurent)
        cache: dict[tuple[int, int], Polynomial] = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                if k == 0:
                    cache[key] = one
                elif k < 0:
                    cache[key] = images[i] ** k
                else:
                    cache[key] = power(i, k - 1) * images[i]
            return cache[key]

        out: dict[Exponent, Fraction] = {}
        for e, c in self.terms.items():
            term = Polynomial.constant(vars, c, laurent)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            for e2, c2 in term.terms.items():
                out[e2] = out.get(e2, 0) + c2
        return Polynomial._raw(vars, {e: c for e, c in out.items() if c}, laurent)

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Send variable i to variable ``perm[i]``."""
        n = len(self.vars)
        out = {}
        for e, c in self.terms.items():
            new = [0] * n
            for i, k in enumerate(e):
                new[perm[i]] = k
            out[tuple(new)] = c
        return Polynomial._raw(self.vars, out, self.laurent)

    def evaluate(self, values: Sequence) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term *= _as_fraction(v) ** k
            total += term
        return total

    def diff(self, i: int) -> "Polynomial":
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * k
        return Polynomial._raw(self.vars, out, self.laurent)

    def coefficient(self, e: Exponent) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def monomial_shift(self, shift: Exponent) -> "Polynomial":
        return Polynomial._raw(
            self.vars, {tuple(a + b for a, b in zip(e, shift)): c for e, c in self.terms.items()},
            self.laurent)

    def as_ring(self, vars: Sequence[str], laurent: bool | None = None) -> "Polynomial":
        """Re-embed into a ring whose variables contain this ring's variables."""
        vars = tuple(vars)
        idx = [vars.index(v) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            new = [0] * len(vars)
            for i, k in zip(idx, e):
                new[i] = k
            out[tuple(new)] = c
        return Polynomial(vars, out, self.laurent if laurent is None else laurent)

    # -- serialization -------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [{"e": list(e), "c": [str(c.numerator), str(c.denominator)]}
                      for e, c in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, data: dict, laurent: bool | None = None) -> "Polynomial":
        terms = {tuple(t["e"]): Fraction(int(t["c"][0]), int(t["c"][1])) for t in data["terms"]}
        if laurent is None:
            laurent = any(x < 0 for e in terms for x in e)
        return cls(data["vars"], terms, laurent)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"{v}^{k}" if k != 1 else v for v, k in zip(self.vars, e) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def canonical_sign(p: Polynomial) -> Polynomial:
    """Return ``p`` or ``-p``, whichever has a positive leading coefficient."""
    _, c = p.leading_term()
    return p if c > 0 else -p


def sign_key(p: Polynomial) -> frozenset:
    """Hashable identity of ``p`` up to sign."""
    return frozenset(canonical_sign(p).terms.items())


def product(factors: Iterable[Polynomial], vars: Sequence[str] | None = None,
            laurent: bool = False) -> Polynomial:
    result = None
    for f in factors:
        result = f if result is None else result * f
    if result is None:
        if vars is None:
            raise ValueError("empty product needs a variable list")
        return Polynomial.constant(vars, 1, laurent)
    return result


def exact_divide(p: Polynomial, q: Polynomial) -> Polynomial | None:
    """Return ``r`` with ``p == q * r``, or ``None`` when ``q`` does not divide ``p``.

    Division runs along graded-lex leading terms; with a single divisor a
    leading-term mismatch proves non-divisibility.  Laurent inputs are shifted
    into the polynomial range first (monomials are units there).
    """
    p._check(q)
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.laurent:
        n = len(p.vars)
        lo_p = [min((e[i] for e in p.terms), default=0) for i in range(n)]
        lo_q = [min(e[i] for e in q.terms) for i in range(n)]
        pp = Polynomial(p.vars, {tuple(a - b for a, b in zip(e, lo_p)): c for e, c in p.terms.items()})
        qq = Polynomial(q.vars, {tuple(a - b for a, b in zip(e, lo_q)): c for e, c in q.terms.items()})
        r = exact_divide(pp, qq)
        if r is None:
            return None
        shift = tuple(a - b for a, b in zip(lo_p, lo_q))
        return Polynomial(p.vars, {tuple(a + b for a, b in zip(e, shift)): c
                                   for e, c in r.terms.items()}, laurent=True)
    lq_e, lq_c = q.leading_term()
    q_terms = list(q.terms.items())
    rem = dict(p.terms)
    quot: dict[Exponent, Fraction] = {}
    while rem:
        le = max(rem, key=grlex_key)
        lc = rem[le]
        diff = tuple(a - b for a, b in zip(le, lq_e))
        if any(x < 0 for x in diff):
            return None
        c = lc / lq_c
        quot[diff] = c
        for e, qc in q_terms:
            e2 = tuple(a + b for a, b in zip(e, diff))
            v = rem.get(e2, 0) - c * qc
            if v:
                rem[e2] = v
            else:
                rem.pop(e2, None)
    return Polynomial._raw(p.vars, quot, p.laurent)


def signed_symmetrization(p: Polynomial, indices: Sequence[int]) -> Polynomial:
    """Sum of sign(w) * w(p) over permutations w of the given variable indices."""
    n = len(p.vars)
    total = Polynomial.zero(p.vars, p.laurent)
    base = list(indices)
    for img in permutations(base):
        perm = list(range(n))
        for a, b in zip(base, img):
            perm[a] = b
        total = total + p.permute(perm).scale(permutation_sign(base, img))
    return total


def permutation_sign(src: Sequence[int], dst: Sequence[int]) -> int:
    pos = {v: i for i, v in enumerate(src)}
    arr = [pos[v] for v in dst]
    sign = 1
    seen = [False] * len(arr)
    for i in range(len(arr)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = arr[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def monomials(nvars: int, degree: int) -> list[Exponent]:
    """All exponent vectors of the given total degree, decreasing graded-lex."""
    out: list[Exponent] = []

    def rec(i, left, cur):
        if i == nvars - 1:
            out.append(tuple(cur + [left]))
            return
        for k in range(left, -1, -1):
            rec(i + 1, left - k, cur + [k])

    if nvars == 0:
        return [()] if degree == 0 else []
    rec(0, degree, [])
    return out


def det(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Determinant of a square matrix of polynomials (cofactor expansion with memo)."""
    n = len(matrix)
    if n == 0:
        raise ValueError("empty matrix")
    ref = matrix[0][0]
    memo: dict[tuple[int, int], Polynomial] = {}

    def minor(row, cols_mask):
        key = (row, cols_mask)
        if key in memo:
            return memo[key]
        if row == n:
            return Polynomial.constant(ref.vars, 1, ref.laurent)
        total = Polynomial.zero(ref.vars, ref.laurent)
        sign = 1
        for c in range(n):
            if cols_mask & (1 << c):
                continue
            entry = matrix[row][c]
            if entry:
                sub = minor(row + 1, cols_mask | (1 << c))
                if sub:
                    term = entry * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[key] = total
        return total

    return minor(0, 0)
