"""The t-chart: roots as linear forms, and the Weyl action on polynomials.

The functional φ sends ℓ to 0 and e_i to t_i, so a root aℓ + Σ b_i e_i
becomes Σ b_i t_i.  A Weyl element w acts on polynomials through the ring
homomorphism t_j ↦ φ(w e_j) - φ(w ℓ)/3, which agrees with w on root forms.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .lattice import LobatchevskiLattice, Root, WeylElement, reflection
from .poly import Polynomial, product


class TChart:
    def __init__(self, lattice: LobatchevskiLattice, prefix: str = "t"):
        self.lattice = lattice
        self.vars = tuple(f"{prefix}{i}" for i in range(1, lattice.n + 1))

    @cached_property
    def gens(self) -> list[Polynomial]:
        return Polynomial.gens(self.vars)

    def one(self) -> Polynomial:
        return Polynomial.constant(self.vars, 1)

    def form(self, v: Sequence) -> Polynomial:
        """φ applied to a rational lattice vector."""
        return Polynomial.linear(self.vars, v[1:])

    def root_form(self, alpha: Root) -> Polynomial:
        if not self.lattice.is_root(alpha):
            raise ValueError(f"{alpha} is not a root")
        return self.form(alpha)

    def root_product(self, roots: Iterable[Root]) -> Polynomial:
        return product((self.form(r) for r in roots), self.vars)

    def root_of_form(self, p: Polynomial) -> Root:
        """Inverse of root_form; the ℓ-coefficient is fixed by ⟨v, k⟩ = 0."""
        if not p.is_homogeneous(1):
            raise ValueError("not a linear form")
        b = [p.coefficient(tuple(int(i == j) for j in range(len(self.vars))))
             for i in range(len(self.vars))]
        a = -sum(b) / 3
        v = (a, *b)
        if any(Fraction(x).denominator != 1 for x in v):
            raise ValueError(f"{p} is not the form of a lattice vector")
        v = tuple(int(x) for x in v)
        if not self.lattice.is_root(v):
            raise ValueError(f"{p} is not the form of a root")
        return v

    def substitution_matrix(self, w: WeylElement) -> list[list[Fraction]]:
        """Row j holds the coefficients of the image of t_j."""
        lat = self.lattice
        wl = w.apply(lat.ell)
        rows = []
        for j in range(1, lat.n + 1):
            we = w.apply(lat.e(j))
            rows.append([Fraction(we[i]) - Fraction(wl[i], 3) for i in range(1, lat.n + 1)])
        return rows

    def weyl_substitution(self, w: WeylElement) -> list[Polynomial]:
        if w.apply(self.lattice.k) != self.lattice.k:
            raise ValueError("Weyl element must fix the canonical class")
        return [Polynomial.linear(self.vars, row) for row in self.substitution_matrix(w)]

    def act(self, w: WeylElement | list[Polynomial], p: Polynomial) -> Polynomial:
        images = w if isinstance(w, list) else self.weyl_substitution(w)
        return p.substitute(images)

    def reflection_substitution(self, alpha: Root) -> list[Polynomial]:
        return self.weyl_substitution(reflection(self.lattice, alpha))

    @cached_property
    def simple_substitutions(self) -> list[list[Polynomial]]:
        return [self.reflection_substitution(a) for a in self.lattice.simple_roots]

    @cached_property
    def simple_matrices(self) -> list[list[list[Fraction]]]:
        """Matrices A with (s·P)(t) = P(A t) for each simple reflection s."""
        out = []
        for a in self.lattice.simple_roots:
            rows = self.substitution_matrix(reflection(self.lattice, a))
            out.append(rows)
        return out


def compose_substitutions(outer: Sequence[Polynomial], inner: Sequence[Polynomial]) -> list[Polynomial]:
    """Substitution P ↦ outer(inner(P)): apply ``inner`` first, then ``outer``."""
    return [p.substitute(list(outer)) for p in inner]
