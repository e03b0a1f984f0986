"""The lattice Λ_{1,n}, its roots, root subsystems and Weyl-group actions.

Vectors are integer tuples in the basis (ℓ, e1, ..., en) with ℓ first.
The pairing is diag(+1, -1, ..., -1) and roots are the norm -2 vectors
orthogonal to the canonical class k = -3ℓ + e1 + ... + en.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations
from math import isqrt
from typing import Callable, Hashable, Iterable, Sequence

Vector = tuple[int, ...]
Root = Vector


@dataclass(frozen=True)
class LobatchevskiLattice:
    d: int

    def __post_init__(self):
        if self.d not in (2, 3, 4, 5):
            raise ValueError(f"degree must be 2, 3, 4 or 5, got {self.d}")

    @property
    def n(self) -> int:
        return 9 - self.d

    @property
    def rank(self) -> int:
        return self.n + 1

    @property
    def labels(self) -> tuple[str, ...]:
        return ("l",) + tuple(f"e{i}" for i in range(1, self.n + 1))

    @property
    def k(self) -> Vector:
        return (-3,) + (1,) * self.n

    @property
    def ell(self) -> Vector:
        return (1,) + (0,) * self.n

    def e(self, i: int) -> Vector:
        v = [0] * (self.n + 1)
        v[i] = 1
        return tuple(v)

    def pairing(self, x: Sequence[int], y: Sequence[int]):
        return x[0] * y[0] - sum(a * b for a, b in zip(x[1:], y[1:]))

    def norm(self, x: Sequence[int]):
        return self.pairing(x, x)

    def pairing_matrix(self) -> list[list[int]]:
        return [[(1 if i == 0 else -1) if i == j else 0 for j in range(self.rank)]
                for i in range(self.rank)]

    def is_root(self, v: Sequence[int]) -> bool:
        return len(v) == self.rank and self.norm(v) == -2 and self.pairing(v, self.k) == 0

    def root(self, label: str) -> Root:
        return labeled_root(self, label)

    @property
    def root_system_name(self) -> str:
        return {4: "A4", 5: "D5", 6: "E6", 7: "E7"}[self.n]

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        return enumerate_roots(self)

    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        """h123, h12, h23, ..., h_{n-1,n}."""
        return (labeled_root(self, "h123"),) + tuple(
            labeled_root(self, f"h{i}{i + 1}") for i in range(1, self.n))

    @cached_property
    def _height_functional(self) -> tuple[Fraction, ...]:
        # simple-root coordinates are determined by the e-part alone
        n = self.n
        cols = [list(r[1:]) for r in self.simple_roots]
        a = [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]
        inv = _invert(a)
        return tuple(sum(inv[j][i] for j in range(n)) for i in range(n))

    def simple_coordinates(self, v: Sequence[int]) -> tuple[Fraction, ...]:
        n = self.n
        cols = [list(r[1:]) for r in self.simple_roots]
        a = [[Fraction(cols[j][i]) for j in range(n)] for i in range(n)]
        inv = _invert(a)
        return tuple(sum(inv[j][i] * v[1 + i] for i in range(n)) for j in range(n))

    def height(self, v: Sequence[int]) -> Fraction:
        return sum(h * x for h, x in zip(self._height_functional, v[1:]))

    def is_positive(self, v: Sequence[int]) -> bool:
        """A root is positive when its simple-root coordinates are nonnegative."""
        return self.height(v) > 0

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if self.is_positive(r))

    def positive(self, v: Root) -> Root:
        return v if self.is_positive(v) else neg(v)


def _invert(a):
    n = len(a)
    m = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next(r for r in range(c, n) if m[r][c])
        m[c], m[p] = m[p], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def build_lattice(d: int) -> LobatchevskiLattice:
    return LobatchevskiLattice(d)


def neg(v: Sequence[int]) -> Vector:
    return tuple(-x for x in v)


def add(v: Sequence[int], w: Sequence[int]) -> Vector:
    return tuple(a + b for a, b in zip(v, w))


_LABEL = re.compile(r"^-?h(\d*)$")


def labeled_root(lattice: LobatchevskiLattice, label: str | Sequence[int]) -> Root:
    """Root named by a label: ``h12`` = e1-e2, ``h123`` = ℓ-e1-e2-e3,
    ``h7`` (n=7) = 2ℓ - Σ_{j≠7} e_j, ``h`` (n=6) = 2ℓ - Σ e_j.

    A leading minus sign negates.  Index tuples are accepted too.
    """
    if isinstance(label, str):
        m = _LABEL.match(label.strip())
        if not m:
            raise ValueError(f"bad root label {label!r}")
        sign = -1 if label.strip().startswith("-") else 1
        idx = tuple(int(c) for c in m.group(1))
    else:
        sign, idx = 1, tuple(label)
    n = lattice.n
    if any(i < 1 or i > n for i in idx) or len(set(idx)) != len(idx):
        raise ValueError(f"invalid indices {idx} for n={n}")
    v = [0] * (n + 1)
    if len(idx) == 2:
        i, j = idx
        v[i], v[j] = 1, -1
    elif len(idx) == 3:
        v[0] = 1
        for i in idx:
            v[i] = -1
    elif len(idx) == 1:
        if n != 7:
            raise ValueError("h_i exists only for n=7")
        v = [2] + [-1] * n
        v[idx[0]] = 0
    elif len(idx) == 0:
        if n != 6:
            raise ValueError("h exists only for n=6")
        v = [2] + [-1] * n
    else:
        raise ValueError(f"bad root label {label!r}")
    v = tuple(sign * x for x in v)
    assert lattice.is_root(v)
    return v


def root_label(lattice: LobatchevskiLattice, v: Root) -> str:
    """Inverse of :func:`labeled_root` (with a leading '-' for negatives)."""
    sign = ""
    if v[0] < 0:
        sign, v = "-", neg(v)
    n = lattice.n
    a = v[0]
    if a == 0:
        i = v.index(1, 1)
        j = v.index(-1, 1)
        return f"{sign}h{i}{j}"
    if a == 1:
        return sign + "h" + "".join(str(i) for i in range(1, n + 1) if v[i] == -1)
    if a == 2 and n == 6:
        return sign + "h"
    if a == 2 and n == 7:
        return f"{sign}h{v.index(0, 1)}"
    raise ValueError(f"no label for {v}")


@lru_cache(maxsize=None)
def _roots_for(n: int) -> tuple[Root, ...]:
    # ⟨v,k⟩ = 0 gives Σb = -3a; norm -2 gives Σb² = a² + 2; Cauchy-Schwarz bounds a
    out = []
    amax = isqrt(2 * n // (9 - n)) + 1
    for a in range(-amax, amax + 1):
        target_sq = a * a + 2
        target_sum = -3 * a
        bmax = isqrt(target_sq)
        cur: list[int] = []

        def rec(i, s, sq):
            if i == n:
                if s == target_sum and sq == target_sq:
                    out.append((a,) + tuple(cur))
                return
            left = n - i
            for b in range(-bmax, bmax + 1):
                nsq = sq + b * b
                if nsq > target_sq:
                    continue
                rem = target_sq - nsq
                # remaining coordinates can move the sum by at most sqrt(left * rem)
                need = target_sum - s - b
                if need * need > (left - 1) * rem:
                    continue
                cur.append(b)
                rec(i + 1, s + b, nsq)
                cur.pop()

        rec(0, 0, 0)
    return tuple(sorted(out))


def enumerate_roots(lattice: LobatchevskiLattice) -> tuple[Root, ...]:
    """All roots, sorted lexicographically on coordinates; both signs present."""
    return _roots_for(lattice.n)


def reflect(lattice: LobatchevskiLattice, alpha: Root, x: Sequence[int]) -> Vector:
    c = lattice.pairing(x, alpha)
    return tuple(xi + c * ai for xi, ai in zip(x, alpha))


# -- Weyl group elements ---------------------------------------------------

@dataclass(frozen=True)
class WeylElement:
    """Integer matrix acting on column vectors, with an optional generator word."""
    m: tuple[tuple[int, ...], ...]
    word: tuple[int, ...] | None = None

    def apply(self, v: Sequence[int]) -> Vector:
        return tuple(sum(r * x for r, x in zip(row, v)) for row in self.m)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        n = len(self.m)
        prod = tuple(tuple(sum(self.m[i][k] * other.m[k][j] for k in range(n)) for j in range(n))
                     for i in range(n))
        word = None
        if self.word is not None and other.word is not None:
            word = self.word + other.word
        return WeylElement(prod, word)

    def inverse(self, lattice: LobatchevskiLattice) -> "WeylElement":
        # orthogonal for the pairing J: w^{-1} = J w^T J
        n = len(self.m)
        j = [1] + [-1] * (n - 1)
        inv = tuple(tuple(j[r] * self.m[c][r] * j[c] for c in range(n)) for r in range(n))
        word = tuple(reversed(self.word)) if self.word is not None else None
        return WeylElement(inv, word)

    def is_valid(self, lattice: LobatchevskiLattice) -> bool:
        cols = [tuple(self.m[i][j] for i in range(lattice.rank)) for j in range(lattice.rank)]
        basis = [lattice.e(i) for i in range(lattice.rank)]
        for a in range(lattice.rank):
            for b in range(lattice.rank):
                if lattice.pairing(cols[a], cols[b]) != lattice.pairing(basis[a], basis[b]):
                    return False
        return self.apply(lattice.k) == lattice.k


def identity(lattice: LobatchevskiLattice) -> WeylElement:
    r = lattice.rank
    return WeylElement(tuple(tuple(int(i == j) for j in range(r)) for i in range(r)), ())


def reflection(lattice: LobatchevskiLattice, alpha: Root, index: int | None = None) -> WeylElement:
    cols = [reflect(lattice, alpha, lattice.e(j)) for j in range(lattice.rank)]
    m = tuple(tuple(cols[j][i] for j in range(lattice.rank)) for i in range(lattice.rank))
    return WeylElement(m, (index,) if index is not None else None)


def simple_reflections(lattice: LobatchevskiLattice) -> list[WeylElement]:
    return [reflection(lattice, a, i) for i, a in enumerate(lattice.simple_roots)]


def from_word(lattice: LobatchevskiLattice, word: Sequence[int]) -> WeylElement:
    gens = simple_reflections(lattice)
    w = identity(lattice)
    for i in word:
        w = w * gens[i]
    return w


# -- Root subsystems -------------------------------------------------------

@dataclass(frozen=True)
class RootSubsystem:
    roots: tuple[Root, ...]
    positive_roots: tuple[Root, ...]
    cartan_type: tuple[str, ...]
    simple_roots: tuple[Root, ...] = field(default=(), compare=False)

    @property
    def label(self) -> str:
        return type_label(self.cartan_type)

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._rootset

    @cached_property
    def _rootset(self) -> frozenset:
        return frozenset(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.roots]


def type_label(components: Iterable[str]) -> str:
    """('A1','A1','A2') -> '2A1+A2'."""
    comps = sorted(components, key=_component_key)
    parts = []
    for c in dict.fromkeys(comps):
        k = comps.count(c)
        parts.append(f"{k}{c}" if k > 1 else c)
    return "+".join(parts)


def _component_key(c: str):
    return (c[0], int(c[1:]))


def parse_type(label: str) -> tuple[str, ...]:
    """'2A1+A2' -> ('A1','A1','A2'); raises ValueError on unsupported symbols."""
    out: list[str] = []
    if not label.strip():
        return ()
    for part in label.replace(" ", "").split("+"):
        m = re.fullmatch(r"(\d*)([ADE])(\d+)", part)
        if not m:
            raise ValueError(f"unsupported type symbol {part!r}")
        mult = int(m.group(1) or 1)
        letter, r = m.group(2), int(m.group(3))
        if (letter == "A" and r < 1) or (letter == "D" and r < 4) or \
                (letter == "E" and r not in (6, 7, 8)):
            raise ValueError(f"unsupported type symbol {part!r}")
        out += [f"{letter}{r}"] * mult
    return tuple(sorted(out, key=_component_key))


def _simple_roots_of(lattice, positive: Sequence[Root]) -> list[Root]:
    pos = set(positive)
    sums = set()
    plist = list(positive)
    for i, a in enumerate(plist):
        for b in plist[i + 1:]:
            s = add(a, b)
            if s in pos:
                sums.add(s)
    return sorted(r for r in plist if r not in sums)


def _classify_component(lattice, simple: Sequence[Root]) -> str:
    r = len(simple)
    adj = {i: [j for j in range(r) if j != i and lattice.pairing(simple[i], simple[j])]
           for i in range(r)}
    for i in range(r):
        for j in adj[i]:
            if lattice.pairing(simple[i], simple[j]) != 1:
                raise ValueError("simple roots do not form a simply-laced diagram")
    if sum(len(v) for v in adj.values()) // 2 != r - 1:
        raise ValueError("Dynkin graph is not a tree")
    branch = [i for i in range(r) if len(adj[i]) >= 3]
    if not branch:
        return f"A{r}"
    if len(branch) > 1 or len(adj[branch[0]]) != 3:
        raise ValueError("unrecognized Dynkin diagram")
    c = branch[0]
    arms = []
    for start in adj[c]:
        length, prev, cur = 1, c, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{r}"
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return f"E{r}"
    raise ValueError("unrecognized Dynkin diagram")


def cartan_type(lattice, positive: Sequence[Root]) -> tuple[tuple[str, ...], list[Root]]:
    simple = _simple_roots_of(lattice, positive)
    comps = _components(lattice, simple)
    types = [_classify_component(lattice, c) for c in comps]
    return tuple(sorted(types, key=_component_key)), simple


def _components(lattice, roots: Sequence[Root]) -> list[list[Root]]:
    left = list(roots)
    comps = []
    while left:
        comp = [left.pop(0)]
        grew = True
        while grew:
            grew = False
            for r in list(left):
                if any(lattice.pairing(r, c) for c in comp):
                    comp.append(r)
                    left.remove(r)
                    grew = True
        comps.append(comp)
    return comps


def make_subsystem(lattice: LobatchevskiLattice, roots: Iterable[Root]) -> RootSubsystem:
    """Wrap a reflection-closed root set, computing positives and Cartan type."""
    rs = set(roots)
    rs |= {neg(r) for r in rs}
    ordered = tuple(sorted(rs))
    positive = tuple(r for r in ordered if lattice.is_positive(r))
    ctype, simple = cartan_type(lattice, positive)
    return RootSubsystem(ordered, positive, ctype, tuple(simple))


def reflection_closure(lattice: LobatchevskiLattice, roots: Iterable[Root]) -> set[Root]:
    closed = set()
    frontier = []
    for r in roots:
        for v in (tuple(r), neg(r)):
            if v not in closed:
                closed.add(v)
                frontier.append(v)
    while frontier:
        new = []
        current = list(closed)
        for a in frontier:
            for b in current:
                for x, y in ((a, b), (b, a)):
                    img = reflect(lattice, x, y)
                    if img not in closed:
                        closed.add(img)
                        new.append(img)
                        current.append(img)
        frontier = new
    return closed


def subsystem_from_generators(lattice: LobatchevskiLattice, roots: Iterable[Root | str]) -> RootSubsystem:
    gens = [labeled_root(lattice, r) if isinstance(r, str) else tuple(r) for r in roots]
    for g in gens:
        if not lattice.is_root(g):
            raise ValueError(f"{g} is not a root")
    return make_subsystem(lattice, reflection_closure(lattice, gens))


def _positive_from_simple(lattice, simple: Sequence[Root]) -> frozenset:
    # simply-laced: β + α_i is a root exactly when ⟨β, α_i⟩ = 1
    found = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for b in frontier:
            for a in simple:
                if lattice.pairing(b, a) == 1:
                    s = add(a, b)
                    if s not in found:
                        found.add(s)
                        nxt.append(s)
        frontier = nxt
    return frozenset(found)


def _diagram(ctype: str) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram, vertices numbered in BFS order from 0."""
    letter, r = ctype[0], int(ctype[1:])
    if letter == "A":
        return [(i, i + 1) for i in range(r - 1)]
    if letter == "D":
        # 0 is the branch node; 1, 2 the short arms; 3.. the long arm
        return [(0, 1), (0, 2), (0, 3)] + [(i, i + 1) for i in range(3, r - 1)]
    if letter == "E":
        # 0 branch; 1 short arm; 2-4 and 3-5-6-7 the other arms
        edges = [(0, 1), (0, 2), (0, 3), (2, 4), (3, 5)]
        return edges + [(i, i + 1) for i in range(5, r - 1)]
    raise ValueError(ctype)


def _irreducible_subsystems(lattice, ctype: str, ambient_pos: Sequence[Root]) -> list[frozenset]:
    r = int(ctype[1:])
    edges = _diagram(ctype)
    if len({v for e in edges for v in e} | {0}) != r:
        raise ValueError(f"diagram for {ctype} malformed")
    adjacent = {(a, b) for a, b in edges} | {(b, a) for a, b in edges}
    pair = lattice.pairing
    results: dict[frozenset, None] = {}
    chosen: list[Root] = []

    def rec(i):
        if i == r:
            results.setdefault(_positive_from_simple(lattice, chosen), None)
            return
        for cand in ambient_pos:
            if cand in chosen:
                continue
            if all(pair(cand, chosen[j]) == (1 if (i, j) in adjacent else 0) for j in range(i)):
                chosen.append(cand)
                rec(i + 1)
                chosen.pop()

    rec(0)
    return list(results)


def enumerate_subsystems(lattice: LobatchevskiLattice, type_spec: str,
                         ambient: RootSubsystem | Iterable[Root] | None = None) -> list[RootSubsystem]:
    """All subsystems of the given Cartan type, optionally inside an ambient root set."""
    comps = parse_type(type_spec)
    if ambient is None:
        pos = list(lattice.positive_roots)
    else:
        roots = ambient.roots if isinstance(ambient, RootSubsystem) else list(ambient)
        pos = sorted({lattice.positive(r) for r in roots})
    # irreducible pieces in canonical order, then orthogonal backtracking
    distinct = list(dict.fromkeys(comps))
    pieces = {c: sorted(_irreducible_subsystems(lattice, c, pos), key=lambda s: sorted(s))
              for c in distinct}
    slots = list(comps)
    out: set[frozenset] = set()
    chosen: list[tuple[str, int, frozenset]] = []

    def orthogonal(a: frozenset, b: frozenset) -> bool:
        return all(lattice.pairing(x, y) == 0 for x in a for y in b)

    def rec(i):
        if i == len(slots):
            out.add(frozenset().union(*(c[2] for c in chosen)))
            return
        c = slots[i]
        start = 0
        if chosen and chosen[-1][0] == c:
            start = chosen[-1][1] + 1
        for idx in range(start, len(pieces[c])):
            s = pieces[c][idx]
            if all(orthogonal(s, other[2]) for other in chosen):
                chosen.append((c, idx, s))
                rec(i + 1)
                chosen.pop()

    rec(0)
    subs = []
    for positive in out:
        sub = make_subsystem(lattice, positive)
        if sub.cartan_type != comps:
            raise AssertionError(f"orthogonal sum has type {sub.label}, expected {type_spec}")
        subs.append(sub)
    subs.sort(key=lambda s: s.roots)
    return subs


def perp(lattice: LobatchevskiLattice, s: RootSubsystem | Iterable[Root]) -> RootSubsystem:
    roots = s.roots if isinstance(s, RootSubsystem) else [tuple(r) for r in s]
    return make_subsystem(lattice, [r for r in lattice.roots
                                    if all(lattice.pairing(r, x) == 0 for x in roots)])


def is_special_A5(lattice: LobatchevskiLattice, s: RootSubsystem) -> bool:
    if lattice.n != 7 or s.cartan_type != ("A5",):
        raise ValueError("expected an A5 subsystem of E7")
    return perp(lattice, s).cartan_type == ("A2",)


def transform_subsystem(lattice, w: WeylElement, s: RootSubsystem) -> RootSubsystem:
    return make_subsystem(lattice, (w.apply(r) for r in s.roots))


def weyl_orbit(seed, generators: Sequence, action: Callable, key: Callable[[object], Hashable] | None = None
               ) -> list:
    """Breadth-first orbit of ``seed`` under ``action(g, x)`` for g in generators."""
    key = key or (lambda x: x)
    seen = {key(seed): seed}
    order = [seed]
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for g in generators:
            y = action(g, x)
            ky = key(y)
            if ky not in seen:
                seen[ky] = y
                order.append(y)
                queue.append(y)
    return order


def root_orbit(lattice: LobatchevskiLattice, root: Root) -> list[Root]:
    return weyl_orbit(tuple(root), lattice.simple_roots, lambda a, x: reflect(lattice, a, x))


def subsystem_orbit(lattice: LobatchevskiLattice, s: RootSubsystem) -> list[RootSubsystem]:
    def act(alpha, sub):
        return frozenset(reflect(lattice, alpha, r) for r in sub)

    sets = weyl_orbit(frozenset(s.roots), lattice.simple_roots, act)
    return sorted((make_subsystem(lattice, x) for x in sets), key=lambda t: t.roots)


def permute_vector(perm: Sequence[int], v: Sequence[int]) -> Vector:
    """Send e_i to e_{perm[i-1]} (perm is a 0-based permutation of range(n))."""
    out = [0] * len(v)
    out[0] = v[0]
    for i, x in enumerate(v[1:]):
        out[1 + perm[i]] = x
    return tuple(out)


def s7_orbit_split(lattice: LobatchevskiLattice, systems: Sequence[RootSubsystem]
                   ) -> tuple[list[RootSubsystem], list[RootSubsystem]]:
    """Split 7A1-systems into orbits of the permutation group of e1..e7.

    Type A systems contain a root h_i; type B systems consist of h_ijk only.
    """
    if lattice.n != 7:
        raise ValueError("the S7 split is defined on E7")
    index = {frozenset(s.roots): s for s in systems}
    transpositions = []
    for i in range(6):
        p = list(range(7))
        p[i], p[i + 1] = p[i + 1], p[i]
        transpositions.append(p)
    for s in systems:
        for p in transpositions:
            if frozenset(permute_vector(p, r) for r in s.roots) not in index:
                raise ValueError("input is not closed under permutations of e1..e7")
    def act(p, roots):
        return frozenset(permute_vector(p, r) for r in roots)

    type_a, type_b = [], []
    for orb in orbits(systems, transpositions, act):
        # the orbit containing some h_i is type A
        if any(r[0] == 2 for s in orb for r in s.positive_roots):
            type_a += orb
        else:
            type_b += orb
    type_a.sort(key=lambda s: s.roots)
    type_b.sort(key=lambda s: s.roots)
    return type_a, type_b


def permutation_stabilizer_order(lattice: LobatchevskiLattice, s: RootSubsystem) -> int:
    target = frozenset(s.roots)
    return sum(1 for p in permutations(range(lattice.n))
               if frozenset(permute_vector(p, r) for r in s.roots) == target)


def orbits(items: Sequence[RootSubsystem], generators: Sequence, act) -> list[list]:
    """Partition ``items`` into orbits under ``act``."""
    left = {frozenset(s.roots): s for s in items}
    out = []
    while left:
        seed = next(iter(left.values()))
        orb = weyl_orbit(frozenset(seed.roots), generators, act)
        out.append([left.pop(x) for x in orb if x in left])
    return out
