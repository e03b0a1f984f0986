"""How Coble factors transform under the quadratic Cremona map centred at points 1, 2, 3.

With a1, a2, a3 the standard basis and a_k = (x_k, y_k, z_k) symbolic for
k > 3, the transformed frame keeps a1, a2, a3 and sends a_k to
(y_k z_k, z_k x_k, x_k y_k).  On roots this is the reflection in h123.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .configs import PointConfig, det3, det6, enumerate_structures, evaluate, structure_roots
from .covariants import normalize_roots, reflect_roots
from .lattice import build_lattice, labeled_root
from .poly import Polynomial, exact_divide, product


def frame_vars(n: int) -> tuple[str, ...]:
    return tuple(f"{c}{k}" for k in range(4, n + 1) for c in "xyz")


def frames(n: int) -> tuple[PointConfig, PointConfig]:
    """The symbolic frame and its Cremona transform, both with n points."""
    vs = frame_vars(n)
    one, zero = Polynomial.constant(vs, 1), Polynomial.zero(vs)
    std = ((one, zero, zero), (zero, one, zero), (zero, zero, one))
    g = Polynomial.gens(vs)
    sym = [tuple(g[3 * i: 3 * i + 3]) for i in range(n - 3)]
    moved = [(y * z, z * x, x * y) for x, y, z in sym]
    return PointConfig(std + tuple(sym), "polynomial"), PointConfig(std + tuple(moved), "polynomial")


def coords(n: int, k: int) -> tuple[Polynomial, Polynomial, Polynomial]:
    vs = frame_vars(n)
    return tuple(Polynomial.variable(vs, f"{c}{k}") for c in "xyz")


def factor_value(config: PointConfig, f) -> Polynomial:
    return det3(config, *f) if len(f) == 3 else det6(config, *f)


def delta_factor(config: PointConfig, n: int) -> Polynomial:
    """|123|^9 times the product over k > 3 of |12k||23k||31k|."""
    parts = [det3(config, 1, 2, 3) ** 9]
    for k in range(4, n + 1):
        parts += [det3(config, 1, 2, k), det3(config, 2, 3, k), det3(config, 3, 1, k)]
    return product(parts)


def factor_table(n: int = 7) -> dict[str, bool]:
    """The factor conversion rules, each checked as an exact identity."""
    old, new = frames(n)
    out = {"|123|": det3(new, 1, 2, 3) == det3(old, 1, 2, 3) == 1}
    extra = range(4, n + 1)
    cyc = ((1, 2, 3), (2, 3, 1), (3, 1, 2))
    ok = True
    for k in extra:
        for a, b, c in cyc:
            ok &= det3(new, a, b, k) == det3(old, b, c, k) * det3(old, c, a, k)
    out["|abk|"] = ok
    ok = True
    for j, k in combinations(extra, 2):
        for a in (1, 2, 3):
            cj, ck = coords(n, j)[a - 1], coords(n, k)[a - 1]
            ok &= det3(new, a, j, k) == -cj * ck * det3(old, a, j, k)
    out["|ajk|"] = ok
    trip = list(combinations(extra, 3))
    out["|ijk|"] = all(det3(new, *t) == det6(old, 1, 2, 3, *t) for t in trip)
    ok = True
    for t in trip:
        scale = product(c for m in t for c in coords(n, m))
        ok &= det6(new, 1, 2, 3, *t) == scale * det3(old, *t)
    out["|123ijk|"] = ok
    ok = True
    for quad in combinations(extra, 4):
        for a, b in ((1, 2), (2, 3), (1, 3)):
            scale = product(coords(n, m)[a - 1] * coords(n, m)[b - 1] for m in quad)
            ok &= det6(new, a, b, *quad) == scale * det6(old, a, b, *quad)
    out["|abijkl|"] = ok
    return out


def _sign(lhs: Polynomial, rhs: Polynomial) -> int:
    return 1 if lhs == rhs else -1 if lhs == -rhs else 0


def worked_conversions() -> dict[str, int]:
    """Sign s with lhs = s * rhs for the two d=3 conversions (0 if neither sign works).

    The six-triple case comes out with s = +1: the minus signs of |134|' and
    |356|' cancel.
    """
    old, new = frames(6)
    dl = delta_factor(old, 6)

    def prod(cfg, fs):
        return product(factor_value(cfg, f) for f in fs)

    lhs1 = prod(new, [(1, 3, 4), (2, 3, 4), (3, 5, 6), (4, 5, 6), (5, 1, 2), (6, 1, 2)])
    rhs1 = dl * prod(old, [(1, 2, 4), (3, 5, 6), (1, 2, 3, 4, 5, 6)])
    lhs2 = prod(new, [(1, 2, 3), (4, 5, 6), (1, 2, 3, 4, 5, 6)])
    rhs2 = prod(old, [(1, 2, 3), (1, 2, 3, 4, 5, 6)]) * dl * prod(old, [(4, 5, 6)])
    return {"six_triples": _sign(lhs1, rhs1), "triple_triple_six": _sign(lhs2, rhs2)}


@dataclass
class CremonaSweep:
    checked: int
    images_found: int
    roots_agree: int
    bijective: bool

    @property
    def ok(self) -> bool:
        return self.images_found == self.checked == self.roots_agree and self.bijective


def cremona_sweep() -> CremonaSweep:
    """Every d=3 structure maps to +-delta times another; roots move by s_h123."""
    old, new = frames(6)
    lat = build_lattice(3)
    h123 = labeled_root(lat, "h123")
    dl = delta_factor(old, 6)
    structures = enumerate_structures(3)
    values = {}
    for s in structures:
        v = evaluate(old, s)
        values.setdefault(v.canonical_sign(), s)
    found = agree = 0
    targets = set()
    for s in structures:
        q = exact_divide(evaluate(new, s), dl)
        t = values.get(q.canonical_sign()) if q is not None else None
        if t is None:
            continue
        found += 1
        targets.add(t)
        moved = normalize_roots(lat, reflect_roots(lat, h123, structure_roots(lat, s)))
        agree += moved == normalize_roots(lat, structure_roots(lat, t))
    return CremonaSweep(len(structures), found, agree, len(targets) == len(structures))

