"""Coble covariants in torus coordinates for six points on a coordinate triangle.

Points p_i, q_i (i in Z/3) sit on the coordinate lines with parameters
a_i = alpha_i * b_i and b_i.  After dividing out (b0-a0)(b1-a1)(b2-a2) each
covariant depends on the b's only through delta = -b0*b1*b2.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .configs import PointConfig, det3, det6, enumerate_structures, evaluate
from .poly import Polynomial, exact_divide, product, sign_key

CONFIG_VARS = ("b0", "b1", "b2", "al0", "al1", "al2")
TORUS_VARS = ("al0", "al1", "al2", "delta")
LABELS = ("p0", "p1", "p2", "q0", "q1", "q2")


def _g(name: str, vars=CONFIG_VARS) -> Polynomial:
    return Polynomial.variable(vars, name, laurent=True)


def naruki_config() -> PointConfig:
    one = Polynomial.constant(CONFIG_VARS, 1, laurent=True)
    zero = Polynomial.zero(CONFIG_VARS, laurent=True)
    b = [_g(f"b{i}") for i in range(3)]
    a = [_g(f"al{i}") * b[i] for i in range(3)]

    def on_triangle(x, i):
        return ((zero, one, x), (x, zero, one), (one, x, zero))[i]

    pts = tuple(on_triangle(a[i], i) for i in range(3)) + tuple(on_triangle(b[i], i) for i in range(3))
    return PointConfig(pts, "laurent")


def normalizer() -> Polynomial:
    """(b0 - a0)(b1 - a1)(b2 - a2)."""
    return product(_g(f"b{i}") * (1 - _g(f"al{i}")) for i in range(3))


def to_torus(p: Polynomial) -> Polynomial | None:
    """Rewrite a b-balanced Laurent polynomial in (alpha, delta); None if b-dependence remains."""
    terms = {}
    for e, c in p.terms.items():
        if not e[0] == e[1] == e[2]:
            return None
        k = e[0]
        terms[(e[3], e[4], e[5], k)] = c * (-1) ** (k % 2)
    return Polynomial(TORUS_VARS, terms, laurent=True)


def torus_table() -> dict[str, Polynomial]:
    """The forty expected torus expressions, keyed by family label."""
    al = [Polynomial.variable(TORUS_VARS, i, laurent=True) for i in range(3)]
    dl = Polynomial.variable(TORUS_VARS, 3, laurent=True)
    A = al[0] * al[1] * al[2]

    def f(*xs):
        return product(xs)

    t = {
        "1": f(dl, 1 - al[0], 1 - al[1], 1 - al[2]),
        "2": f(A, dl ** 2, 1 - al[0], 1 - al[1], 1 - al[2]),
        "3": f(1 - al[0] * dl, 1 - al[1] * dl, 1 - al[2] * dl),
        "4": f(A, dl, 1 - al[0] * dl, 1 - al[1] * dl, 1 - al[2] * dl),
        "5": f(1 - al[0] * al[1] * dl, 1 - al[1] * al[2] * dl, 1 - al[2] * al[0] * dl),
        "6": f(dl, 1 - al[0] * al[1] * dl, 1 - al[1] * al[2] * dl, 1 - al[2] * al[0] * dl),
        "13": f(1 - dl, 1 - A * dl, 1 - A * dl ** 2),
    }
    for i in range(3):
        p, q, x = al[(i - 1) % 3], al[(i + 1) % 3], al[i]
        t[f"7_{i}"] = f(1 - p * dl, 1 - q * dl, 1 - A * dl)
        t[f"8_{i}"] = f(x, dl, 1 - p, 1 - q, 1 - A * dl ** 2)
        t[f"9_{i}"] = f(dl, 1 - p, 1 - q, 1 - A * dl ** 2)
        t[f"10_{i}"] = f(p * q, dl, 1 - dl, 1 - x * p * dl, 1 - x * q * dl)
        t[f"11_{i}"] = f(1 - dl, 1 - x * q * dl, 1 - x * p * dl)
        t[f"12_{i}"] = f(x, dl, 1 - q * dl, 1 - p * dl, 1 - A * dl)
        t[f"14_{i}"] = f(p * q, dl, 1 - dl, 1 - x, 1 - x * dl)
        t[f"15_{i}"] = f(1 - x * dl, 1 - p * q * dl, 1 - A * dl ** 2)
        t[f"16_{i}"] = f(dl, 1 - x, 1 - p * q * dl, 1 - A * dl)
    for i, j, k in ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)):
        t[f"17_{i}{j}{k}"] = f(al[i], dl, 1 - al[j], 1 - al[k] * dl, 1 - al[j] * al[k] * dl)
    return t


def corrected_table() -> dict[str, Polynomial]:
    """The table with family 2 carrying delta^3, which is what the evaluation gives."""
    t = torus_table()
    dl = Polynomial.variable(TORUS_VARS, 3, laurent=True)
    t["2"] = t["2"] * dl
    return t


def torus_value(value: Polynomial) -> Polynomial | None:
    q = exact_divide(value, normalizer())
    return None if q is None else to_torus(q)


@dataclass
class NarukiReport:
    evaluated: int = 0
    division_failures: list = field(default_factory=list)
    unbalanced: list = field(default_factory=list)
    matched: dict = field(default_factory=dict)
    unmatched: list = field(default_factory=list)
    missing: list = field(default_factory=list)
    worked_examples: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return (self.evaluated == 40 and not self.division_failures and not self.unbalanced
                and not self.unmatched and not self.missing and len(self.matched) == 40)


def naruki_table_check(table: dict[str, Polynomial] | None = None) -> NarukiReport:
    config = naruki_config()
    table = torus_table() if table is None else table
    by_key = {sign_key(v): k for k, v in table.items()}
    report = NarukiReport()
    seen: Counter = Counter()
    for s in enumerate_structures(3):
        report.evaluated += 1
        q = exact_divide(evaluate(config, s), normalizer())
        if q is None:
            report.division_failures.append(s.label())
            continue
        tv = to_torus(q)
        if tv is None:
            report.unbalanced.append(s.label())
            continue
        key = by_key.get(sign_key(tv))
        if key is None:
            report.unmatched.append(s.label())
        else:
            report.matched[s.label()] = key
            seen[key] += 1
    report.missing = sorted(k for k in table if seen[k] != 1)
    report.worked_examples = worked_examples(config)
    return report


def worked_examples(config: PointConfig | None = None) -> dict:
    """Two worked evaluations, each against its intermediate b-form and its torus form.

    The printed torus forms of both examples disagree with their own
    intermediate lines; the corrected forms are table entries 8_1 and 17_102.
    """
    config = naruki_config() if config is None else config
    b = [_g(f"b{i}") for i in range(3)]
    a = [_g(f"al{i}") * b[i] for i in range(3)]
    al = [Polynomial.variable(TORUS_VARS, i, laurent=True) for i in range(3)]
    dl = Polynomial.variable(TORUS_VARS, 3, laurent=True)
    A = al[0] * al[1] * al[2]
    # labels: p0 p1 p2 q0 q1 q2 = 1..6
    first = product([det6(config, 1, 2, 3, 4, 5, 6), det3(config, 1, 4, 2), det3(config, 5, 3, 6)])
    second = product(det3(config, *t) for t in
                     ((1, 4, 2), (1, 4, 6), (2, 5, 6), (2, 3, 6), (1, 5, 3), (4, 5, 3)))
    norm = normalizer()
    mid1 = product([1 - a[0] * a[1] * a[2] * b[0] * b[1] * b[2], b[0] - a[0], a[1], b[2] - a[2]])
    mid2 = product([b[0] - a[0], a[1], b[0] - a[0], b[1] - a[1], b[2], b[2] - a[2],
                    a[0] * b[1] * a[2] + 1, b[0] * b[1] * a[2] + 1])
    printed1 = product([al[1], dl, 1 - A * dl, 1 - al[0], 1 - al[2]])
    printed2 = product([al[0], al[1], dl, 1 - al[0], 1 - al[0] * al[2] * dl, 1 - al[2] * dl])
    fixed1 = product([al[1], dl, 1 - A * dl ** 2, 1 - al[0], 1 - al[2]])
    fixed2 = product([al[1], dl, 1 - al[0], 1 - al[0] * al[2] * dl, 1 - al[2] * dl])
    v1, v2 = torus_value(first), torus_value(second)

    def same(x, y):
        return x is not None and sign_key(x) == sign_key(y)

    return {
        "first_intermediate": same(first, mid1 * norm),
        "second_intermediate": same(second, mid2),
        "first_printed": same(v1, printed1),
        "second_printed": same(v2, printed2),
        "first_corrected": same(v1, fixed1),
        "second_corrected": same(v2, fixed2),
    }


def simple_identities() -> dict:
    c = naruki_config()
    b = [_g(f"b{i}") for i in range(3)]
    a = [_g(f"al{i}") * b[i] for i in range(3)]
    out = {"p0p1p2": det3(c, 1, 2, 3) == a[0] * a[1] * a[2] + 1}
    for i in range(3):
        nxt, prv = (i + 1) % 3, (i - 1) % 3
        out[f"p{i}q{i}p{nxt}"] = det3(c, i + 1, i + 4, nxt + 1) == (b[i] - a[i]) * a[nxt]
        out[f"p{i}q{i}p{prv}"] = det3(c, i + 1, i + 4, prv + 1) == b[i] - a[i]
    sextic = det6(c, 1, 2, 3, 4, 5, 6)
    want = product([b[i] - a[i] for i in range(3)]) * (1 - a[0] * a[1] * a[2] * b[0] * b[1] * b[2])
    out["sextic"] = sign_key(sextic) == sign_key(want)
    return out
