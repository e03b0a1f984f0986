"""Command-line interface: ``coble roots|covariants|eval|fields|verify``."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import cache
from .reports import frac_str, to_jsonable

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(args, data, text: str) -> None:
    """Write JSON to --out when given; print JSON with --json, else the text summary."""
    if args.out:
        Path(args.out).write_text(_dump(data))
    sys.stdout.write(_dump(data) if args.json else text + "\n")


def _degree(value: str) -> int:
    d = int(value)
    if d not in (2, 3, 4, 5):
        raise argparse.ArgumentTypeError("degree must be 2, 3, 4 or 5")
    return d


def _cache_dir(args) -> Path | None:
    return None if args.no_cache else cache.cache_dir(args.cache_dir)


# -- roots ------------------------------------------------------------------------

def subsystem_payload(d: int, type_spec: str) -> dict:
    from .lattice import build_lattice, enumerate_subsystems

    lat = build_lattice(d)
    systems = enumerate_subsystems(lat, type_spec)
    return {"lattice": {"d": d, "n": lat.n}, "type": type_spec,
            "subsystems": [s.to_json() for s in systems]}


def load_subsystems(d: int, payload: dict):
    from .lattice import build_lattice, make_subsystem

    lat = build_lattice(d)
    return [make_subsystem(lat, [tuple(r) for r in roots]) for roots in payload["subsystems"]]


def cmd_roots(args) -> int:
    from .lattice import build_lattice, parse_type, s7_orbit_split

    lat = build_lattice(args.d)
    if args.type is None:
        if args.split_s7:
            raise UsageError("--split-s7 needs --type")
        roots = [list(r) for r in lat.roots]
        data = {"lattice": {"d": args.d, "n": lat.n}, "count": len(roots), "roots": roots}
        _emit(args, data, f"roots: {len(roots)}")
        return EXIT_OK
    try:
        parse_type(args.type)
    except ValueError as e:
        raise UsageError(str(e)) from None
    payload, _ = cache.cached(_cache_dir(args), cache.cache_key("subsystems", args.d, args.type),
                              lambda: subsystem_payload(args.d, args.type))
    data = dict(payload, count=len(payload["subsystems"]))
    text = f"{args.type} subsystems: {data['count']}"
    if args.split_s7:
        if lat.n != 7:
            raise UsageError("--split-s7 applies to d=2")
        type_a, type_b = s7_orbit_split(lat, load_subsystems(args.d, payload))
        data["s7_split"] = [len(type_a), len(type_b)]
        text += f"\nS7 orbits: {len(type_a)} / {len(type_b)}"
    _emit(args, data, text)
    return EXIT_OK


# -- covariants -------------------------------------------------------------------

def cmd_covariants(args) -> int:
    from .covariants import coble_basis

    data, _ = cache.cached(_cache_dir(args), cache.cache_key("covariants", args.d),
                           lambda: coble_basis(args.d).to_json())
    text = f"degree: {data['degree']}\ncount: {data['count']}\ndimension: {data['dimension']}"
    if args.out:
        Path(args.out).write_text(_dump(data))
    if args.json:
        sys.stdout.write(_dump({k: data[k] for k in ("d", "degree", "count", "dimension")}))
    else:
        print(text)
    return EXIT_OK


# -- eval -------------------------------------------------------------------------

def _read_config(path: str, d: int):
    from .configs import PointConfig

    try:
        raw = json.loads(Path(path).read_text())
        config = PointConfig.from_json(raw)
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror}") from None
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as e:
        raise UsageError(f"{path}: malformed configuration ({e})") from None
    if len(config) != 9 - d:
        raise UsageError(f"{path}: degree {d} needs {9 - d} points, got {len(config)}")
    return config


def evaluation(config, d: int) -> dict:
    from .configs import covariant_vector, enumerate_structures, genericity_check

    gen = genericity_check(config)
    vector, all_zero = covariant_vector(config, d)
    labels = [s.label() for s in enumerate_structures(d)]
    return {
        "d": d,
        "generic": gen["generic"],
        "collinear_triples": [list(t) for t in gen["collinear_triples"]],
        "conic_sextuples": [list(s) for s in gen["conic_sextuples"]],
        "structures": labels,
        "vector": [frac_str(v) for v in vector],
        "vanishing": [lab for lab, v in zip(labels, vector) if v == 0],
        "all_zero": all_zero,
    }


def cmd_eval(args) -> int:
    from .configs import proportional

    if args.compare:
        if args.config:
            raise UsageError("give either CONFIG or --compare A B")
        a, b = (evaluation(_read_config(p, args.d), args.d) for p in args.compare)
        va = [Fraction(x) for x in a["vector"]]
        vb = [Fraction(x) for x in b["vector"]]
        same = not a["all_zero"] and not b["all_zero"] and proportional(va, vb)
        data = {"d": args.d, "proportional": same, "a": a, "b": b}
        _emit(args, data, f"proportional: {same}")
        return EXIT_OK if same else EXIT_FAIL
    if not args.config:
        raise UsageError("eval needs CONFIG or --compare A B")
    data = evaluation(_read_config(args.config, args.d), args.d)
    lines = [f"generic: {data['generic']}", f"length: {len(data['vector'])}"]
    if data["collinear_triples"]:
        lines.append("collinear: " + " ".join("".join(map(str, t)) for t in data["collinear_triples"]))
    if data["conic_sextuples"]:
        lines.append("on a conic: " + " ".join("".join(map(str, s)) for s in data["conic_sextuples"]))
    if data["vanishing"]:
        lines.append(f"vanishing structures: {len(data['vanishing'])}")
    lines.append("vector: " + " ".join(data["vector"]))
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


# -- fields -----------------------------------------------------------------------

def field_payload(name: str) -> dict:
    from .cuspidal import d5_fields, derive_vector_field_X

    if name == "e6":
        x = derive_vector_field_X()
        return {"chart": "E6", "vars": list(x.vars), "fields": {"X": x.to_json()}}
    x2, x3 = d5_fields()
    return {"chart": "D5", "vars": list(x2.vars), "fields": {"X2": x2.to_json(), "X3": x3.to_json()}}


def cmd_fields(args) -> int:
    data = field_payload(args.chart)
    _emit(args, data, f"{data['chart']} fields: {', '.join(sorted(data['fields']))}")
    return EXIT_OK


# -- verify -----------------------------------------------------------------------

def _run_one(name_seed):
    from .suites import run_suite

    name, seed = name_seed
    return run_suite(name, seed)


def cmd_verify(args) -> int:
    from .suites import SUITES

    if args.suite == "all":
        names = list(SUITES)
    elif args.suite in SUITES:
        names = [args.suite]
    else:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    jobs = [(n, args.seed) for n in names]
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_one, jobs))
    else:
        reports = [_run_one(j) for j in jobs]
    passed = all(r.passed for r in reports)
    data = {"passed": passed, "seed": args.seed,
            "suites": [_report_json(r, args.timing) for r in reports]}
    text = "\n".join(r.render() for r in reports)
    text += f"\n{'all suites passed' if passed else 'verification FAILED'}"
    _emit(args, to_jsonable(data), text)
    return EXIT_OK if passed else EXIT_FAIL


def _report_json(report, timing: bool) -> dict:
    out = report.to_json()
    if not timing:
        out.pop("seconds")
    return out


# -- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print machine-readable JSON")
    common.add_argument("--out", metavar="PATH", help="also write the JSON result to PATH")
    common.add_argument("--cache-dir", metavar="PATH",
                        help=f"enumeration cache (default ${cache.ENV_VAR} or {cache.DEFAULT_DIR})")
    common.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--jobs", type=int, default=1, help="run suites in parallel")

    parser = argparse.ArgumentParser(prog="coble", description="Coble covariants of Del Pezzo surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="roots and root subsystems of R_{9-d}")
    p.add_argument("d", type=_degree)
    p.add_argument("--type", help="subsystem type such as 3A2, 7A1, 2A1+A2")
    p.add_argument("--split-s7", action="store_true", help="split E7 subsystems into S7-orbits")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("covariants", parents=[common], help="export the Coble covariants of degree d")
    p.add_argument("d", type=_degree)
    p.set_defaults(func=cmd_covariants)

    p = sub.add_parser("eval", parents=[common], help="covariant vector of a rational configuration")
    p.add_argument("d", type=_degree)
    p.add_argument("config", nargs="?", help="JSON file {\"points\": [[x, y, z], ...]}")
    p.add_argument("--compare", nargs=2, metavar=("A", "B"), help="test two configurations for proportionality")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("fields", parents=[common], help="export the tangent vector fields")
    p.add_argument("chart", choices=("e6", "d5"))
    p.set_defaults(func=cmd_fields)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite, or all")
    p.add_argument("suite")
    p.add_argument("--timing", action="store_true", help="include run times in the JSON report")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    if args.jobs < 1:
        print("coble: error: --jobs must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as e:
        print(f"coble: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"coble: error: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
