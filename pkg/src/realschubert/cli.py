"""Command-line front end.

Exit codes: 0 success, 1 mathematical precondition failure (reported as JSON
on stdout), 2 usage error or malformed input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from fractions import Fraction

from . import jsonio
from .developable import DEFAULT_BOUND, convexity_check, developable_degree_search
from .exact import GeometryError, QuadExt, rat_str
from .poly import TrigPoly, UniPoly, unipoly_from_json
from .projective import CurveSpec, Line, rnc_curve, rnc_tangent_line, trig_curve
from .schubert import four_lines_solve, sharp
from .totalpos import first_tp_violation, is_tnn, random_reduced_word, product_along_word
from .wronski import PolySubspace, inverse_wronski4, wronskian

SEED_ENV = "REALSCHUBERT_SEED"


class UsageError(Exception):
    pass


def default_seed() -> int:
    return int(os.environ.get(SEED_ENV, "0"))


def _emit(obj, fmt="json"):
    if fmt == "pretty":
        for k, v in obj.items():
            print(f"{k}: {v if not isinstance(v, (dict, list)) else json.dumps(v)}")
    else:
        print(jsonio.dumps(obj))


def _load(path):
    try:
        return jsonio.load(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _parse_lines(obj) -> list[Line]:
    if isinstance(obj, dict):
        obj = obj.get("lines", obj)
    if isinstance(obj, dict):
        obj = [obj[k] for k in sorted(obj)]
    if not isinstance(obj, list) or len(obj) != 4:
        raise UsageError("expected four lines, each two rows of four rationals")
    try:
        grids = [jsonio.grid_from_json(g) for g in obj]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed line: {exc}") from exc
    if any(len(g) != 2 or any(len(r) != 4 for r in g) for g in grids):
        raise UsageError("each line must be a 2x4 grid")
    return [Line(g) for g in grids]


def report_to_json(rep) -> dict:
    return {
        "quadric": [rat_str(c) for c in rep.quadric.coeffs],
        "quadric_text": str(rep.quadric),
        "restricted": jsonio.poly_to_json(rep.restricted),
        "discriminant": rat_str(rep.discriminant),
        "real_count": rep.real_count,
        "multiple": rep.multiple,
        "radicand": rat_str(rep.radicand) if rep.radicand is not None else None,
        "transversals": [jsonio.grid_to_json(t.span) for t in rep.transversals],
    }


def _parse_curve(spec: str) -> CurveSpec:
    if spec == "rnc":
        return rnc_curve()
    if spec == "trig":
        return trig_curve()
    obj = _load(spec)
    try:
        kind = obj.get("kind", "poly")
        coords = obj["coords"]
        if kind == "trig":
            return CurveSpec(tuple(TrigPoly.from_json(c) for c in coords), name=spec)
        return CurveSpec(tuple(unipoly_from_json(c) for c in coords), name=spec)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed curve file {spec}: {exc}") from exc


def _parse_rats(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational list {text!r}") from exc


# ---------------------------------------------------------------------------
# subcommands


def cmd_counterexample(args) -> int:
    from .example import reproduce

    report, bad = reproduce()
    _emit(report, args.format)
    if bad:
        print("mismatches: " + ", ".join(bad), file=sys.stderr)
        return 1
    return 0


def cmd_fourlines(args) -> int:
    lines = _parse_lines(_load(args.input))
    _emit(report_to_json(four_lines_solve(*lines)), args.format)
    return 0


def _load_matrix(path):
    obj = _load(path)
    if isinstance(obj, dict):
        obj = obj.get("matrix")
    try:
        return jsonio.grid_from_json(obj)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed matrix: {exc}") from exc


def cmd_tp_check(args) -> int:
    m = _load_matrix(args.matrix)
    try:
        bad = first_tp_violation(m)
        tnn = is_tnn(m)
    except ValueError as exc:
        raise GeometryError(str(exc)) from exc
    out = {"totally_positive": bad is None, "totally_nonnegative": tnn}
    if bad is not None:
        rows, cols, value = bad
        out["violation"] = {"rows": [r + 1 for r in rows], "cols": [c + 1 for c in cols], "value": rat_str(value)}
    _emit(out, args.format)
    return 0


def cmd_tp_random(args) -> int:
    rng = random.Random(args.seed)
    word = random_reduced_word(args.m, rng)
    params = [Fraction(rng.randint(1, 30), rng.randint(1, 10)) for _ in word]
    m = product_along_word(word, params, args.m)
    _emit({"seed": args.seed, "word": list(word), "params": [rat_str(p) for p in params],
           "matrix": jsonio.grid_to_json(m), "totally_positive": first_tp_violation(m) is None}, args.format)
    return 0


def cmd_rnc_tangents(args) -> int:
    ts = _parse_rats(args.params)
    lines = [rnc_tangent_line(t) for t in ts]
    out = {"params": [rat_str(t) for t in ts], "lines": [jsonio.grid_to_json(ln.span) for ln in lines]}
    if len(lines) == 4:
        out["four_lines"] = report_to_json(four_lines_solve(*lines))
    _emit(out, args.format)
    return 0


def _random_distinct(rng, k=4, top=50, denom=7):
    while True:
        ts = [Fraction(rng.randint(-top, top), rng.randint(1, denom)) for _ in range(k)]
        if len(set(ts)) == k:
            return ts


def reality_scan(trials: int, seed: int) -> dict[int, int]:
    """Histogram of real transversal counts for tangents of the rational normal curve."""
    hist: dict[int, int] = {}
    for i in range(trials):
        rng = random.Random(seed ^ i)
        ts = _random_distinct(rng)
        n = four_lines_solve(*(rnc_tangent_line(t) for t in ts)).real_count
        hist[n] = hist.get(n, 0) + 1
    return dict(sorted(hist.items()))


def cmd_reality_scan(args) -> int:
    hist = reality_scan(args.trials, args.seed)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["real_count", "frequency"])
        for k, v in hist.items():
            w.writerow([k, v])
        print(f"# seed={args.seed}")
        sys.stdout.write(buf.getvalue())
    else:
        _emit({"seed": args.seed, "trials": args.trials, "histogram": {str(k): v for k, v in hist.items()}}, args.format)
    return 0


def cmd_wronskian(args) -> int:
    if args.basis:
        obj = _load(args.basis)
        polys = obj["basis"] if isinstance(obj, dict) else obj
        n = obj.get("n", 3) if isinstance(obj, dict) else 3
        basis = tuple(unipoly_from_json(p) for p in polys)
    else:
        basis = tuple(UniPoly(_parse_rats(p)) for p in args.poly)
        n = args.n
    if not basis:
        raise UsageError("give --basis FILE or at least one --poly")
    s = PolySubspace(basis, n=max(n, max(p.degree for p in basis)))
    _emit({"wronskian": jsonio.poly_to_json(wronskian(s))}, args.format)
    return 0


def cmd_inverse_wronski(args) -> int:
    ts = _parse_rats(args.roots)
    if len(ts) != 4:
        raise UsageError("--roots needs exactly four values")
    res = inverse_wronski4(*ts)
    radicand = None
    subs = []
    for s in res.subspaces:
        subs.append([jsonio.poly_to_json(p) for p in s.basis])
        for p in s.basis:
            for c in p.coeffs:
                if isinstance(c, QuadExt):
                    radicand = c.d
    _emit({
        "roots": [rat_str(t) for t in ts],
        "discriminant": rat_str(res.discriminant),
        "radicand": rat_str(radicand) if radicand is not None else None,
        "real": res.real,
        "subspaces": subs,
        "verified": res.verified,
    }, args.format)
    return 0 if res.verified else 1


def cmd_dev_degree(args) -> int:
    c = _parse_curve(args.curve)
    r = developable_degree_search(c, args.trials, args.seed, args.bound)
    _emit({
        "curve": c.name, "seed": args.seed, "trials": r.trials, "generic_samples": r.generic_samples,
        "maximum": r.maximum, "witness": {"trial": r.witness_trial, "line": jsonio.grid_to_json(r.witness.span),
                                           "incidence": jsonio.poly_to_json(r.witness_poly)},
        "histogram": {str(k): v for k, v in r.histogram.items()},
    }, args.format)
    return 0


def cmd_convexity(args) -> int:
    c = _parse_curve(args.curve)
    v = convexity_check(c, args.trials, args.seed, args.bound)
    out = {"curve": c.name, "seed": args.seed, "frenet_determinant": jsonio.poly_to_json(v.frenet),
           "verdict": "convex-consistent" if v.convex_consistent else "not-convex",
           "hyperplanes_checked": v.hyperplanes_checked}
    if v.witness is not None:
        out["witness"] = {"hyperplane": [rat_str(x) for x in v.witness], "multiplicity": v.multiplicity}
    _emit(out, args.format)
    return 0


def cmd_sharp(args) -> int:
    try:
        print(sharp(args.k, args.n))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="realschubert", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--format", choices=["json", "csv", "pretty"], default="json")
        sp.set_defaults(fn=fn)
        return sp

    def seeded(sp, trials=None):
        sp.add_argument("--seed", type=int, default=default_seed())
        if trials is not None:
            sp.add_argument("--trials", type=int, default=trials)

    add("counterexample", cmd_counterexample, "reproduce the four-tangents example")
    sp = add("fourlines", cmd_fourlines, "lines meeting four given lines")
    sp.add_argument("--input", required=True)
    sp = add("tp-check", cmd_tp_check, "total positivity of a unit upper-triangular matrix")
    sp.add_argument("--matrix", required=True)
    sp = add("tp-random", cmd_tp_random, "random TP matrix along a reduced word")
    sp.add_argument("--m", type=int, default=4)
    seeded(sp)
    sp = add("rnc-tangents", cmd_rnc_tangents, "tangent lines of the rational normal curve")
    sp.add_argument("--params", required=True)
    sp = add("reality-scan", cmd_reality_scan, "real transversal counts for random rnc tangents")
    seeded(sp, trials=500)
    sp = add("wronskian", cmd_wronskian, "Wronskian of a polynomial basis")
    sp.add_argument("--basis")
    sp.add_argument("--poly", action="append", default=[], help="comma-separated coefficients, constant first")
    sp.add_argument("--n", type=int, default=3)
    sp = add("inverse-wronski", cmd_inverse_wronski, "pencils of cubics with given Wronskian roots")
    sp.add_argument("--roots", required=True)
    for name, fn, trials in (("dev-degree", cmd_dev_degree, 10000), ("convexity", cmd_convexity, 1000)):
        sp = add(name, fn, "tangent developable degree search" if name == "dev-degree" else "hyperplane convexity check")
        sp.add_argument("--curve", default="rnc", help="rnc, trig, or a curve JSON file")
        sp.add_argument("--bound", type=int, default=DEFAULT_BOUND)
        seeded(sp, trials=trials)
    sp = add("sharp", cmd_sharp, "degree of a Grassmannian")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 1) < 1:
        parser.print_usage(sys.stderr)
        print("error: --trials must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GeometryError as exc:
        print(jsonio.dumps({"error": type(exc).__name__, "message": str(exc)}))
        return 1


if __name__ == "__main__":
    sys.exit(main())
