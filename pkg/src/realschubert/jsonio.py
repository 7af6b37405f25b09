"""JSON encodings: rationals are ``"p/q"`` strings, extension scalars ``[a, b]`` pairs."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .exact import QuadExt, rat, rat_str
from .poly import MultiPoly, TrigPoly, UniPoly, unipoly_from_json, unipoly_to_json


def scalar_to_json(x):
    if isinstance(x, QuadExt):
        return [rat_str(x.a), rat_str(x.b)]
    return rat_str(x)


def scalar_from_json(obj, radicand=None):
    if isinstance(obj, list):
        if radicand is None:
            raise ValueError("extension pair without a radicand")
        a, b = Fraction(obj[0]), Fraction(obj[1])
        return QuadExt(a, b, radicand) if b else a
    if isinstance(obj, bool) or not isinstance(obj, (int, str)):
        raise ValueError(f"not a rational: {obj!r}")
    return rat(obj)


def grid_to_json(m):
    return [[scalar_to_json(x) for x in row] for row in m]


def grid_from_json(obj, radicand=None):
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ValueError("expected a list of rows")
    return [[scalar_from_json(x, radicand) for x in row] for row in obj]


def poly_to_json(p):
    if isinstance(p, TrigPoly):
        return p.to_json()
    if isinstance(p, MultiPoly):
        return p.to_json()
    if any(isinstance(c, QuadExt) for c in p.coeffs):
        return {str(i): scalar_to_json(c) for i, c in enumerate(p.coeffs) if c != 0}
    return unipoly_to_json(p)


def poly_from_json(obj, radicand=None) -> UniPoly:
    if isinstance(obj, dict) and any(isinstance(v, list) for v in obj.values()):
        n = max(int(k) for k in obj) + 1
        cs = [Fraction(0)] * n
        for k, v in obj.items():
            cs[int(k)] = scalar_from_json(v, radicand)
        return UniPoly(cs)
    return unipoly_from_json(obj)


def load(path):
    return json.loads(Path(path).read_text())


def dumps(obj) -> str:
    return json.dumps(obj, indent=2)
