"""Counting how often a line meets the tangent developable of a curve in RP^3.

The tangent line at t meets a line spanned by a, b exactly when
``det(g(t), g'(t), a, b) = 0``; this determinant is the incidence polynomial.
Sampling lines and counting its simple real roots bounds the degree of the
developable from below.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .exact import GeometryError, rank
from .poly import TrigPoly, UniPoly, real_roots_with_multiplicity, sturm_count, trig_roots
from .projective import CurveSpec, Line, check_nonvanishing, locally_convex, minors2, plucker_pairing, tangent_minors

DEFAULT_BOUND = 20


class DegenerateCurve(GeometryError):
    pass


class NoGenericSample(GeometryError):
    pass


@dataclass
class IncidenceReport:
    line: Line
    poly: object
    count: int
    multiple: bool
    generic: bool
    bound: int


def incidence_bound(c: CurveSpec) -> int:
    """Degree (or frequency) bound of the incidence polynomial for this curve."""
    mins = tangent_minors(c)
    if c.is_trig:
        return 2 * max(m.max_frequency for m in mins)
    return max(m.degree for m in mins)


def incidence_poly(c: CurveSpec, line: Line, minors=None):
    """``det(g(t), g'(t), a, b)`` as a UniPoly or TrigPoly in t."""
    minors = minors if minors is not None else tangent_minors(c)
    return plucker_pairing(minors, minors2(line.span))


def count_incidences(c: CurveSpec, line: Line, minors=None, bound=None) -> IncidenceReport:
    """Distinct parameters whose tangent meets ``line``, over one period / RP^1.

    For polynomial curves a degree drop below the bound is a root at t = oo.
    """
    minors = minors if minors is not None else tangent_minors(c)
    bound = bound if bound is not None else (incidence_bound(c) if c.is_trig else max(m.degree for m in minors))
    p = incidence_poly(c, line, minors)
    if p.is_zero():
        return IncidenceReport(line, p, 0, True, False, bound)
    if isinstance(p, TrigPoly):
        count, multiple, _ = trig_roots(p, with_multiplicity=False)
    else:
        count, multiple = sturm_count(p)
        at_inf = bound - p.degree
        if at_inf:
            count += 1
            multiple = multiple or at_inf > 1
    return IncidenceReport(line, p, count, multiple, not multiple, bound)


def random_line(rng: random.Random, bound: int = DEFAULT_BOUND) -> Line:
    while True:
        rows = [[Fraction(rng.randint(-bound, bound)) for _ in range(4)] for _ in range(2)]
        if rank(rows) == 2:
            return Line(rows)


@dataclass
class DegreeSearchResult:
    maximum: int
    witness: Line
    witness_trial: int
    witness_poly: object
    trials: int
    generic_samples: int
    histogram: dict = field(default_factory=dict)


def developable_degree_search(c: CurveSpec, trials: int, seed: int = 0, bound: int = DEFAULT_BOUND) -> DegreeSearchResult:
    """Largest number of transversal tangent incidences seen over random lines."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    minors = tangent_minors(c)
    deg_bound = incidence_bound(c) if c.is_trig else max(m.degree for m in minors)
    best = None
    hist: dict[int, int] = {}
    generic = 0
    for i in range(trials):
        rng = random.Random(seed ^ i)
        rep = count_incidences(c, random_line(rng, bound), minors, deg_bound)
        if not rep.generic:
            continue
        generic += 1
        hist[rep.count] = hist.get(rep.count, 0) + 1
        if not c.is_trig:
            assert rep.poly.degree <= deg_bound
        assert rep.count <= deg_bound
        if best is None or rep.count > best[0]:
            best = (rep.count, i, rep)
    if best is None:
        raise NoGenericSample(f"no generic line among {trials} samples")
    count, i, rep = best
    return DegreeSearchResult(count, rep.line, i, rep.poly, trials, generic, dict(sorted(hist.items())))


# ---------------------------------------------------------------------------
# hyperplane convexity


def hyperplane_poly(c: CurveSpec, h) -> object:
    return sum((c.coords[i] * Fraction(h[i]) for i in range(4)), c.zero())


def hyperplane_multiplicity(c: CurveSpec, h) -> tuple[int, bool]:
    """Intersections of the curve with hyperplane ``h`` counted with multiplicity.

    Returns ``(total, multiple)``; for polynomial curves the point t = oo is
    included.
    """
    p = hyperplane_poly(c, h)
    if p.is_zero():
        raise GeometryError(f"curve lies in the hyperplane {h}")
    if isinstance(p, TrigPoly):
        distinct, _, total = trig_roots(p)
        return total, total > distinct
    total = real_roots_with_multiplicity(p) + (c.homogeneous_degree() - p.degree)
    return total, total > sturm_count(p)[0] + (1 if c.homogeneous_degree() > p.degree else 0)


@dataclass
class ConvexityVerdict:
    convex_consistent: bool
    frenet: object
    witness: tuple | None = None
    multiplicity: int | None = None
    hyperplanes_checked: int = 0


def convexity_check(c: CurveSpec, trials: int, seed: int = 0, bound: int = DEFAULT_BOUND) -> ConvexityVerdict:
    """Search for a hyperplane meeting the curve more than 3 times.

    Coordinate hyperplanes are tried first, then ``trials`` random integer
    ones.  Finding none is only consistent with convexity, not a proof.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    check_nonvanishing(c)
    ok, frenet = locally_convex(c)
    if not ok:
        raise DegenerateCurve(f"curve is not locally convex; Frenet determinant {frenet!r} has real zeros")
    candidates = [tuple(Fraction(int(i == j)) for j in range(4)) for i in range(4)]
    for i in range(trials):
        rng = random.Random(seed ^ i)
        h = tuple(Fraction(rng.randint(-bound, bound)) for _ in range(4))
        if any(h):
            candidates.append(h)
    for n, h in enumerate(candidates, 1):
        if hyperplane_poly(c, h).is_zero():
            continue
        total, _ = hyperplane_multiplicity(c, h)
        if total > 3:
            return ConvexityVerdict(False, frenet, h, total, n)
    return ConvexityVerdict(True, frenet, hyperplanes_checked=len(candidates))
