"""Lines and flags in RP^3, Pluecker coordinates, and parametrized curves.

The rational normal curve is taken in the factorial-scaled form
``(1, t, t^2/2, t^3/6)`` so that its osculating frame at t is exactly
``exp(t N)`` with N the nilpotent shift.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import GeometryError, det, det_expand, identity, matrix, primitive, rank, rref
from .poly import TrigPoly, UniPoly, poly_gcd, sturm_count, trig_roots

PLUCKER_INDEX = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


class Line:
    """A projective line, stored as a rank-2 2x4 span; compared by RREF."""

    __slots__ = ("span", "_key")

    def __init__(self, rows):
        m = matrix(rows)
        if len(m) != 2 or len(m[0]) != 4:
            raise ValueError("a line is given by a 2x4 matrix")
        if rank(m) != 2:
            raise GeometryError("spanning rows of a line must be independent")
        self.span = m
        self._key = None

    def rref(self):
        if self._key is None:
            self._key = tuple(tuple(r) for r in rref(self.span)[0])
        return self._key

    def __eq__(self, other):
        return isinstance(other, Line) and self.rref() == other.rref()

    def __hash__(self):
        return hash(self.rref())

    def __repr__(self):
        return f"Line({self.span!r})"


def minors2(rows) -> list:
    """The six 2x2 column minors (12, 13, 14, 23, 24, 34) of a 2x4 array over any ring."""
    a, b = rows
    return [a[i] * b[j] - a[j] * b[i] for i, j in PLUCKER_INDEX]


def plucker(line: Line) -> tuple:
    """Canonical Pluecker vector: primitive, first nonzero entry positive."""
    p = tuple(primitive(minors2(line.span)))
    if plucker_relation(p) != 0:
        raise AssertionError(f"Pluecker relation violated by {p}")
    return p


def plucker_relation(p):
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]


def plucker_pairing(p, q):
    """det of the 4x4 matrix stacking lines with Pluecker vectors p and q."""
    return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[3] * q[2] - p[4] * q[1] + p[5] * q[0]


def line_from_plucker(p) -> Line:
    """Recover a line from a nonzero Pluecker vector satisfying the relation."""
    if all(x == 0 for x in p) or plucker_relation(p) != 0:
        raise GeometryError(f"{p} is not a Pluecker vector of a line")
    big = [[Fraction(0)] * 4 for _ in range(4)]
    for (i, j), v in zip(PLUCKER_INDEX, p):
        big[i][j] = v
        big[j][i] = -v
    # rows of the antisymmetric matrix a^b^T - b^a^T span the line
    red, piv = rref(big)
    return Line(red[:2])


def lines_skew(l1: Line, l2: Line) -> bool:
    return det(l1.span + l2.span) != 0


def lines_meet(l1: Line, l2: Line) -> bool:
    return not lines_skew(l1, l2)


# ---------------------------------------------------------------------------
# flags


def flags_transversal(f1, f2) -> bool:
    """Every pair of subspaces, one from each flag, meets transversally."""
    m = len(f1)
    if len(f2) != m or any(len(r) != m for r in f1) or any(len(r) != m for r in f2):
        raise ValueError("flags must be frames of the same size")
    for i in range(1, m):
        for j in range(1, m - i + 1):
            if rank(f1[:i] + f2[:j]) != i + j:
                return False
    return True


def standard_flag(m: int = 4):
    return identity(m)


def opposite_flag(m: int = 4):
    return identity(m)[::-1]


def rnc_osc_flag(t, m: int = 4):
    """Osculating frame of the rational normal curve at t: ``exp(t N)``."""
    t = Fraction(t)
    return [[t ** (j - i) / factorial(j - i) if j >= i else Fraction(0) for j in range(m)] for i in range(m)]


def rnc_tangent_line(t) -> Line:
    return Line(rnc_osc_flag(t)[:2])


def rnc_osc_plane(t):
    return rnc_osc_flag(t)[:3]


# ---------------------------------------------------------------------------
# curves


@dataclass(frozen=True)
class CurveSpec:
    """t -> (x1(t), ..., x4(t)) with all-polynomial or all-trigonometric coordinates."""

    coords: tuple
    name: str = "custom"

    def __post_init__(self):
        if len(self.coords) != 4:
            raise ValueError("a curve in RP^3 needs four coordinate functions")
        kinds = {type(c) for c in self.coords}
        if kinds not in ({UniPoly}, {TrigPoly}):
            raise ValueError("coordinates must be all UniPoly or all TrigPoly")

    @property
    def is_trig(self) -> bool:
        return isinstance(self.coords[0], TrigPoly)

    def derivative(self) -> CurveSpec:
        return CurveSpec(tuple(c.derivative() for c in self.coords), name=f"{self.name}'")

    def __call__(self, t):
        return tuple(c(t) for c in self.coords)

    def zero(self):
        return TrigPoly() if self.is_trig else UniPoly()

    def one(self):
        return TrigPoly.const(1) if self.is_trig else UniPoly.const(1)

    def homogeneous_degree(self) -> int:
        """Polynomial curves: max coordinate degree; trig curves: max frequency."""
        if self.is_trig:
            return max(c.max_frequency for c in self.coords)
        return max(c.degree for c in self.coords)


def rnc_curve() -> CurveSpec:
    return CurveSpec(
        (UniPoly([1]), UniPoly([0, 1]), UniPoly([0, 0, Fraction(1, 2)]), UniPoly([0, 0, 0, Fraction(1, 6)])),
        name="rnc",
    )


def trig_curve() -> CurveSpec:
    """(cos t, sin t, cos 2t, sin 2t): locally convex, not convex."""
    return CurveSpec((TrigPoly.cos(1), TrigPoly.sin(1), TrigPoly.cos(2), TrigPoly.sin(2)), name="trig")


def curve_eval(c: CurveSpec, t):
    p = c(t)
    if all(x == 0 for x in p):
        raise GeometryError(f"all coordinates of {c.name} vanish at t = {t}")
    return p


def curve_derivative(c: CurveSpec) -> CurveSpec:
    return c.derivative()


def check_nonvanishing(c: CurveSpec) -> None:
    """Raise if the coordinates share a real zero (the curve would be undefined there)."""
    if c.is_trig:
        k = c.homogeneous_degree()
        zs = [x.half_angle(k) for x in c.coords]
        if all(x.at_pi() == 0 for x in c.coords):
            raise GeometryError("coordinates vanish simultaneously at t = pi")
    else:
        zs = list(c.coords)
    g = zs[0]
    for z in zs[1:]:
        g = poly_gcd(g, z)
    if g.is_zero():
        raise GeometryError("all coordinates are identically zero")
    if g.degree > 0 and sturm_count(g)[0] > 0:
        raise GeometryError("coordinates share a real zero")


def frenet_det(c: CurveSpec):
    """det(g, g', g'', g''') as a polynomial / trigonometric polynomial in t."""
    rows = [c]
    for _ in range(3):
        rows.append(rows[-1].derivative())
    return det_expand([list(r.coords) for r in rows])


def locally_convex(c: CurveSpec) -> tuple[bool, object]:
    """(ok, frenet determinant); ok when the determinant has no real zero."""
    f = frenet_det(c)
    if f.is_zero():
        return False, f
    if c.is_trig:
        return trig_roots(f)[0] == 0, f
    return sturm_count(f)[0] == 0, f


def tangent_minors(c: CurveSpec) -> list:
    """Pluecker coordinates of the tangent line at t, as functions of t."""
    return minors2([list(c.coords), list(c.derivative().coords)])
