"""Wronskians of polynomial subspaces and the inverse problem for pencils of cubics.

Cubics are written in the coefficient basis (1, x, x^2, x^3), so a pencil
(2-dimensional subspace) of cubics is a line in RP^3.  The cubics with a
double root at t form the line spanned by (x - t)^2 and (x - t)^3; a pencil
whose Wronskian vanishes at t1..t4 is a line meeting those four lines.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import GeometryError, det_expand, rank, rref
from .poly import UniPoly
from .projective import Line
from .schubert import four_lines_solve


@dataclass(frozen=True)
class PolySubspace:
    basis: tuple
    n: int = 3

    def __post_init__(self):
        basis = tuple(self.basis)
        object.__setattr__(self, "basis", basis)
        if any(p.degree > self.n for p in basis):
            raise ValueError(f"basis polynomial of degree > {self.n}")
        if rank(self.coefficient_matrix()) != len(basis):
            raise GeometryError("basis polynomials are linearly dependent")

    @property
    def k(self) -> int:
        return len(self.basis) - 1

    def coefficient_matrix(self):
        return [[p[i] for i in range(self.n + 1)] for p in self.basis]

    def __eq__(self, other):
        if not isinstance(other, PolySubspace) or other.n != self.n:
            return NotImplemented
        return rref(self.coefficient_matrix())[0] == rref(other.coefficient_matrix())[0]

    def __hash__(self):
        return hash(tuple(tuple(r) for r in rref(self.coefficient_matrix())[0]))


def wronskian(s: PolySubspace) -> UniPoly:
    rows = [list(s.basis)]
    for _ in range(s.k):
        rows.append([p.derivative() for p in rows[-1]])
    w = det_expand(rows)
    bound = (s.k + 1) * (s.n - s.k)
    assert w.degree <= bound, f"Wronskian degree {w.degree} exceeds {bound}"
    return w


def proportional(p: UniPoly, q: UniPoly) -> bool:
    """p = c q for a nonzero constant c (cross-multiplied leading coefficients)."""
    if p.is_zero() or q.is_zero():
        return False
    return p * q.lead() == q * p.lead()


def vanishing_line(t) -> Line:
    """Cubics vanishing to second order at t, as a line in coefficient space."""
    t = Fraction(t)
    sq = UniPoly([-t, 1]) ** 2
    cube = UniPoly([-t, 1]) ** 3
    return Line([[sq[i] for i in range(4)], [cube[i] for i in range(4)]])


def line_to_subspace(line: Line) -> PolySubspace:
    return PolySubspace(tuple(UniPoly(row) for row in line.span), n=3)


@dataclass
class InverseWronskiResult:
    roots: tuple
    subspaces: list
    discriminant: Fraction
    real: bool
    verified: bool


def inverse_wronski4(t1, t2, t3, t4) -> InverseWronskiResult:
    """The pencils of cubics whose Wronskian has roots exactly t1..t4."""
    ts = tuple(Fraction(t) for t in (t1, t2, t3, t4))
    if len(set(ts)) != 4:
        raise GeometryError(f"roots must be pairwise distinct, got {ts}")
    rep = four_lines_solve(*(vanishing_line(t) for t in ts))
    subspaces = [line_to_subspace(ln) for ln in rep.transversals]
    target = UniPoly.from_roots(ts)
    verified = len(subspaces) == 2 and subspaces[0] != subspaces[1] and all(
        proportional(wronskian(s), target) for s in subspaces
    )
    return InverseWronskiResult(ts, subspaces, rep.discriminant, rep.real_count == 2, verified)
