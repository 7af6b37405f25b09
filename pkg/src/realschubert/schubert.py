"""Lines meeting four lines in RP^3, and the Grassmannian degree.

Three pairwise skew lines lie on a unique quadric Q.  The lines meeting all
of l1..l4 pass through the points of ``l4 & Q``; their number over the reals
is read off from the discriminant of Q restricted to l4.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial, prod

from .exact import (
    GeometryError,
    QuadExt,
    det,
    is_square,
    kernel,
    primitive,
    rat_sqrt,
    rref,
)
from .poly import MultiPoly, UniPoly, quadratic_discriminant
from .projective import Line, lines_skew

MONOMIALS = list(combinations_with_replacement(range(4), 2))


class NotSkewError(GeometryError):
    pass


class NonGenericConfiguration(GeometryError):
    pass


@dataclass(frozen=True)
class Quadric:
    """A quadric surface, stored as its 10 monomial coefficients in a canonical scale.

    ``coeffs[k]`` multiplies ``x_i x_j`` for ``(i, j) = MONOMIALS[k]`` (0-based,
    i <= j).  The canonical scale is a primitive integer vector whose first
    nonzero entry is positive.
    """

    coeffs: tuple

    @classmethod
    def from_coeffs(cls, coeffs) -> Quadric:
        if all(c == 0 for c in coeffs):
            raise ValueError("zero quadric")
        return cls(tuple(primitive(coeffs)))

    @classmethod
    def from_terms(cls, terms: dict) -> Quadric:
        """From ``{(i, j): c}`` with 1-based variable indices, as in ``2 x1 x3``."""
        cs = [Fraction(0)] * 10
        for (i, j), c in terms.items():
            i, j = sorted((i - 1, j - 1))
            cs[MONOMIALS.index((i, j))] += Fraction(c)
        return cls.from_coeffs(cs)

    def matrix(self):
        q = [[Fraction(0)] * 4 for _ in range(4)]
        for (i, j), c in zip(MONOMIALS, self.coeffs):
            if i == j:
                q[i][i] = c
            else:
                q[i][j] = q[j][i] = c / 2
        return q

    def __call__(self, x):
        return sum((c * x[i] * x[j] for (i, j), c in zip(MONOMIALS, self.coeffs)), Fraction(0))

    def polar(self, x, y):
        """``Q(x + y) - Q(x) - Q(y)``."""
        return sum(
            (c * (x[i] * y[j] + x[j] * y[i]) for (i, j), c in zip(MONOMIALS, self.coeffs)),
            Fraction(0),
        )

    def restrict(self, line: Line) -> UniPoly:
        """``Q(r1 + u r2)`` for the RREF rows r1, r2 of the line, as a polynomial in u."""
        r1, r2 = rref(line.span)[0]
        return UniPoly([self(r1), self.polar(r1, r2), self(r2)])

    def contains(self, line: Line) -> bool:
        return self.restrict(line).is_zero()

    def __str__(self):
        parts = []
        for (i, j), c in zip(MONOMIALS, self.coeffs):
            if c:
                mono = f"x{i+1}^2" if i == j else f"x{i+1}*x{j+1}"
                coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
                parts.append(f"{coef}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _line_conditions(line: Line):
    """Three rows (coefficient linear forms) expressing ``Q|line == 0``."""
    a, b = line.span
    return [
        [a[i] * a[j] for i, j in MONOMIALS],
        [a[i] * b[j] + a[j] * b[i] for i, j in MONOMIALS],
        [b[i] * b[j] for i, j in MONOMIALS],
    ]


def require_pairwise_skew(*lines: Line) -> None:
    for i in range(len(lines)):
        for j in range(i + 1, len(lines)):
            if not lines_skew(lines[i], lines[j]):
                raise NotSkewError(f"lines not pairwise skew (lines {i + 1} and {j + 1} meet)")


def quadric_through_three(l1: Line, l2: Line, l3: Line) -> Quadric:
    require_pairwise_skew(l1, l2, l3)
    system = _line_conditions(l1) + _line_conditions(l2) + _line_conditions(l3)
    ker = kernel(system)
    if len(ker) != 1:
        raise NonGenericConfiguration(f"quadric system has kernel dimension {len(ker)}")
    q = Quadric.from_coeffs(ker[0])
    for ln in (l1, l2, l3):
        assert q.contains(ln)
    return q


@dataclass
class FourLinesReport:
    quadric: Quadric
    restricted: UniPoly
    discriminant: Fraction
    real_count: int
    multiple: bool = False
    radicand: Fraction | None = None
    transversals: list = field(default_factory=list)


def _point_on(line_rows, u):
    r1, r2 = line_rows
    return [x + u * y for x, y in zip(r1, r2)]


def _plane_through(point, line: Line):
    """Normal covector of the plane spanned by a point and a line."""
    ker = kernel([list(point)] + [list(r) for r in line.span])
    if len(ker) != 1:
        raise NonGenericConfiguration("point lies on the line")
    return ker[0]


def transversal_through(point, l1: Line, l2: Line) -> Line:
    """The line through ``point`` meeting l1 and l2 (planes through point and each line)."""
    n1 = _plane_through(point, l1)
    n2 = _plane_through(point, l2)
    ker = kernel([n1, n2])
    if len(ker) != 2:
        raise NonGenericConfiguration("planes through the point coincide")
    return Line(ker)


def meets(a: Line, b: Line) -> bool:
    return det(a.span + b.span) == 0


def four_lines_solve(l1: Line, l2: Line, l3: Line, l4: Line) -> FourLinesReport:
    require_pairwise_skew(l1, l2, l3, l4)
    q = quadric_through_three(l1, l2, l3)
    restricted = q.restrict(l4)
    c, b, a = restricted[0], restricted[1], restricted[2]
    if a == 0 and b == 0 and c == 0:
        raise NonGenericConfiguration("the fourth line lies on the quadric through the other three")
    disc = quadratic_discriminant(restricted)
    report = FourLinesReport(q, restricted, disc, 0)
    if disc < 0:
        return report
    if disc == 0:
        report.real_count = 1
        report.multiple = True
        return report
    report.real_count = 2
    rows = rref(l4.span)[0]
    if a == 0:
        # one root at the chart-missed point r2, the other at u = -c/b
        points = [list(rows[1]), _point_on(rows, -c / b)]
    else:
        if is_square(disc):
            roots = [Fraction(0) + rat_sqrt(disc), -rat_sqrt(disc)]
        else:
            report.radicand = disc
            roots = [QuadExt(0, 1, disc), QuadExt(0, -1, disc)]
        points = [_point_on(rows, (-b + s) / (2 * a)) for s in roots]
    for p in points:
        t = transversal_through(p, l1, l2)
        if not all(meets(t, ln) for ln in (l1, l2, l3, l4)):
            raise AssertionError("constructed transversal misses an input line")
        report.transversals.append(t)
    return report


def real_transversal_count(lines) -> int:
    return four_lines_solve(*lines).real_count


# ---------------------------------------------------------------------------
# the symbolic discriminant of the counterexample

SYMBOLS = ("a", "b", "c", "d", "e", "f", "u")


def symbolic_restriction(quadric: Quadric | None = None) -> UniPoly:
    """Q restricted to ``ll = row1 + u row2`` of ``l2 * M(a..f)``, as a polynomial in u.

    M is the unit upper-triangular matrix with entries a, b, c / d, e / f
    above the diagonal; the result has MultiPoly coefficients in a..f.
    """
    from .example import L2, PHI

    quadric = quadric or PHI
    a, b, c, d, e, f, u = MultiPoly.gens(SYMBOLS)
    one = MultiPoly.constant(SYMBOLS, 1)
    zero = MultiPoly(SYMBOLS)
    m = [[one, a, b, c], [zero, one, d, e], [zero, zero, one, f], [zero, zero, zero, one]]
    moved = [[sum((m[k][j] * row[k] for k in range(4)), zero) for j in range(4)] for row in L2]
    pt = [x + u * y for x, y in zip(moved[0], moved[1])]
    value = quadric(pt)
    return value.as_univariate("u")


def symbolic_counterexample_discriminant() -> MultiPoly:
    return quadratic_discriminant(symbolic_restriction())


# ---------------------------------------------------------------------------
# Grassmannian degree


def sharp(k: int, n: int) -> int:
    """Degree of the Grassmannian of projective k-planes in RP^n (a factorial formula)."""
    if not (0 <= k <= n - 1):
        raise ValueError(f"need 0 <= k <= n - 1, got k={k}, n={n}")
    num = prod(factorial(i) for i in range(1, n - k)) * factorial((k + 1) * (n - k))
    den = prod(factorial(i) for i in range(k + 1, n + 1))
    q, r = divmod(num, den)
    assert r == 0
    return q
