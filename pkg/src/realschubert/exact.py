"""Exact scalars and dense linear algebra.

Rationals are plain :class:`fractions.Fraction` values.  Elements of a
quadratic extension Q(sqrt(D)) are :class:`QuadExt`.  Matrices are lists of
row lists; every routine here works over any exact field whose elements
support ``+ - * /`` and comparison with ``0`` (so both Fraction and QuadExt
matrices go through the same code).
"""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from itertools import permutations
from math import gcd, isqrt, lcm


class GeometryError(ValueError):
    """A mathematical precondition failed (non-skew lines, singular input, ...)."""


class RadicandMismatch(GeometryError):
    pass


def rat(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot make an exact rational from {x!r}")


def rat_str(x: Fraction) -> str:
    x = rat(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def is_square(q: Fraction) -> bool:
    q = rat(q)
    if q < 0:
        return False
    n, d = q.numerator, q.denominator
    return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d


def rat_sqrt(q: Fraction) -> Fraction:
    if not is_square(q):
        raise ValueError(f"{q} is not a rational square")
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


# ---------------------------------------------------------------------------
# quadratic extension


class QuadExt:
    """The number ``a + b*sqrt(d)`` with rational a, b and non-square radicand d.

    Two values combine only when their radicands agree; rationals and ints
    are promoted with ``b = 0``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d):
        d = rat(d)
        if d == 0 or is_square(d):
            raise ValueError(f"radicand {d} must be nonzero and not a rational square")
        self.a = rat(a)
        self.b = rat(b)
        self.d = d

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise RadicandMismatch(f"radicands differ: {self.d} vs {other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadExt(self.a * o.a + self.b * o.b * self.d, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    def conjugate(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.d)

    def inverse(self) -> QuadExt:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in quadratic extension")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadExt(1, 0, self.d)
        for _ in range(k):
            out = out * self
        return out

    def sign(self) -> int:
        """Exact sign; only meaningful for a real extension (d > 0)."""
        if self.d < 0:
            raise ValueError("sign is undefined for an imaginary quadratic extension")
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 d
        diff = self.a * self.a - self.b * self.b * self.d
        return sa if diff > 0 else sb

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * float(self.d) ** 0.5

    def __repr__(self):
        return f"QuadExt({rat_str(self.a)}, {rat_str(self.b)}, {rat_str(self.d)})"


def conj(x):
    """Conjugate a scalar; rationals are fixed."""
    return x.conjugate() if isinstance(x, QuadExt) else x


def scalar_sign(x) -> int:
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# matrices


def matrix(rows) -> list[list]:
    """Copy a grid, turning ints and ``"p/q"`` strings into Fractions."""
    out = [[x if isinstance(x, QuadExt) else rat(x) for x in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def shape(m) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    if shape(a)[1] != len(b):
        raise ValueError(f"shape mismatch {shape(a)} x {shape(b)}")
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def det(m):
    """Determinant by Bareiss fraction-free elimination."""
    n, c = shape(m)
    if n != c:
        raise ValueError(f"determinant of a non-square {n}x{c} matrix")
    if n == 0:
        return Fraction(1)
    a = [list(row) for row in m]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
        prev = a[k][k]
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def det_expand(m):
    """Leibniz-formula determinant for matrices over a commutative ring.

    Used when entries are polynomials (no division available); fine for the
    4x4 sizes that occur here.
    """
    n = len(m)
    total = None
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = m[0][perm[0]]
        for i in range(1, n):
            term = term * m[i][perm[i]]
        if inv % 2:
            term = -term
        total = term if total is None else total + term
    return total


def rref(m):
    """Reduced row echelon form and pivot columns."""
    a = [list(row) for row in m]
    rows, cols = shape(a)
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m) -> int:
    if not m:
        return 0
    return len(rref(m)[1])


def primitive(v):
    """Scale a rational vector to coprime integers with positive first nonzero entry.

    Vectors with extension entries are instead scaled so the first nonzero
    entry is 1.
    """
    lead = next((x for x in v if x != 0), None)
    if lead is None:
        return list(v)
    if any(isinstance(x, QuadExt) for x in v):
        return [x / lead for x in v]
    v = [rat(x) for x in v]
    den = reduce(lcm, (x.denominator for x in v), 1)
    ints = [x.numerator * (den // x.denominator) for x in v]
    g = reduce(gcd, ints, 0)
    s = 1 if lead > 0 else -1
    return [Fraction(s * x // g) for x in ints]


def kernel(m, cols: int | None = None):
    """Basis of the right null space, each vector in :func:`primitive` form."""
    ncols = shape(m)[1] if m else cols
    if ncols is None:
        raise ValueError("column count needed for an empty matrix")
    if not m:
        return [primitive(r) for r in identity(ncols)]
    red, pivots = rref(m)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][free]
        basis.append(primitive(v))
    return basis


def is_symmetric(m) -> bool:
    n, c = shape(m)
    return n == c and all(m[i][j] == m[j][i] for i in range(n) for j in range(i))
