"""Univariate, sparse multivariate and trigonometric polynomials.

:class:`UniPoly` coefficients may be Fractions, QuadExt values or
:class:`MultiPoly` values; root counting requires Fraction coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from .exact import rat, rat_str

ZERO = Fraction(0)
ONE = Fraction(1)


def _is_zero(c) -> bool:
    return c == 0


class UniPoly:
    """Dense univariate polynomial, ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [rat(c) if isinstance(c, (int, str)) else c for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @classmethod
    def const(cls, c) -> UniPoly:
        return cls([c])

    @classmethod
    def from_roots(cls, roots) -> UniPoly:
        p = cls([1])
        for r in roots:
            p = p * cls([-rat(r) if isinstance(r, (int, str)) else -r, 1])
        return p

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lead(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self[i] + o[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if _is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        return self.coeffs == UniPoly([other]).coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> UniPoly:
        return UniPoly([c * i for i, c in enumerate(self.coeffs)][1:])

    def map(self, f) -> UniPoly:
        return UniPoly([f(c) for c in self.coeffs])

    def monic(self) -> UniPoly:
        return UniPoly([c / self.lead() for c in self.coeffs])

    def __divmod__(self, other: UniPoly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        dq = other.degree
        lc = other.lead()
        q = [ZERO] * max(len(r) - dq, 1)
        while len(r) - 1 >= dq and r:
            f = r[-1] / lc
            shift = len(r) - 1 - dq
            q[shift] = f
            for i, c in enumerate(other.coeffs):
                r[shift + i] = r[shift + i] - f * c
            r.pop()
            while r and _is_zero(r[-1]):
                r.pop()
        return UniPoly(q), UniPoly(r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            s = rat_str(c) if isinstance(c, Fraction) else f"({c!r})"
            parts.append(s if i == 0 else f"{s}*x" + (f"^{i}" if i > 1 else ""))
        return " + ".join(parts)


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree(p: UniPoly) -> UniPoly:
    g = poly_gcd(p, p.derivative())
    return (p // g).monic() if g.degree > 0 else p.monic()


# ---------------------------------------------------------------------------
# Sturm sequences


def _positive_scale(p: UniPoly) -> UniPoly:
    # dividing by |lead| keeps every sign and keeps entries small
    lc = p.lead()
    return p * (ONE / abs(lc)) if abs(lc) != 1 else p


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    """p, p', then negated remainders; the last entry is gcd(p, p') up to scale."""
    seq = [p, _positive_scale(p.derivative())]
    while True:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            return seq
        seq.append(_positive_scale(-r))


def _sign_at(p: UniPoly, x) -> int:
    """Sign of p at x, with x = +-inf given as the strings '+inf' / '-inf'."""
    if x == "+inf":
        c = p.lead()
    elif x == "-inf":
        c = p.lead() * (-1 if p.degree % 2 else 1)
    else:
        c = p(x)
    return (c > 0) - (c < 0)


def _variations(seq, x) -> int:
    signs = [s for s in (_sign_at(q, x) for q in seq) if s]
    return sum(1 for u, v in zip(signs, signs[1:]) if u != v)


def _count_squarefree(p: UniPoly, lo, hi, seq=None) -> int:
    if p.degree <= 0:
        return 0
    seq = seq or sturm_sequence(p)
    lo_ = "-inf" if lo is None else lo
    hi_ = "+inf" if hi is None else hi
    n = _variations(seq, lo_) - _variations(seq, hi_)
    # variations give roots in (lo, hi]; the interval is open
    if hi is not None and p(hi) == 0:
        n -= 1
    return n


def sturm_count(p: UniPoly, lo=None, hi=None) -> tuple[int, bool]:
    """Distinct real roots of p in the open interval (lo, hi).

    ``None`` endpoints mean -inf / +inf.  Returns ``(count, multiple)`` where
    ``multiple`` is True when some root in the interval is not simple.
    """
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    lo = None if lo is None else rat(lo)
    hi = None if hi is None else rat(hi)
    if lo is not None and hi is not None and lo >= hi:
        return 0, False
    if p.degree <= 0:
        return 0, False
    seq = sturm_sequence(p)
    g = seq[-1]
    if g.degree == 0:
        return _count_squarefree(p, lo, hi, seq), False
    n = _count_squarefree((p // g).monic(), lo, hi)
    multiple = _count_squarefree(squarefree(g), lo, hi) > 0
    return n, multiple


def real_roots_with_multiplicity(p: UniPoly, lo=None, hi=None) -> int:
    """Real roots in (lo, hi) counted with multiplicity."""
    if p.is_zero():
        raise ValueError("root count of the zero polynomial")
    total = 0
    g = p
    while g.degree > 0:
        total += sturm_count(g, lo, hi)[0]
        g = poly_gcd(g, g.derivative())
    return total


def quadratic_discriminant(q: UniPoly):
    """``B**2 - 4*A*C`` for ``q = A*u**2 + B*u + C``; coefficients may be symbolic."""
    if q.degree > 2:
        raise ValueError(f"degree {q.degree} > 2 in the quadratic variable")
    a, b, c = q[2], q[1], q[0]
    return b * b - a * c * 4


# ---------------------------------------------------------------------------
# multivariate


class MultiPoly:
    """Sparse polynomial over Q in a fixed tuple of named indeterminates."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        self.terms = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != len(self.vars):
                raise ValueError(f"exponent {exp} does not match variables {self.vars}")
            c = rat(c) if isinstance(c, (int, str)) else c
            if c != 0:
                self.terms[exp] = self.terms.get(exp, ZERO) + c
                if self.terms[exp] == 0:
                    del self.terms[exp]

    @classmethod
    def var(cls, variables, name) -> MultiPoly:
        variables = tuple(variables)
        exp = tuple(int(v == name) for v in variables)
        return cls(variables, {exp: ONE})

    @classmethod
    def constant(cls, variables, c) -> MultiPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def gens(cls, variables) -> tuple[MultiPoly, ...]:
        return tuple(cls.var(variables, v) for v in variables)

    def _lift(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(self.vars, other)
        raise TypeError(f"cannot combine MultiPoly with {type(other).__name__}")

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out.get(e, ZERO) + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, ZERO) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MultiPoly.constant(self.vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, c):
        return self * (ONE / rat(c))

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * len(self.vars): other}
        return NotImplemented

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.terms.get((0,) * len(self.vars), ZERO)

    def degree_in(self, name) -> int:
        i = self.vars.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def substitute(self, values: dict) -> MultiPoly:
        """Replace named indeterminates by rationals or MultiPolys (same variables)."""
        out = MultiPoly(self.vars)
        for e, c in self.terms.items():
            term = MultiPoly.constant(self.vars, c)
            rest = list(e)
            for name, val in values.items():
                i = self.vars.index(name)
                k = rest[i]
                if k == 0:
                    continue
                rest[i] = 0
                v = val if isinstance(val, MultiPoly) else MultiPoly.constant(self.vars, rat(val))
                term = term * v ** k
            term = term * MultiPoly(self.vars, {tuple(rest): ONE})
            out = out + term
        return out

    def as_univariate(self, name) -> UniPoly:
        """View as a polynomial in ``name`` with MultiPoly coefficients."""
        i = self.vars.index(name)
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            rest = e[:i] + (0,) + e[i + 1:]
            buckets.setdefault(e[i], {})[rest] = c
        n = max(buckets, default=-1) + 1
        return UniPoly([MultiPoly(self.vars, buckets.get(k, {})) for k in range(n)])

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": {",".join(map(str, e)): rat_str(c) for e, c in sorted(self.terms.items())},
        }

    @classmethod
    def from_json(cls, obj) -> MultiPoly:
        return cls(obj["vars"], {tuple(int(x) for x in k.split(",")): Fraction(v) for k, v in obj["terms"].items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(self.vars, e) if k)
            parts.append(f"{rat_str(c)}*{mono}" if mono else rat_str(c))
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# trigonometric


class TrigPoly:
    """Finite sum of ``c_k cos(k t) + s_k sin(k t)``; ``terms[k] = (c_k, s_k)``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        for k, (c, s) in (terms or {}).items():
            k = int(k)
            if k < 0:
                raise ValueError("frequencies are nonnegative")
            c, s = rat(c), rat(s)
            if k == 0:
                s = ZERO
            if c != 0 or s != 0:
                self.terms[k] = (c, s)

    @classmethod
    def const(cls, c) -> TrigPoly:
        return cls({0: (c, 0)})

    @classmethod
    def cos(cls, k: int, coef=1) -> TrigPoly:
        return cls({k: (coef, 0)})

    @classmethod
    def sin(cls, k: int, coef=1) -> TrigPoly:
        return cls({k: (0, coef)})

    @property
    def max_frequency(self) -> int:
        return max(self.terms, default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def _get(self, k):
        return self.terms.get(k, (ZERO, ZERO))

    def _lift(self, other):
        return other if isinstance(other, TrigPoly) else TrigPoly.const(rat(other))

    def __add__(self, other):
        o = self._lift(other)
        keys = set(self.terms) | set(o.terms)
        return TrigPoly({k: tuple(x + y for x, y in zip(self._get(k), o._get(k))) for k in keys})

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly({k: (-c, -s) for k, (c, s) in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, TrigPoly):
            f = rat(other)
            return TrigPoly({k: (c * f, s * f) for k, (c, s) in self.terms.items()})
        acc: dict[int, list] = {}

        def put(k, c, s):
            # fold negative frequencies: cos(-k) = cos k, sin(-k) = -sin k
            if k < 0:
                k, s = -k, -s
            slot = acc.setdefault(k, [ZERO, ZERO])
            slot[0] += c
            slot[1] += s

        half = Fraction(1, 2)
        for a, (ca, sa) in self.terms.items():
            for b, (cb, sb) in other.terms.items():
                put(a - b, half * (ca * cb + sa * sb), half * (sa * cb - ca * sb))
                put(a + b, half * (ca * cb - sa * sb), half * (sa * cb + ca * sb))
        return TrigPoly({k: tuple(v) for k, v in acc.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TrigPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == TrigPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def derivative(self) -> TrigPoly:
        return TrigPoly({k: (k * s, -k * c) for k, (c, s) in self.terms.items() if k})

    def __call__(self, t: float) -> float:
        import math

        return sum(float(c) * math.cos(k * t) + float(s) * math.sin(k * t) for k, (c, s) in self.terms.items())

    def at_pi(self) -> Fraction:
        """Exact value at t = pi."""
        return sum((c if k % 2 == 0 else -c for k, (c, _) in self.terms.items()), ZERO)

    def half_angle(self, big_k: int | None = None) -> UniPoly:
        """``(1 + z**2)**K * p(t)`` with ``z = tan(t/2)``, a polynomial of degree <= 2K."""
        big_k = self.max_frequency if big_k is None else big_k
        one_z2 = UniPoly([1, 0, 1])
        out = UniPoly()
        for k, (c, s) in self.terms.items():
            # (1 + i z)^(2k) = sum comb(2k, j) i^j z^j
            re = [ZERO] * (2 * k + 1)
            im = [ZERO] * (2 * k + 1)
            for j in range(2 * k + 1):
                v = Fraction(comb(2 * k, j))
                r = j % 4
                if r == 0:
                    re[j] = v
                elif r == 1:
                    im[j] = v
                elif r == 2:
                    re[j] = -v
                else:
                    im[j] = -v
            out = out + (UniPoly(re) * c + UniPoly(im) * s) * one_z2 ** (big_k - k)
        return out

    def to_json(self) -> dict:
        return {str(k): [rat_str(c), rat_str(s)] for k, (c, s) in sorted(self.terms.items())}

    @classmethod
    def from_json(cls, obj) -> TrigPoly:
        return cls({int(k): (Fraction(v[0]), Fraction(v[1])) for k, v in obj.items()})

    def __repr__(self):
        parts = []
        for k, (c, s) in sorted(self.terms.items()):
            if k == 0:
                parts.append(rat_str(c))
                continue
            if c:
                parts.append(f"{rat_str(c)}*cos({k}t)")
            if s:
                parts.append(f"{rat_str(s)}*sin({k}t)")
        return " + ".join(parts) or "0"


def trig_roots(p: TrigPoly, with_multiplicity: bool = True) -> tuple[int, bool, int | None]:
    """Roots of p in [0, 2pi): ``(distinct, multiple, with_multiplicity)``.

    The third entry is None when ``with_multiplicity`` is False.
    """
    if p.is_zero():
        raise ValueError("root count of the zero trigonometric polynomial")
    big_k = p.max_frequency
    z = p.half_angle(big_k)
    # t = pi is z = oo; its multiplicity is the degree drop
    at_pi = 2 * big_k - z.degree
    distinct, multiple = sturm_count(z)
    total = real_roots_with_multiplicity(z) + at_pi if with_multiplicity else None
    if at_pi:
        distinct += 1
        multiple = multiple or at_pi > 1
    return distinct, multiple, total


def trig_root_count(p: TrigPoly) -> int:
    """Distinct roots of p in one period [0, 2pi)."""
    return trig_roots(p)[0]


def unipoly_to_json(p: UniPoly) -> dict:
    return {str(i): rat_str(c) for i, c in enumerate(p.coeffs) if c != 0}


def unipoly_from_json(obj) -> UniPoly:
    if isinstance(obj, list):
        return UniPoly([Fraction(c) for c in obj])
    n = max((int(k) for k in obj), default=-1) + 1
    cs = [ZERO] * n
    for k, v in obj.items():
        cs[int(k)] = Fraction(v)
    return UniPoly(cs)
