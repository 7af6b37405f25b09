import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from oracles import sign_changes
from realschubert.example import DSC_TERMS
from realschubert.poly import (
    MultiPoly,
    TrigPoly,
    UniPoly,
    quadratic_discriminant,
    real_roots_with_multiplicity,
    sturm_count,
    trig_root_count,
    trig_roots,
)
from realschubert.schubert import SYMBOLS, symbolic_counterexample_discriminant

rats = st.fractions(min_value=-10, max_value=10, max_denominator=8)


def test_sturm_examples():
    assert sturm_count(UniPoly([-1, 0, 1])) == (2, False)
    assert sturm_count(UniPoly([1, 0, 1])) == (0, False)
    p = UniPoly.from_roots([1, 1, -2])
    assert sturm_count(p) == (2, True)


def test_sturm_intervals():
    p = UniPoly.from_roots([0, 1, 2])
    assert sturm_count(p, 0, 2)[0] == 1  # open interval
    assert sturm_count(p, -1, 2)[0] == 2
    assert sturm_count(p, F(1, 2), None)[0] == 2
    assert sturm_count(p, None, 0)[0] == 0
    # multiplicity flag is local to the interval
    q = UniPoly.from_roots([1, 1, 5])
    assert sturm_count(q, 2, 6) == (1, False)
    assert sturm_count(q, 0, 2) == (1, True)


def test_sturm_rejects_zero():
    with pytest.raises(ValueError):
        sturm_count(UniPoly())


@settings(max_examples=150)
@given(st.lists(rats, min_size=1, max_size=7, unique=True), st.fractions(min_value=1, max_value=5))
def test_sturm_counts_distinct_linear_factors(roots, scale):
    p = UniPoly.from_roots(roots) * scale
    assert sturm_count(p) == (len(roots), False)


@settings(max_examples=100)
@given(st.lists(rats, min_size=1, max_size=5, unique=True), st.integers(1, 3))
def test_multiplicity_count(roots, k):
    p = UniPoly.from_roots(roots * k) * UniPoly([1, 0, 1])
    assert real_roots_with_multiplicity(p) == len(roots) * k
    assert sturm_count(p) == (len(set(roots)), k > 1)


def test_quadratic_discriminant_examples():
    assert quadratic_discriminant(UniPoly([-1, 0, 1])) == 4
    assert quadratic_discriminant(UniPoly([1, 0, 1])) == -4
    with pytest.raises(ValueError):
        quadratic_discriminant(UniPoly([0, 0, 0, 1]))


def test_discriminant_sign_agrees_with_sturm():
    rng = random.Random(3)
    for _ in range(1000):
        a = F(rng.choice([-1, 1]) * rng.randint(1, 6), rng.randint(1, 4))
        b, c = (F(rng.randint(-8, 8), rng.randint(1, 4)) for _ in range(2))
        if rng.random() < 0.1:
            c = b * b / (4 * a)  # force a double root now and then
        q = UniPoly([c, b, a])
        d = quadratic_discriminant(q)
        n, multiple = sturm_count(q)
        if d > 0:
            assert (n, multiple) == (2, False)
        elif d < 0:
            assert n == 0
        else:
            assert (n, multiple) == (1, True)


# trigonometric ------------------------------------------------------------

def test_trig_examples():
    assert trig_root_count(TrigPoly.cos(1)) == 2
    assert trig_root_count(TrigPoly.cos(2)) == 4
    assert trig_root_count(TrigPoly.cos(1) + 3) == 0
    # sin t vanishes at 0 and at pi (the chart-missed point)
    assert trig_roots(TrigPoly.sin(1)) == (2, False, 2)
    # 1 + cos t has a double root at pi
    assert trig_roots(TrigPoly.cos(1) + 1) == (1, True, 2)


def test_trig_rejects_zero():
    with pytest.raises(ValueError):
        trig_root_count(TrigPoly())


def test_trig_mul_and_derivative():
    c, s = TrigPoly.cos(1), TrigPoly.sin(1)
    assert c * c + s * s == 1
    assert c * s == TrigPoly.sin(2, F(1, 2))
    assert c.derivative() == TrigPoly.sin(1, -1)
    assert TrigPoly.cos(2).derivative().derivative() == TrigPoly.cos(2, -4)


trig_polys = st.dictionaries(
    st.integers(0, 4),
    st.tuples(st.fractions(min_value=-5, max_value=5, max_denominator=3),
              st.fractions(min_value=-5, max_value=5, max_denominator=3)),
    min_size=1,
    max_size=4,
).map(TrigPoly).filter(lambda p: not p.is_zero())


@settings(max_examples=60, deadline=None)
@given(trig_polys)
def test_trig_count_bounds(p):
    n = trig_root_count(p)
    distinct, _, total = trig_roots(p)
    assert n == distinct <= total <= 2 * p.max_frequency
    # a sampled sign change needs an odd-multiplicity root nearby
    assert sign_changes(p, 0.0, 2 * math.pi, n=4000) <= total


@settings(max_examples=60)
@given(trig_polys, trig_polys, st.floats(0, 6.28))
def test_trig_mul_matches_float(p, q, t):
    assert math.isclose((p * q)(t), p(t) * q(t), abs_tol=1e-7)


@settings(max_examples=60)
@given(trig_polys, st.fractions(min_value=-4, max_value=4, max_denominator=5))
def test_half_angle_exact(p, z):
    # (1 + z^2)^K p(t) at t = 2 atan z
    t = 2 * math.atan(float(z))
    k = p.max_frequency
    assert math.isclose(float(p.half_angle()(z)), (1 + float(z) ** 2) ** k * p(t), abs_tol=1e-6)


# multivariate -------------------------------------------------------------

def test_multipoly_difference_of_squares():
    a, b = MultiPoly.gens(("a", "b"))
    assert (a + b) * (a - b) == a * a - b * b


def test_multipoly_arity_mismatch():
    a = MultiPoly.var(("a",), "a")
    b = MultiPoly.var(("a", "b"), "b")
    with pytest.raises(ValueError):
        a + b


mp_vars = ("x", "y", "z")
multipolys = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)),
    st.fractions(min_value=-4, max_value=4, max_denominator=3),
    max_size=4,
).map(lambda d: MultiPoly(mp_vars, d))


@settings(max_examples=60)
@given(multipolys, multipolys, multipolys)
def test_multipoly_ring_laws(p, q, r):
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60)
@given(multipolys, multipolys, rats, rats, rats)
def test_substitution_is_homomorphism(p, q, x, y, z):
    vals = {"x": x, "y": y, "z": z}
    sp, sq = p.substitute(vals), q.substitute(vals)
    assert sp.is_constant()
    assert (p * q).substitute(vals) == sp * sq
    assert (p + q).substitute(vals) == sp + sq


def _stored_dsc():
    return MultiPoly(SYMBOLS, {e + (0,): c for e, c in DSC_TERMS.items()})


def test_symbolic_dsc_specializations():
    dsc = symbolic_counterexample_discriminant()
    zero = {"a": 0, "b": 0, "c": 0}
    a, b, c, d, e, f, u = MultiPoly.gens(SYMBOLS)
    assert dsc.substitute(zero) == 4 * d * d - 12 * d * e + 9 * e * e - 6 * d * f
    assert dsc.substitute(zero) == (2 * d - 3 * e) ** 2 - 6 * d * f
    assert dsc.substitute({**zero, "d": F(3, 2), "e": 1, "f": 1}).constant_value() == -9
    assert dsc == _stored_dsc()
    assert len(dsc) == 32


def test_multipoly_json_roundtrip():
    p = _stored_dsc()
    assert MultiPoly.from_json(p.to_json()) == p
