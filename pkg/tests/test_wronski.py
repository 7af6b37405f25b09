import random
from fractions import Fraction as F

import pytest

from realschubert.exact import GeometryError, det, matmul
from realschubert.poly import UniPoly
from realschubert.projective import Line, lines_skew
from realschubert.wronski import (
    PolySubspace,
    inverse_wronski4,
    proportional,
    vanishing_line,
    wronskian,
)

x = UniPoly.x()


def test_wronskian_examples():
    assert wronskian(PolySubspace((UniPoly([1]), x))) == 1
    t = F(3, 2)
    s = PolySubspace(((x - t) ** 2, (x - t) ** 3))
    assert wronskian(s) == (x - t) ** 4
    assert wronskian(PolySubspace((UniPoly([1]), x, x ** 2, x ** 3))) == 12


def test_dependent_basis_rejected():
    with pytest.raises(GeometryError):
        PolySubspace((x, x * 2))


def test_basis_covariance():
    rng = random.Random(73)
    for k, n in ((1, 3), (2, 4), (1, 5)):
        for _ in range(15):
            basis = tuple(UniPoly([F(rng.randint(-5, 5)) for _ in range(n + 1)]) for _ in range(k + 1))
            try:
                s = PolySubspace(basis, n=n)
            except GeometryError:
                continue
            g = [[F(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(k + 1)] for _ in range(k + 1)]
            if det(g) == 0:
                continue
            mixed = tuple(sum((basis[j] * g[i][j] for j in range(k + 1)), UniPoly()) for i in range(k + 1))
            w = wronskian(s)
            assert wronskian(PolySubspace(mixed, n=n)) == w * det(g)
            assert w.degree <= (k + 1) * (n - k)


def test_vanishing_line():
    assert vanishing_line(0) == Line([[0, 0, 1, 0], [0, 0, 0, 1]])
    t = F(-2, 3)
    ln = vanishing_line(t)
    s = PolySubspace(tuple(UniPoly(r) for r in ln.span))
    assert proportional(wronskian(s), (x - t) ** 4)


def test_vanishing_lines_skew_with_power_determinant():
    rng = random.Random(79)
    ratios = set()
    for _ in range(30):
        t, u = (F(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(2))
        if t == u:
            continue
        a, b = vanishing_line(t), vanishing_line(u)
        assert lines_skew(a, b)
        ratios.add(det(a.span + b.span) / (t - u) ** 4)
    assert len(ratios) == 1


def test_inverse_wronski_0123():
    res = inverse_wronski4(0, 1, 2, 3)
    assert res.real and res.verified
    target = UniPoly.from_roots([0, 1, 2, 3])
    a, b = res.subspaces
    assert a != b
    for s in res.subspaces:
        assert proportional(wronskian(s), target)


def test_inverse_wronski_repeated_roots():
    with pytest.raises(GeometryError):
        inverse_wronski4(-1, 0, 1, 1)
    with pytest.raises(GeometryError):
        inverse_wronski4(-1, 0, 1, 0)


def test_output_basis_rescaling():
    res = inverse_wronski4(F(-1, 2), 0, 1, 5)
    s = res.subspaces[0]
    w = wronskian(s)
    scaled = PolySubspace((s.basis[0] * 3, s.basis[1] * F(-2, 7) + s.basis[0]))
    assert wronskian(scaled) == w * F(-6, 7)
    assert proportional(wronskian(scaled), w)
