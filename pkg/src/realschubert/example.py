"""The four tangent lines with no real common transversal, and its golden values.

l1 is the tangent of the rational normal curve at 0; l2 = l1 M12 and
l3 = l2 M23 for totally positive M12, M23; l4 is the limit of
``l3 exp(t N)`` as t -> +oo.  The quadric through l1, l2, l4 misses l3.
"""
from __future__ import annotations

from fractions import Fraction as F

from .exact import det, matmul, rat_str
from .jsonio import grid_to_json, poly_to_json
from .projective import Line
from .schubert import Quadric, four_lines_solve, quadric_through_three, symbolic_counterexample_discriminant
from .totalpos import TPChain, chain_to_tangent_lines, is_tp, line_limit_under_flow

L1 = [[F(1), F(0), F(0), F(0)], [F(0), F(1), F(0), F(0)]]
L2 = [[F(1), F(1), F(1, 2), F(1, 6)], [F(0), F(1), F(1), F(1, 2)]]
L3 = [[F(1), F(101, 100), F(401, 200), F(2503, 1500)], [F(0), F(1), F(5, 2), F(5, 2)]]
L4 = [[F(0), F(0), F(1), F(0)], [F(0), F(0), F(0), F(1)]]

M12 = [
    [F(1), F(1), F(1, 2), F(1, 6)],
    [F(0), F(1), F(1), F(1, 2)],
    [F(0), F(0), F(1), F(1)],
    [F(0), F(0), F(0), F(1)],
]
M23 = [
    [F(1), F(1, 100), F(1, 200), F(1, 500)],
    [F(0), F(1), F(3, 2), F(1)],
    [F(0), F(0), F(1), F(1)],
    [F(0), F(0), F(0), F(1)],
]
# (a, b, c, d, e, f) read off M23
M23_PARAMS = {"a": F(1, 100), "b": F(1, 200), "c": F(1, 500), "d": F(3, 2), "e": F(1), "f": F(1)}

# 2 x1 x3 - 3 x1 x4 - 3 x2 x3 + 6 x2 x4
PHI = Quadric.from_terms({(1, 3): 2, (1, 4): -3, (2, 3): -3, (2, 4): 6})

EXPECTED_DISCRIMINANT = F(-2231979, 250000)

# the 32-term discriminant, as (coefficient, monomial) with exponents of (a, b, c, d, e, f)
DSC_TERMS = {
    (0, 2, 0, 0, 0, 0): 9, (0, 1, 1, 0, 0, 0): -36, (0, 0, 2, 0, 0, 0): 36,
    (1, 0, 0, 1, 0, 0): -6, (0, 1, 0, 1, 0, 0): 12, (1, 1, 0, 1, 0, 0): -18,
    (0, 0, 1, 1, 0, 0): -12, (1, 0, 1, 1, 0, 0): 36, (0, 0, 0, 2, 0, 0): 4,
    (1, 0, 0, 2, 0, 0): -12, (2, 0, 0, 2, 0, 0): 9, (1, 0, 0, 0, 1, 0): 12,
    (0, 1, 0, 0, 1, 0): -30, (1, 1, 0, 0, 1, 0): 36, (0, 0, 1, 0, 1, 0): 36,
    (1, 0, 1, 0, 1, 0): -72, (0, 0, 0, 1, 1, 0): -12, (1, 0, 0, 1, 1, 0): 42,
    (2, 0, 0, 1, 1, 0): -36, (0, 0, 0, 0, 2, 0): 9, (1, 0, 0, 0, 2, 0): -36,
    (2, 0, 0, 0, 2, 0): 36, (1, 0, 0, 0, 0, 1): 12, (0, 1, 0, 0, 0, 1): -12,
    (1, 1, 0, 0, 0, 1): 36, (1, 0, 1, 0, 0, 1): -72, (0, 0, 0, 1, 0, 1): -6,
    (1, 0, 0, 1, 0, 1): 24, (2, 0, 0, 1, 0, 1): -36, (1, 0, 0, 0, 1, 1): -36,
    (2, 0, 0, 0, 1, 1): 72, (2, 0, 0, 0, 0, 2): 36,
}


def lines():
    return [Line(L1), Line(L2), Line(L3), Line(L4)]


def reproduce() -> tuple[dict, list[str]]:
    """Recompute every value of the main example; returns (report, mismatches)."""
    from .schubert import SYMBOLS
    from .poly import MultiPoly

    l1, l2, l3, l4 = lines()
    bad = []

    def expect(name, ok):
        if not ok:
            bad.append(name)

    chain = TPChain(base=[[F(int(i == j)) for j in range(4)] for i in range(4)], steps=[M12, M23])
    built = chain_to_tangent_lines(chain, closed=True)
    expect("chain lines", built == [l1, l2, l3, l4])
    tp12, tp23 = is_tp(M12), is_tp(M23)
    expect("M12 totally positive", tp12)
    expect("M23 totally positive", tp23)
    expect("l2 = l1 M12", Line(matmul(L1, M12)) == l2)
    expect("l3 = l2 M23", Line(matmul(L2, M23)) == l3)
    limit = line_limit_under_flow(l3)
    expect("l4 = lim l3 exp(tN)", limit == l4)

    ls = [l1, l2, l3, l4]
    skew = [[det(a.span + b.span) for b in ls] for a in ls]
    expect("pairwise skew", all(skew[i][j] != 0 for i in range(4) for j in range(4) if i != j))

    quadric = quadric_through_three(l1, l2, l4)
    expect("quadric", quadric == PHI)
    rep = four_lines_solve(l1, l2, l4, l3)
    expect("discriminant", rep.discriminant == EXPECTED_DISCRIMINANT)
    expect("real_count", rep.real_count == 0)

    dsc = symbolic_counterexample_discriminant()
    expect("symbolic discriminant", dsc == MultiPoly(SYMBOLS, {e + (0,): c for e, c in DSC_TERMS.items()}))
    expect("symbolic discriminant at M23", dsc.substitute(M23_PARAMS).constant_value() == EXPECTED_DISCRIMINANT)

    report = {
        "lines": {f"l{i + 1}": grid_to_json(ln.span) for i, ln in enumerate(ls)},
        "totally_positive": {"M12": tp12, "M23": tp23},
        "limit_l3": grid_to_json(limit.span),
        "limit_equals_l4": limit == l4,
        "skew_determinants": grid_to_json(skew),
        "quadric": str(quadric),
        "quadric_coefficients": [rat_str(c) for c in quadric.coeffs],
        "restricted": poly_to_json(rep.restricted),
        "discriminant": rat_str(rep.discriminant),
        "discriminant_float": float(rep.discriminant),
        "real_count": rep.real_count,
        "symbolic_discriminant_terms": len(dsc),
        "matches_expected": not bad,
    }
    if bad:
        report["mismatches"] = bad
    return report, bad
