"""Total positivity for unit upper-triangular matrices.

A minor of an upper-triangular matrix with sorted rows ``I`` and columns
``J`` can only be nonzero when ``I[r] <= J[r]`` for every r; the matrix is
totally positive when all such minors are strictly positive.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exact import GeometryError, det, identity, matmul, matrix
from .poly import UniPoly
from .projective import Line, line_from_plucker, minors2

MAX_ENUM = 6


def is_uni_upper(m) -> bool:
    n = len(m)
    return all(len(r) == n for r in m) and all(
        m[i][j] == (1 if i == j else 0) for i in range(n) for j in range(i + 1)
    )


def _check(m):
    if not is_uni_upper(m):
        raise ValueError("expected a unit upper-triangular matrix")
    if len(m) > MAX_ENUM:
        raise ValueError(f"minor enumeration is limited to size <= {MAX_ENUM}")


def structurally_nontrivial(rows, cols) -> bool:
    return all(i <= j for i, j in zip(rows, cols))


def minors(m):
    """Yield ``(rows, cols, value, nontrivial)`` for every square minor."""
    n = len(m)
    for k in range(1, n + 1):
        for rows in combinations(range(n), k):
            for cols in combinations(range(n), k):
                value = det([[m[i][j] for j in cols] for i in rows])
                yield rows, cols, value, structurally_nontrivial(rows, cols)


def first_tp_violation(m):
    """The first nontrivial minor that is not positive, or None."""
    _check(m)
    for rows, cols, value, nontrivial in minors(m):
        if nontrivial and value <= 0:
            return rows, cols, value
    return None


def is_tp(m) -> bool:
    return first_tp_violation(m) is None


def is_tnn(m) -> bool:
    _check(m)
    return all(value >= 0 for _, _, value, _ in minors(m))


def elementary(i: int, tau, m: int) -> list[list[Fraction]]:
    """Identity plus ``tau`` at (i, i+1); rows are numbered from 1."""
    if not 1 <= i <= m - 1:
        raise ValueError(f"elementary index {i} out of range for size {m}")
    e = identity(m)
    e[i - 1][i] = Fraction(tau)
    return e


def longest_word(m: int) -> tuple[int, ...]:
    """The reduced word (1, 2, 1, 3, 2, 1, ...) of the longest permutation."""
    return tuple(i for top in range(1, m) for i in range(top, 0, -1))


def word_permutation(word, m: int) -> tuple[int, ...]:
    perm = list(range(m))
    for i in word:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def is_reduced_longest(word, m: int) -> bool:
    return len(word) == m * (m - 1) // 2 and word_permutation(word, m) == tuple(range(m - 1, -1, -1))


def random_reduced_word(m: int, rng) -> tuple[int, ...]:
    """A uniformly-chosen-step reduced word: sort the reversal by random descents."""
    perm = list(range(m - 1, -1, -1))
    word = []
    while True:
        descents = [i for i in range(m - 1) if perm[i] > perm[i + 1]]
        if not descents:
            break
        i = rng.choice(descents)
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        word.append(i + 1)
    # sorting w0 to the identity reads off a word for w0^{-1} = w0 in reverse
    return tuple(reversed(word))


def product_along_word(word, params, m: int):
    if len(word) != len(params):
        raise ValueError("one parameter per letter")
    if not is_reduced_longest(word, m):
        raise ValueError(f"{word} is not a reduced word for the longest permutation of {m}")
    out = identity(m)
    for i, tau in zip(word, params):
        tau = Fraction(tau)
        if tau <= 0:
            raise GeometryError(f"parameter {tau} is not positive")
        out = matmul(out, elementary(i, tau, m))
    return out


def random_tp(m: int, rng, denom: int = 10, top: int = 30):
    word = random_reduced_word(m, rng)
    params = [Fraction(rng.randint(1, top), rng.randint(1, denom)) for _ in word]
    return product_along_word(word, params, m)


@dataclass
class TPChain:
    base: list
    steps: list = field(default_factory=list)

    def __post_init__(self):
        self.base = matrix(self.base)
        self.steps = [matrix(s) for s in self.steps]


def chain_verify(chain: TPChain) -> bool:
    return chain_violation(chain) is None


def chain_violation(chain: TPChain):
    """``(step index, rows, cols, value)`` of the first non-TP step, or None."""
    for k, step in enumerate(chain.steps):
        bad = first_tp_violation(step)
        if bad is not None:
            return (k,) + bad
    return None


def chain_flags(chain: TPChain):
    flags = [chain.base]
    for step in chain.steps:
        flags.append(matmul(flags[-1], step))
    return flags


def chain_to_tangent_lines(chain: TPChain, closed: bool = False) -> list[Line]:
    """First-two-row lines of the accumulated flags; optionally append the limit line."""
    lines = [Line(f[:2]) for f in chain_flags(chain)]
    if closed:
        lines.append(line_limit_under_flow(lines[-1]))
    return lines


def line_limit_under_flow(line: Line) -> Line:
    """The limit of ``line * exp(t N)`` as t -> +oo in the Grassmannian."""
    t = UniPoly.x()
    flow = [
        [UniPoly([1]), t, t * t * Fraction(1, 2), t * t * t * Fraction(1, 6)],
        [UniPoly(), UniPoly([1]), t, t * t * Fraction(1, 2)],
        [UniPoly(), UniPoly(), UniPoly([1]), t],
        [UniPoly(), UniPoly(), UniPoly(), UniPoly([1])],
    ]
    moved = [
        [sum((flow[k][j] * row[k] for k in range(4)), UniPoly()) for j in range(4)]
        for row in line.span
    ]
    pl = minors2(moved)
    top = max(p.degree for p in pl)
    lead = [p[top] for p in pl]
    try:
        return line_from_plucker(lead)
    except GeometryError as exc:
        raise AssertionError(f"limit Pluecker vector {lead} is not a line") from exc
