"""Exact real Schubert calculus for lines in RP^3 and convexity witnesses for space curves."""

from .exact import GeometryError, QuadExt
from .projective import CurveSpec, Line, lines_skew, plucker, rnc_curve, rnc_tangent_line, trig_curve
from .schubert import Quadric, four_lines_solve, quadric_through_three, sharp

__all__ = [
    "CurveSpec",
    "GeometryError",
    "Line",
    "QuadExt",
    "Quadric",
    "four_lines_solve",
    "lines_skew",
    "plucker",
    "quadric_through_three",
    "rnc_curve",
    "rnc_tangent_line",
    "sharp",
    "trig_curve",
]
