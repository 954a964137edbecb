"""Exact and numeric toolkit for the cubic surface x^3 + y^3 + z^3 - 3xyz = 1."""

from .geometry import f_eval, meridian, param, slice_circle, to_rotated
from .polynomials import CANON, HCUBIC, ROTATED_SCALED, CubicForm4, ProjectiveLine, ProjectivePoint4
from .rational import enumerate_points, family_membership, rational_point
from .scalars import EPS, Eisenstein, Gaussian, I

__version__ = "0.1.0"

__all__ = [
    "CANON", "HCUBIC", "ROTATED_SCALED", "CubicForm4", "ProjectiveLine", "ProjectivePoint4",
    "EPS", "I", "Eisenstein", "Gaussian",
    "enumerate_points", "family_membership", "rational_point",
    "f_eval", "meridian", "param", "slice_circle", "to_rotated",
]
