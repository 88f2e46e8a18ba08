"""Geometric domination on square grids and discrete tori.

The package computes minimum sets of points whose spanned lines cover a
whole n x n board (optionally with no three chosen points collinear),
analytic lower bounds for those sizes, torus analogues with explicit
blow-up constructions, and an exact solver for the no-three-in-line
placement game.  A CLI (`gridlock`) and an HTTP service expose the same
operations.
"""

from .geometry import (
    ALL_TRANSFORMS,
    BoardSize,
    Direction,
    GridPoint,
    PointSet,
    SymmetryTransform,
    apply_symmetry,
    canonical_form,
    collinear,
    grid_line_points,
    orbit_images,
    primitive_direction,
)
from .domination import (
    MODE_GENERAL,
    MODE_INDEPENDENT,
    Solution,
    VerificationError,
    construct_central_columns,
    dominated_cells,
    dominated_mask,
    is_dominating,
    is_general_position,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_TRANSFORMS",
    "BoardSize",
    "Direction",
    "GridPoint",
    "PointSet",
    "SymmetryTransform",
    "apply_symmetry",
    "canonical_form",
    "collinear",
    "grid_line_points",
    "orbit_images",
    "primitive_direction",
    "MODE_GENERAL",
    "MODE_INDEPENDENT",
    "Solution",
    "VerificationError",
    "construct_central_columns",
    "dominated_cells",
    "dominated_mask",
    "is_dominating",
    "is_general_position",
    "__version__",
]
