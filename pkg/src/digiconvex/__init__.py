"""Digital convexity testing for lattice point sets.

``is_digital_convex_2d`` runs in linear time on planar sets;
``is_digital_convex_nd`` handles any fixed dimension by walking the dilated
lattice set with exact LP membership tests.
"""
from ._backend import BACKEND
from .convexity2d import is_digital_convex_2d
from .convexity_nd import (DilatedTraversal, cube_intersects_hull, enumerate_missing,
                           in_convex_hull, is_digital_convex_nd)
from .fileio import read_point_set, write_point_set
from .generators import (GenerationError, gen_ball, gen_punctured,
                         gen_random_polytope_points, gen_skewed_pair)
from .geometry import (Hull2D, InputError, InvariantError, PointSet, ResourceError,
                       diameter_linf, orientation, segment_lattice_count, validate_input)
from .pick import boundary_count, lattice_count, twice_area
from .quickhull import initialize_partial_hull, quickhull_traced, run_step
from .report import ConvexityReport

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ConvexityReport", "DilatedTraversal", "GenerationError", "Hull2D",
    "InputError", "InvariantError", "PointSet", "ResourceError", "boundary_count",
    "cube_intersects_hull", "diameter_linf", "enumerate_missing", "gen_ball",
    "gen_punctured", "gen_random_polytope_points", "gen_skewed_pair", "in_convex_hull",
    "initialize_partial_hull", "is_digital_convex_2d", "is_digital_convex_nd",
    "lattice_count", "orientation", "quickhull_traced", "read_point_set", "run_step",
    "segment_lattice_count", "twice_area", "validate_input", "write_point_set",
]
