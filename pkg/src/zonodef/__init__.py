"""Exact edge-length deformation cones of graphical zonotopes."""

from .decompose import Decomposition, decompose, locate_simplex, step_delta, verify_triangulation
from .defcone import analyze, build_defcone, defcone_f_vector, defcone_rays, two_face_count, validate_formulas
from .deformation import (
    build_polytope,
    is_deformation,
    minus_triangle,
    plus_triangle,
    polytope_dim,
    segment,
    summand_lengths,
    ZONOTOPE,
)
from .errors import EffortCapExceeded, NotADeformation, NotK4Free
from .experiments import minkowski_dimension, ray_dimension_census
from .graphs import Graph, load_graph

__version__ = "0.1.0"
