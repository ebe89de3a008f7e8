from .core import FinCat, MonFunctor, CapExceeded
from .quadspace import QuadSpace, hyperbolic_plane
from .builders import (
    build_vect_cat, build_quad_cat, build_alt_cat, build_set_cats,
    build_grassmann_cat, build_range_cat, group_cat, skeletonize,
    StableSequence, quad_sequence, theta_sequence, vect_sequence,
)
from .axioms import check_axioms

__all__ = [
    "FinCat", "MonFunctor", "CapExceeded",
    "QuadSpace", "hyperbolic_plane",
    "build_vect_cat", "build_quad_cat", "build_alt_cat", "build_set_cats",
    "build_grassmann_cat", "build_range_cat", "group_cat", "skeletonize",
    "StableSequence", "quad_sequence", "theta_sequence", "vect_sequence",
    "check_axioms",
]
