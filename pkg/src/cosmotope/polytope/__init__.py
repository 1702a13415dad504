from .decoration import (
    Decoration,
    affine_coordinates,
    decoration_of,
    decorations,
    h_vector_from_triangulation,
    verify_main_bijection,
)
from .ehrhart import ehrhart_brute, ehrhart_from_halfopen, ehrhart_from_hstar, triangulation_membership
from .halfopen import HalfOpenCell, HalfOpenDecomposition, half_open_decomposition
from .points import LatticePoint, default_insertion_order, lattice_points
from .triangulation import Triangulation, TriangulationError, placing_triangulation

__all__ = [
    "Decoration",
    "HalfOpenCell",
    "HalfOpenDecomposition",
    "LatticePoint",
    "Triangulation",
    "TriangulationError",
    "affine_coordinates",
    "decoration_of",
    "decorations",
    "default_insertion_order",
    "ehrhart_brute",
    "ehrhart_from_halfopen",
    "ehrhart_from_hstar",
    "h_vector_from_triangulation",
    "half_open_decomposition",
    "lattice_points",
    "placing_triangulation",
    "triangulation_membership",
    "verify_main_bijection",
]
