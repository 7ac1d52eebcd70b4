"""Exact computational convex analysis for finite unions of generalized
polyhedra: generalized relative interiors, near convexity, normal cones,
proper separation and set-valued map graphs."""
from __future__ import annotations

from .budget import Budget, limits
from .errors import DimensionError, EmptySetError, GenriError, InputError, ResourceError
from .exactnum import rat, vec
from .genpoly import GenPolyhedron, UnionSet, box, canonical, closure, constraint, singleton
from .interiors import InteriorKind, interior_membership, normal_cone
from .nearconvex import NearlyConvexSet, classify, is_convex
from .separation import point_set_separation, properly_separate, qri_disjointness_equivalence
from .setmap import SetMap, domain_of, epi_of, graph_theorem_check, range_of, slice_at

__version__ = "0.1.0"

__all__ = [
    "Budget", "limits", "GenriError", "InputError", "DimensionError", "ResourceError", "EmptySetError",
    "rat", "vec", "GenPolyhedron", "UnionSet", "box", "canonical", "closure", "constraint", "singleton",
    "InteriorKind", "interior_membership", "normal_cone", "NearlyConvexSet", "classify", "is_convex",
    "point_set_separation", "properly_separate", "qri_disjointness_equivalence",
    "SetMap", "domain_of", "range_of", "slice_at", "epi_of", "graph_theorem_check",
]
