"""Convexity of b-symplectic moment images, checked exactly and numerically.

Exact layer (rational arithmetic): lattices and covectors, weighted adjacency
graphs, the extended codomain R_G and b-polytopes. Numeric layer: closed-form
model manifolds with torus actions and sample-based theorem checks.
"""
from .adjacency import (
    ModularWeightClass,
    WeightedAdjacencyGraph,
    WeightTag,
    classify,
    common_kernel,
    validate_nonzero_structure,
)
from .bpolytope import (
    BPolytope,
    GlobalHalfSpace,
    VertexLocal,
    contains,
    is_b_polytope,
    recession_cone,
    truncate,
    vertices,
)
from .codomain import Exceptional, ExtendedCodomain, Interior
from .config import Tolerances, default_tolerances
from .lattice import Covector, KernelLattice, LatticeVector, kernel_lattice, pairing, primitive_complement
from .polyhedron import Polyhedron

__all__ = [
    "BPolytope", "Covector", "Exceptional", "ExtendedCodomain", "GlobalHalfSpace", "Interior",
    "KernelLattice", "LatticeVector", "ModularWeightClass", "Polyhedron", "Tolerances",
    "VertexLocal", "WeightTag", "WeightedAdjacencyGraph", "classify", "common_kernel", "contains",
    "default_tolerances", "is_b_polytope", "kernel_lattice", "pairing", "primitive_complement",
    "recession_cone", "truncate", "validate_nonzero_structure", "vertices",
]
