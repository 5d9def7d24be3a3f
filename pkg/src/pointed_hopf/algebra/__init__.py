"""Structure constants for u(D,0,0) and generic finite-dimensional Hopf algebras."""

from .pointed import PointedHopfAlgebra, build_algebra, verify_defining_relations
from .shuffle import CompletionError, NicholsAlgebra, root_vector_polys
from .tables import StructureTables, TabulatedHopf

__all__ = [
    "CompletionError",
    "NicholsAlgebra",
    "PointedHopfAlgebra",
    "StructureTables",
    "TabulatedHopf",
    "build_algebra",
    "root_vector_polys",
    "verify_defining_relations",
]
