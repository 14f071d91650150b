"""Exact localization of finite-dimensional associative algebras over F_p at modules."""

from .algebra import AlgebraPresentation, IdealBasis, quotient_algebra, validate_algebra
from .completion import complete, hausdorff_commutative, hausdorff_localize
from .linalg import PrimeField, Subspace
from .localization import localize, product_compare, universal_map
from .modules import ModuleRep, chop, is_simple, simples, validate_module
from .oracle import maximal_ideals, oracle_compare

__all__ = [
    "AlgebraPresentation", "IdealBasis", "ModuleRep", "PrimeField", "Subspace",
    "chop", "complete", "hausdorff_commutative", "hausdorff_localize", "is_simple",
    "localize", "maximal_ideals", "oracle_compare", "product_compare",
    "quotient_algebra", "simples", "universal_map", "validate_algebra", "validate_module",
]
