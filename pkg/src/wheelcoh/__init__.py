"""Monomial wheel complexes on toric varieties and their filtration cohomology."""
from .monomial import Monomial, MonomialIdeal, Polynomial
from .toric import Fan, class_group, is_cartier
from .circuits import Circuit, minimal_circuits, transposition_order
from .syzygy import beta_generators, filtration_ideal, syzygy_generators
from .wheel import Wheel, build_complex, validate_wheel

__all__ = [
    "Monomial", "MonomialIdeal", "Polynomial", "Fan", "class_group", "is_cartier",
    "Circuit", "minimal_circuits", "transposition_order", "beta_generators",
    "filtration_ideal", "syzygy_generators", "Wheel", "build_complex", "validate_wheel",
]
