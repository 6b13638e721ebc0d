"""TSD cochain complexes, second cohomology and explicit cocycle families."""

from .cochain import (
    Cochain2,
    coboundary,
    coefficients_label,
    evaluate,
    parse_coefficients,
)
from .cocycles import (
    NamedCocycle,
    class_rank,
    cocycle_from_spec,
    degenerate_generator,
    linear_combination,
    phi,
    psi_dihedral,
    ring_cocycle,
)
from .complex import CochainComplex2, boundary_matrix, cochain_complex, verify_complex
from .solver import (
    CohomologyResult,
    cocycle_basis2,
    cocycle_rank,
    is_coboundary,
    is_cocycle2,
    second_cohomology,
)
from .variants import Variant, VariantKind, parse_variant

__all__ = [
    "Cochain2",
    "CochainComplex2",
    "CohomologyResult",
    "NamedCocycle",
    "Variant",
    "VariantKind",
    "boundary_matrix",
    "class_rank",
    "coboundary",
    "cochain_complex",
    "cocycle_basis2",
    "cocycle_from_spec",
    "cocycle_rank",
    "coefficients_label",
    "degenerate_generator",
    "evaluate",
    "is_coboundary",
    "is_cocycle2",
    "linear_combination",
    "parse_coefficients",
    "parse_variant",
    "phi",
    "psi_dihedral",
    "ring_cocycle",
    "second_cohomology",
    "verify_complex",
]
