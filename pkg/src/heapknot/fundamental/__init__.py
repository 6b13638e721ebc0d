"""Fundamental heap presentations, Tietze moves and target group checks."""

from .presentation import (
    Presentation,
    alpha_form,
    apply_symbolic,
    cord_relators,
    dedupe_relators,
    heap_presentation,
    presentation,
    pretzel_presentation,
    pretzel_relators,
    symbolic_propagate,
    top_state,
    torus_relators,
)
from .targets import (
    FiniteTarget,
    HomomorphismCheck,
    PowerRelatorTarget,
    RelatorTrace,
    TargetGroupSpec,
    abelianization,
    check_homomorphism,
    count_homomorphisms,
    finite_target,
    parse_target,
    pretzel_coxeter_target,
    pretzel_vinberg_target,
    reduce_power_word,
    triangle_target,
    vinberg_torus_target,
)
from .tietze import tietze_simplify
from .words import FreeWord, canonical_relator, relator_equivalent

__all__ = [
    "FiniteTarget",
    "FreeWord",
    "HomomorphismCheck",
    "PowerRelatorTarget",
    "Presentation",
    "RelatorTrace",
    "TargetGroupSpec",
    "abelianization",
    "alpha_form",
    "apply_symbolic",
    "canonical_relator",
    "check_homomorphism",
    "cord_relators",
    "count_homomorphisms",
    "dedupe_relators",
    "finite_target",
    "heap_presentation",
    "parse_target",
    "presentation",
    "pretzel_coxeter_target",
    "pretzel_presentation",
    "pretzel_relators",
    "pretzel_vinberg_target",
    "reduce_power_word",
    "relator_equivalent",
    "symbolic_propagate",
    "tietze_simplify",
    "top_state",
    "torus_relators",
    "triangle_target",
    "vinberg_torus_target",
]
