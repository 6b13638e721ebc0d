"""Second cohomology, cocycle bases and coboundary tests for every variant."""

import logging
from dataclasses import dataclass

from ..algebra import FiniteGroup
from ..exceptions import ComplexError
from ..linalg import (
    AbelianGroup,
    IntMatrix,
    kernel_basis,
    quotient_invariants,
    solve_integer,
)
from .cochain import Cochain2, coefficients_label
from .complex import CochainComplex2, cochain_complex
from .variants import Variant

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CohomologyResult:
    """H² as free rank plus torsion, with one representative cocycle per summand."""

    group: FiniteGroup
    modulus: int | None
    variant: Variant
    free_rank: int
    torsion: tuple[int, ...]
    basis: tuple[Cochain2, ...]
    cocycle_generators: int

    @property
    def invariants(self) -> AbelianGroup:
        return AbelianGroup(self.free_rank, self.torsion)

    def describe(self) -> str:
        return (
            f"H²_{self.variant.label}({self.group.label}, "
            f"{coefficients_label(self.modulus)}) ≅ {self.invariants.describe()}"
        )


def _to_cochain(cx: CochainComplex2, vector, modulus: int | None) -> Cochain2:
    n = cx.group.order
    values = [0] * n**3
    for (x, y, z), v in zip(cx.triples, vector, strict=True):
        values[(x * n + y) * n + z] = v
    return Cochain2(cx.group, tuple(values), modulus)


def cochain_vector(cx: CochainComplex2, psi: Cochain2) -> list[int]:
    if psi.group is not cx.group:
        raise ComplexError("cochain and complex use different groups")
    on_coordinates = {cx.code(*t) for t in cx.triples}
    stray = [t for t, _ in psi.support() if cx.code(*t) not in on_coordinates]
    if stray:
        raise ComplexError(
            f"cochain is non-zero on {len(stray)} triples outside {cx.variant.label}"
        )
    return [psi(*t) for t in cx.triples]


def admissible_one_cochains(cx: CochainComplex2, modulus: int | None) -> list[list[int]]:
    """Basis of the 1-cochains whose coboundary lies in the variant's complex."""
    if cx.coboundary is None:
        return []
    n = cx.group.order
    if cx.constraint is None:
        return [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    return kernel_basis(cx.constraint, modulus)


def coboundary_generators(cx: CochainComplex2, modulus: int | None) -> list[list[int]]:
    """Generators of B² in coordinates of ``cx``."""
    if cx.coboundary is None:
        return []
    return [cx.coboundary.apply(f) for f in admissible_one_cochains(cx, modulus)]


def cocycle_rank(X: FiniteGroup, variant: Variant) -> int:
    """Rank of the integer 2-cocycle lattice Z²."""
    cx = cochain_complex(X, variant)
    return len(kernel_basis(cx.equations))


def cocycle_basis2(
    X: FiniteGroup, modulus: int | None, variant: Variant
) -> list[Cochain2]:
    """Basis (over Z) or generating set (over Z_m) of the 2-cocycles.

    Over Z_m the zero generators are dropped; the rest generate the cocycle group.
    """
    cx = cochain_complex(X, variant)
    basis = kernel_basis(cx.equations, modulus)
    cochains = [_to_cochain(cx, v, modulus) for v in basis]
    if modulus is not None:
        cochains = [c for c in cochains if not c.is_zero()]
    logger.info(
        f"Z² for {variant.label} over {X.label} with {coefficients_label(modulus)}: "
        f"{len(cochains)} generators"
    )
    return cochains


def second_cohomology(
    X: FiniteGroup, modulus: int | None, variant: Variant
) -> CohomologyResult:
    """Compute H² = Z² / B² of ``variant`` with Z (modulus None) or Z_m coefficients.

    Over Z_m the cocycle lattice is lifted to {v : Dv ≡ 0 (mod m)} and the
    quotient is taken by the coboundaries together with m·Zᴺ.

    Args:
        X: Group heap
        modulus: None for Z, m for Z_m
        variant: Complex variant

    Returns:
        CohomologyResult with free rank, torsion and representative cocycles
    """
    cx = cochain_complex(X, variant)
    kernel = kernel_basis(cx.equations, modulus)
    image = coboundary_generators(cx, modulus)
    if modulus is not None:
        N = cx.dimension
        image.extend([modulus if i == j else 0 for i in range(N)] for j in range(N))
    quotient = quotient_invariants(kernel, image)

    basis = tuple(_to_cochain(cx, g, modulus) for g in quotient.generators)
    result = CohomologyResult(
        group=X,
        modulus=modulus,
        variant=variant,
        free_rank=quotient.free_rank,
        torsion=quotient.torsion,
        basis=basis,
        cocycle_generators=len(kernel),
    )
    logger.info(result.describe())
    return result


def is_cocycle2(psi: Cochain2, variant: Variant | None = None) -> bool:
    """Exhaustive check of the cocycle condition on the variant's quintuples."""
    variant = variant or Variant.full()
    cx = cochain_complex(psi.group, variant)
    try:
        vector = cochain_vector(cx, psi)
    except ComplexError:
        return False
    residues = cx.equations.apply(vector)
    if psi.modulus is None:
        return not any(residues)
    return all(r % psi.modulus == 0 for r in residues)


def is_coboundary(
    psi: Cochain2, variant: Variant | None = None
) -> tuple[bool, list[int] | None]:
    """Decide whether ψ = δ¹f within the variant, returning a witness f if so.

    Raises:
        ComplexError: If ψ is non-zero outside the variant's coordinates
    """
    variant = variant or Variant.full()
    cx = cochain_complex(psi.group, variant)
    vector = cochain_vector(cx, psi)
    if not any(v % psi.modulus if psi.modulus else v for v in vector):
        return True, [0] * psi.group.order
    admissible = admissible_one_cochains(cx, psi.modulus)
    if not admissible:
        return False, None
    assert cx.coboundary is not None
    F = IntMatrix.from_columns(admissible, psi.group.order)
    system = cx.coboundary @ F
    coeffs = solve_integer(system, vector, psi.modulus)
    if coeffs is None:
        return False, None
    witness = F.apply(coeffs)
    if psi.modulus is not None:
        witness = [v % psi.modulus for v in witness]
    return True, witness
