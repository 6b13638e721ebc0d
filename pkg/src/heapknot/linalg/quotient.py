"""Finitely generated abelian groups as lattice quotients."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from ..exceptions import ComplexError
from .matrix import IntMatrix
from .snf import SnfResult, smith_normal_form

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbelianGroup:
    """Z^free_rank ⊕ Z_t1 ⊕ ... ⊕ Z_tk with t1 | t2 | ... | tk, all ti > 1.

    ``generators`` hold one ambient vector per summand when the group was
    built as a quotient of a concrete lattice, torsion summands first.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()
    generators: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        result = 1
        for t in self.torsion:
            result *= t
        return result

    def describe(self) -> str:
        parts = [f"Z_{t}" for t in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " ⊕ ".join(parts) if parts else "0"


def abelian_invariants(relations: IntMatrix) -> AbelianGroup:
    """The group Z^rows / (column span of ``relations``)."""
    snf = smith_normal_form(relations)
    return AbelianGroup(
        free_rank=relations.rows - snf.rank,
        torsion=snf.torsion(),
    )


def _coordinates(snf: SnfResult, vector: Sequence[int]) -> list[int]:
    """Solve K·c = vector exactly using the SNF U·K·V = S of a full-column-rank K."""
    U, V = snf.left, snf.right
    assert U is not None and V is not None
    t = [sum(u * x for u, x in zip(row, vector, strict=True) if u) for row in U]
    y = []
    for i, d in enumerate(snf.factors):
        if t[i] % d:
            raise ComplexError("image generator is not in the kernel lattice")
        y.append(t[i] // d)
    if any(t[snf.rank :]):
        raise ComplexError("image generator is not in the kernel span")
    return [sum(v * yi for v, yi in zip(row, y, strict=True)) for row in V]


def quotient_invariants(
    kernel_basis: Sequence[Sequence[int]],
    image_generators: Sequence[Sequence[int]],
    modulus: int | None = None,
) -> AbelianGroup:
    """Compute span(kernel_basis) / span(image_generators) as an abelian group.

    Image generators are first expressed in kernel coordinates. With a modulus
    m, m times every kernel coordinate vector is adjoined to the relations, so
    the result is (K ⊗ Z_m) / image.

    Args:
        kernel_basis: Independent ambient vectors spanning the kernel lattice
        image_generators: Ambient vectors lying in that lattice
        modulus: Optional coefficient modulus

    Returns:
        AbelianGroup with one ambient representative per summand

    Raises:
        ComplexError: If an image generator is outside the kernel lattice
    """
    k = len(kernel_basis)
    if k == 0:
        if any(any(g) for g in image_generators):
            raise ComplexError("non-zero image inside a zero kernel")
        return AbelianGroup(0)
    ambient = len(kernel_basis[0])
    K = IntMatrix.from_columns(kernel_basis, ambient)
    snf_k = smith_normal_form(K, left=True, right=True)
    if snf_k.rank != k:
        raise ComplexError("kernel basis vectors are linearly dependent")

    relation_columns = [_coordinates(snf_k, g) for g in image_generators]
    if modulus is not None:
        relation_columns.extend(
            [modulus if i == j else 0 for i in range(k)] for j in range(k)
        )
    R = IntMatrix.from_columns(relation_columns, k) if relation_columns else IntMatrix(k, 0)
    snf_r = smith_normal_form(R, left_inverse=True)
    Ui = snf_r.left_inverse
    assert Ui is not None

    torsion = []
    generators = []
    for j in range(k):
        d = snf_r.factors[j] if j < snf_r.rank else 0
        if d == 1:
            continue
        if d > 1:
            torsion.append(d)
        coords = [row[j] for row in Ui]
        generators.append(
            tuple(
                sum(c * basis[a] for c, basis in zip(coords, kernel_basis, strict=True))
                for a in range(ambient)
            )
        )
    logger.debug(
        f"Quotient of rank-{k} lattice by {len(relation_columns)} relations: "
        f"free rank {k - snf_r.rank}, torsion {torsion}"
    )
    return AbelianGroup(k - snf_r.rank, tuple(torsion), tuple(generators))
