"""Report models for groups, cohomology groups and cocycles."""

from pydantic import BaseModel, Field

from ..algebra import FiniteGroup
from ..cohomology import CohomologyResult, NamedCocycle, coefficients_label


class GroupReport(BaseModel):
    """A finite group as its multiplication table."""

    label: str = Field(description="Group label, e.g. Z3 or D3")
    order: int = Field(description="Number of elements")
    names: list[str] = Field(description="Element names by index")
    mul_table: list[list[int]] = Field(description="mul_table[x][y] = index of xy")
    abelian: bool = Field(description="Whether the group is abelian")
    heap_is_tsd: bool | None = Field(
        default=None, description="Exhaustive TSD check of the heap, when requested"
    )

    @classmethod
    def from_group(cls, G: FiniteGroup, heap_is_tsd: bool | None = None) -> "GroupReport":
        data = G.to_dict()
        return cls(
            label=G.label,
            order=data["order"],
            names=data["names"],
            mul_table=data["mul_table"],
            abelian=G.is_abelian(),
            heap_is_tsd=heap_is_tsd,
        )


class CohomologyReport(BaseModel):
    """Second cohomology of one variant."""

    group: str = Field(description="Group label")
    coefficients: str = Field(description="Z or Z<m>")
    variant: str = Field(description="Complex variant label")
    rank: int = Field(description="Free rank")
    torsion: list[int] = Field(description="Invariant factors of the torsion part")
    description: str = Field(description="Human readable isomorphism type")
    cocycle_generators: int = Field(description="Size of the cocycle lattice basis")
    basis: list[dict[str, int]] = Field(
        default_factory=list,
        description="Representative cocycles, torsion summands first",
    )

    @classmethod
    def from_result(cls, result: CohomologyResult, with_basis: bool = True) -> "CohomologyReport":
        return cls(
            group=result.group.label,
            coefficients=coefficients_label(result.modulus),
            variant=result.variant.label,
            rank=result.free_rank,
            torsion=list(result.torsion),
            description=result.describe(),
            cocycle_generators=result.cocycle_generators,
            basis=[c.to_dict() for c in result.basis] if with_basis else [],
        )


class CocycleReport(BaseModel):
    """An explicit cocycle and its verification."""

    label: str = Field(description="Family label")
    group: str = Field(description="Group label")
    coefficients: str = Field(description="Z or Z<m>")
    variant: str = Field(description="Variant the cocycle belongs to")
    verified: bool = Field(description="Exhaustive cocycle check result")
    values: dict[str, int] = Field(description="Sparse values over element names")

    @classmethod
    def from_cocycle(cls, cocycle: NamedCocycle) -> "CocycleReport":
        return cls(
            label=cocycle.label,
            group=cocycle.group.label,
            coefficients=coefficients_label(cocycle.cochain.modulus),
            variant=cocycle.variant.label,
            verified=cocycle.verify(),
            values=cocycle.cochain.to_dict(),
        )


class CocycleFamilyReport(BaseModel):
    """A cocycle family with the rank of its classes."""

    group: str = Field(description="Group label")
    cocycles: list[CocycleReport] = Field(description="Members of the family")
    class_rank: int | None = Field(
        default=None, description="Rank of the span of the classes in H²"
    )
