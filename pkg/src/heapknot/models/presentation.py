"""Report models for fundamental heap presentations."""

from pydantic import BaseModel, Field

from ..fundamental import HomomorphismCheck, Presentation
from ..linalg import AbelianGroup


class PresentationReport(BaseModel):
    """Generators and relators as [symbol, exponent] lists."""

    source: str = Field(description="The link the presentation belongs to")
    generators: list[str] = Field(description="Generator symbols")
    free_generators: list[str] = Field(description="Generators spanning the free factor")
    relators: list[list[list]] = Field(description="Relators as [symbol, exponent] runs")
    text: str = Field(description="Human readable presentation")
    abelianization: str | None = Field(default=None, description="Abelianization")
    homomorphism: "HomomorphismReport | None" = Field(
        default=None, description="Result of a --map-to check"
    )

    @classmethod
    def from_presentation(
        cls,
        source: str,
        p: Presentation,
        abelian: AbelianGroup | None = None,
        check: "HomomorphismReport | None" = None,
    ) -> "PresentationReport":
        data = p.to_dict()
        return cls(
            source=source,
            generators=data["generators"],
            free_generators=data["free_generators"],
            relators=data["relators"],
            text=p.text(),
            abelianization=abelian.describe() if abelian is not None else None,
            homomorphism=check,
        )


class RelatorImage(BaseModel):
    relator: str = Field(description="Relator text")
    image: str = Field(description="Reduced image in the target")
    trivial: bool = Field(description="Whether the image reduced to the identity")


class HomomorphismReport(BaseModel):
    target: str = Field(description="Target label")
    holds: bool = Field(description="Every relator maps to the identity")
    surjective: bool | None = Field(
        default=None, description="Images generate the target (finite targets)"
    )
    trace: list[RelatorImage] = Field(description="Per-relator images")

    @classmethod
    def from_check(cls, target: str, check: HomomorphismCheck) -> "HomomorphismReport":
        return cls(
            target=target,
            holds=check.holds,
            surjective=check.surjective,
            trace=[
                RelatorImage(relator=t.relator, image=t.image, trivial=t.trivial)
                for t in check.trace
            ],
        )


PresentationReport.model_rebuild()
