"""Report models for links, colorings and state-sum invariants."""

from pydantic import BaseModel, Field

from ..knots import (
    Coloring,
    FramedLink,
    InvariantValue,
    classify,
    crossing_sites,
    wirtinger_images,
)


class SiteReport(BaseModel):
    kind: str = Field(description="letter or kink")
    sign: int = Field(description="Crossing sign")
    position: int = Field(description="Strand position (0-based)")
    source: int = Field(description="Letter index or kink ordinal")
    under_component: int = Field(description="Component of the under arc")


class LinkReport(BaseModel):
    """A framed braid closure and its crossing inventory."""

    strands: int = Field(description="Braid strand count")
    braid: list[int] = Field(description="Signed letters")
    framings: list[int] = Field(description="Framing per component")
    components: list[list[int]] = Field(description="Top positions per component")
    writhe: int = Field(description="Sum of letter signs")
    sites: list[SiteReport] = Field(description="Weight-carrying sites in order")

    @classmethod
    def from_link(cls, L: FramedLink) -> "LinkReport":
        return cls(
            strands=L.strands,
            braid=[s * i for i, s in L.letters],
            framings=list(L.framings),
            components=[list(c) for c in L.components],
            writhe=L.writhe(),
            sites=[
                SiteReport(
                    kind=site.kind.value,
                    sign=site.sign,
                    position=site.position,
                    source=site.source,
                    under_component=site.under_component,
                )
                for site in crossing_sites(L)
            ],
        )


class ColoringRecord(BaseModel):
    state: list[list[str]] = Field(description="Top labels per strand, as names")
    components: list[str] = Field(description="mono or bi per component")
    wirtinger: bool = Field(description="Wirtinger relation holds at every site")


class ColoringReport(BaseModel):
    """Coloring count with mono/bicolored tallies."""

    group: str = Field(description="Group label")
    link: LinkReport = Field(description="The colored link")
    count: int = Field(description="Col_X(L)")
    tallies: dict[str, int] = Field(
        description="Colorings per pattern, e.g. 'mono,bi'"
    )
    bicolored: list[int] = Field(description="Colorings bicolored on each component")
    colorings: list[ColoringRecord] = Field(
        default_factory=list, description="The colorings, when requested"
    )

    @classmethod
    def from_colorings(
        cls, L: FramedLink, group: str, colorings: list[Coloring], with_records: bool = False
    ) -> "ColoringReport":
        tallies: dict[str, int] = {}
        bicolored = [0] * L.component_count
        records = []
        for c in colorings:
            flags = classify(c)
            key = ",".join(f.value for f in flags)
            tallies[key] = tallies.get(key, 0) + 1
            for j, flag in enumerate(flags):
                bicolored[j] += flag.value == "bi"
            if with_records:
                names = c.group.names
                records.append(
                    ColoringRecord(
                        state=[[names[p], names[q]] for p, q in c.state],
                        components=[f.value for f in flags],
                        wirtinger=wirtinger_images(c).holds,
                    )
                )
        return cls(
            group=group,
            link=LinkReport.from_link(L),
            count=len(colorings),
            tallies=dict(sorted(tallies.items())),
            bicolored=bicolored,
            colorings=records,
        )


class InvariantTerm(BaseModel):
    key: list[list[int]] = Field(description="(B0, B1) exponent pair per component")
    mult: int = Field(description="Number of colorings with this key")


class InvariantReport(BaseModel):
    """The cocycle invariant as a sorted multiset."""

    group: str = Field(description="Group label")
    coefficients: str = Field(description="Z or Z<m>")
    cocycle: str = Field(description="Cocycle label")
    link: LinkReport = Field(description="The link")
    total: int = Field(description="Total multiplicity, equal to Col_X(L)")
    description: str = Field(description="Formal sum in g-notation")
    terms: list[InvariantTerm] = Field(description="Sorted terms")

    @classmethod
    def from_value(
        cls, L: FramedLink, group: str, cocycle: str, value: InvariantValue
    ) -> "InvariantReport":
        data = value.to_dict()
        return cls(
            group=group,
            coefficients=data["coefficients"],
            cocycle=cocycle,
            link=LinkReport.from_link(L),
            total=data["total"],
            description=value.describe(),
            terms=[InvariantTerm(**term) for term in data["terms"]],
        )
