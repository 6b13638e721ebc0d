"""Reproduction catalogue and report models."""

from datetime import datetime
from enum import StrEnum
from typing import Any

from pydantic import BaseModel, Field


class CaseKind(StrEnum):
    COHOMOLOGY = "cohomology"
    SPLITTING = "splitting"
    COCYCLE_RANK = "cocycle_rank"
    INJECTION = "injection"
    COCYCLE_FAMILY = "cocycle_family"
    COLORINGS = "colorings"
    DIHEDRAL_TORUS = "dihedral_torus"
    INVARIANT = "invariant"
    DEGENERATE_FORMULA = "degenerate_formula"
    INVARIANCE = "invariance"
    PRESENTATION = "presentation"
    ABELIANIZATION = "abelianization"
    HOMOMORPHISM = "homomorphism"
    TIETZE = "tietze"
    BOUNDARY = "boundary"
    WIRTINGER = "wirtinger"


class TargetCase(BaseModel):
    """One acceptance target."""

    id: str = Field(description="Unique case identifier")
    kind: CaseKind = Field(description="Which computation runs")
    description: str = Field(default="", description="What the case checks")
    params: dict[str, Any] = Field(default_factory=dict, description="Inputs")
    expect: dict[str, Any] = Field(
        description="Expected observations; keys ending in _min/_max are bounds"
    )
    slow: bool = Field(default=False, description="Skipped unless --slow is given")


class TargetCatalogue(BaseModel):
    """The shipped list of acceptance targets."""

    version: int = Field(default=1, description="Catalogue format version")
    cases: list[TargetCase] = Field(description="All cases in run order")


class CaseResult(BaseModel):
    id: str = Field(description="Case identifier")
    kind: CaseKind = Field(description="Case kind")
    passed: bool = Field(description="All expectations met")
    expected: dict[str, Any] = Field(description="Expected observations")
    observed: dict[str, Any] = Field(default_factory=dict, description="Observations")
    seconds: float = Field(description="Wall time of the case")
    error: str | None = Field(default=None, description="Error message, if any")


class ReproduceReport(BaseModel):
    """Outcome of a reproduction run."""

    results: list[CaseResult] = Field(description="Per-case results")
    passed: int = Field(description="Number of passing cases")
    failed: int = Field(description="Number of failing cases")
    start_time: datetime = Field(description="Run start")
    end_time: datetime = Field(description="Run end")
