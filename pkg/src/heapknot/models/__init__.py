"""Pydantic report models for every command."""

from .cohomology import CocycleFamilyReport, CocycleReport, CohomologyReport, GroupReport
from .knots import (
    ColoringRecord,
    ColoringReport,
    InvariantReport,
    InvariantTerm,
    LinkReport,
    SiteReport,
)
from .presentation import HomomorphismReport, PresentationReport, RelatorImage
from .reproduce import CaseKind, CaseResult, ReproduceReport, TargetCase, TargetCatalogue

__all__ = [
    "CaseKind",
    "CaseResult",
    "CocycleFamilyReport",
    "CocycleReport",
    "CohomologyReport",
    "ColoringRecord",
    "ColoringReport",
    "GroupReport",
    "HomomorphismReport",
    "InvariantReport",
    "InvariantTerm",
    "LinkReport",
    "PresentationReport",
    "RelatorImage",
    "ReproduceReport",
    "SiteReport",
    "TargetCase",
    "TargetCatalogue",
]
