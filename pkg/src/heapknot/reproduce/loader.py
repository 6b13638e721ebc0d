"""Loader for the shipped catalogue of acceptance targets."""

import logging
from importlib import resources
from pathlib import Path

import yaml
from pydantic import ValidationError

from ..exceptions import HeapknotError
from ..models.reproduce import CaseKind, TargetCase, TargetCatalogue

logger = logging.getLogger(__name__)

CATALOGUE = "targets.yaml"


class TargetLoader:
    """Loads and filters reproduction targets."""

    def __init__(self, path: str | Path | None = None):
        """Initialize the loader.

        Args:
            path: Catalogue file (uses the packaged catalogue if None)
        """
        self.path = Path(path) if path is not None else None
        self._cache: TargetCatalogue | None = None

    def _read(self) -> str:
        if self.path is not None:
            return self.path.read_text(encoding="utf-8")
        return resources.files(__package__).joinpath(CATALOGUE).read_text(encoding="utf-8")

    def load_catalogue(self, use_cache: bool = True) -> TargetCatalogue:
        """Parse and validate the catalogue.

        Raises:
            HeapknotError: If the YAML is malformed, fails validation or repeats an id
        """
        if use_cache and self._cache is not None:
            logger.debug("Using cached target catalogue")
            return self._cache

        source = self.path or CATALOGUE
        logger.info(f"Loading reproduction targets from {source}")
        try:
            data = yaml.safe_load(self._read())
            catalogue = TargetCatalogue.model_validate(data)
        except (yaml.YAMLError, ValidationError) as e:
            raise HeapknotError(f"invalid target catalogue {source}: {e}") from e

        ids = [case.id for case in catalogue.cases]
        duplicates = sorted({i for i in ids if ids.count(i) > 1})
        if duplicates:
            raise HeapknotError(f"duplicate target ids: {', '.join(duplicates)}")

        if use_cache:
            self._cache = catalogue
        return catalogue

    def load_cases(
        self,
        kind: CaseKind | str | None = None,
        include_slow: bool = False,
        ids: list[str] | None = None,
    ) -> list[TargetCase]:
        """Cases in catalogue order, optionally filtered.

        Args:
            kind: Keep only cases of this kind
            include_slow: Keep cases marked slow
            ids: Keep only these case ids

        Returns:
            List of TargetCase objects
        """
        cases = self.load_catalogue().cases
        if kind is not None:
            kind = CaseKind(kind)
            cases = [c for c in cases if c.kind == kind]
        if ids:
            wanted = set(ids)
            cases = [c for c in cases if c.id in wanted]
        elif not include_slow:
            cases = [c for c in cases if not c.slow]
        logger.debug(f"Selected {len(cases)} reproduction targets")
        return cases

    def get_kind_counts(self) -> dict[str, int]:
        """Number of cases per kind."""
        counts: dict[str, int] = {}
        for case in self.load_catalogue().cases:
            counts[case.kind.value] = counts.get(case.kind.value, 0) + 1
        return counts
