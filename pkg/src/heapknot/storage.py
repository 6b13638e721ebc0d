"""JSON persistence of report models."""

import json
import logging
from pathlib import Path

from pydantic import BaseModel

from .config.settings import get_settings

logger = logging.getLogger(__name__)


class ReportStorage:
    """Serializes reports with the configured indent and key order."""

    def __init__(self, indent: int | None = None, sort_keys: bool | None = None):
        output = get_settings().output
        self.indent = output.json_indent if indent is None else indent
        self.sort_keys = output.sort_keys if sort_keys is None else sort_keys

    def dumps(self, report: BaseModel) -> str:
        """Byte-stable JSON text of a report."""
        return json.dumps(
            report.model_dump(mode="json"),
            indent=self.indent,
            sort_keys=self.sort_keys,
            ensure_ascii=False,
        )

    def save_report(self, report: BaseModel, path: str | Path) -> Path:
        """Write a report to ``path``, creating parent directories.

        Args:
            report: Any pydantic report model
            path: Output file

        Returns:
            The written path
        """
        target = Path(path)
        target.parent.mkdir(parents=True, exist_ok=True)
        with open(target, "w", encoding="utf-8") as f:
            f.write(self.dumps(report))
            f.write("\n")
        logger.info(f"Saved {type(report).__name__} to {target}")
        return target
