"""Named-diagram census files: CSV with header `name,code`."""

from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from pathlib import Path

from ..errors import DiagramError
from .diagram import LinkDiagram, parse_diagram

logger = logging.getLogger(__name__)

__all__ = ["CensusEntry", "load_census", "BUNDLED_CENSUS"]

BUNDLED_CENSUS = Path(__file__).resolve().parent.parent / "data" / "census.csv"


@dataclass(frozen=True, slots=True)
class CensusEntry:
    name: str
    code: str
    diagram: LinkDiagram


def load_census(path: str | Path | None = None) -> list[CensusEntry]:
    """Read a census; `None` means the bundled one. Rows keep file order."""
    path = Path(path) if path is not None else BUNDLED_CENSUS
    entries = []
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or {"name", "code"} - set(reader.fieldnames):
            raise DiagramError(f"{path}: census header must be 'name,code'")
        for row in reader:
            try:
                D = parse_diagram(row["code"])
            except DiagramError as exc:
                raise DiagramError(f"{path}: diagram {row['name']!r}: {exc}") from exc
            entries.append(CensusEntry(row["name"].strip(), row["code"].strip(), D))
    logger.debug("loaded %d census diagrams from %s", len(entries), path)
    return entries
