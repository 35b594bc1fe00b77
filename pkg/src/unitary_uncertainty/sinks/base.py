from __future__ import annotations

from pathlib import Path
from typing import Any, Dict, List, Protocol


class Tabular(Protocol):
    """Anything with named columns, row dicts and run metadata (SweepTable, ConvergenceStudy)."""

    def columns(self) -> List[str]: ...

    def records_as_dicts(self) -> List[Dict[str, Any]]: ...

    def metadata(self) -> Dict[str, Any]: ...


class Sink(Protocol):
    """Protocol for output sinks."""

    def write(self, table: Tabular, path: str) -> None: ...


def ensure_parent_dir(path: str) -> None:
    parent = Path(path).parent
    if str(parent) not in {"", "."}:
        parent.mkdir(parents=True, exist_ok=True)
