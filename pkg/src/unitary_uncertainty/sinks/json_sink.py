from __future__ import annotations

import json
from typing import Any, Dict

from unitary_uncertainty.sinks.base import Sink, Tabular, ensure_parent_dir
from unitary_uncertainty.utils.logging import get_logger


class JsonSink(Sink):
    """Sink that writes {"metadata", "columns", "rows"} as one JSON document; undefined cells become null."""

    def __init__(self):
        self.log = get_logger("unitary_uncertainty.sink.json")

    def write(self, table: Tabular, path: str) -> None:
        ensure_parent_dir(path)
        cols = table.columns()
        rows = [{col: row.get(col) for col in cols} for row in table.records_as_dicts()]
        doc = {"metadata": table.metadata(), "columns": cols, "rows": rows}

        with open(path, "w", encoding="utf-8", newline="\n") as f:
            # float repr is the shortest string that round-trips exactly
            json.dump(doc, f, indent=2, allow_nan=False)
            f.write("\n")

        self.log.info("JSON write: path=%s rows=%d", path, len(rows))


def read_json(path: str) -> Dict[str, Any]:
    with open(path, encoding="utf-8") as f:
        return json.load(f)
