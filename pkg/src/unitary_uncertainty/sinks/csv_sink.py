from __future__ import annotations

import csv
from typing import Any, Dict, List, Tuple

from unitary_uncertainty.sinks.base import Sink, Tabular, ensure_parent_dir
from unitary_uncertainty.utils.logging import get_logger


def format_cell(value: Any) -> str:
    """Empty for undefined cells, 17 significant digits for floats."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def parse_cell(cell: str) -> Any:
    if cell == "":
        return None
    for convert in (int, float):
        try:
            return convert(cell)
        except ValueError:
            continue
    return cell


class CsvSink(Sink):
    """Sink that writes a table to a comma-separated file with a header row."""

    def __init__(self):
        self.log = get_logger("unitary_uncertainty.sink.csv")

    def write(self, table: Tabular, path: str) -> None:
        ensure_parent_dir(path)
        cols = table.columns()
        rows = table.records_as_dicts()

        with open(path, "w", newline="", encoding="utf-8") as f:
            w = csv.writer(f, lineterminator="\n")
            w.writerow(cols)
            for row in rows:
                w.writerow([format_cell(row.get(col)) for col in cols])

        self.log.info("CSV write: path=%s rows=%d columns=%d", path, len(rows), len(cols))


def read_csv(path: str) -> Tuple[List[str], List[Dict[str, Any]]]:
    """Header and rows of a CSV written by CsvSink, cells parsed back to numbers."""
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.reader(f)
        header = next(reader)
        rows = [{col: parse_cell(cell) for col, cell in zip(header, line)} for line in reader]
    return header, rows
