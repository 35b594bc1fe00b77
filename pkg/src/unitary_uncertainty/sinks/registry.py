from __future__ import annotations

from typing import Callable, Dict

from unitary_uncertainty.sinks.base import Sink
from unitary_uncertainty.sinks.csv_sink import CsvSink
from unitary_uncertainty.sinks.json_sink import JsonSink

_SINKS: Dict[str, Callable[[], Sink]] = {
    "csv": CsvSink,
    "json": JsonSink,
}


def create_sink(fmt: str) -> Sink:
    key = str(fmt or "").strip().lower()
    if key not in _SINKS:
        known = ", ".join(sorted(_SINKS))
        raise KeyError(f"Unknown output format '{key}'. Known formats: {known}")
    return _SINKS[key]()
