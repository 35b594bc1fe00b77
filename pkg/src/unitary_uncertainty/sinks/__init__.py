from unitary_uncertainty.sinks.base import Sink, Tabular
from unitary_uncertainty.sinks.csv_sink import CsvSink, read_csv
from unitary_uncertainty.sinks.json_sink import JsonSink, read_json
from unitary_uncertainty.sinks.registry import create_sink

__all__ = ["CsvSink", "JsonSink", "Sink", "Tabular", "create_sink", "read_csv", "read_json"]
