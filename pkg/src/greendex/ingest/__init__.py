"""Data acquisition: fixture CSV, Eurostat bulk TSV, statistics API."""

from .assemble import assemble_matrix
from .bulk_tsv import parse_eurostat_tsv
from .client import FailingTransport, RecordingTransport, Transport, fetch_dataset
from .fixture import parse_fixture_csv, serialize_fixture_csv
from .sources import (
    DataSource,
    EurostatApi,
    EurostatTsv,
    FixtureCsv,
    RawObservation,
)

__all__ = [
    "DataSource",
    "EurostatApi",
    "EurostatTsv",
    "FailingTransport",
    "FixtureCsv",
    "RawObservation",
    "RecordingTransport",
    "Transport",
    "assemble_matrix",
    "fetch_dataset",
    "parse_eurostat_tsv",
    "parse_fixture_csv",
    "serialize_fixture_csv",
]
