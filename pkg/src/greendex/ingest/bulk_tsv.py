"""Reader for the Eurostat bulk-download TSV layout.

Shape of the file:

* line 1: header. The first tab-separated field is a comma-separated
  dimension list ending in ``geo\\time``; the remaining fields are time
  labels (years, possibly padded with spaces).
* data lines mirror that: comma-separated dimension values ending with
  the geo code, then one cell per time label.
* a value cell is a numeric token optionally followed by space-separated
  flag letters; ``:`` denotes a missing value (flags may still follow).
"""

from __future__ import annotations

import math
import re

from ..errors import EmptySelectionError, FormatError
from .sources import RawObservation

_NUMBER_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


def _parse_cell(token: str, lineno: int, column: int) -> tuple[float | None, frozenset[str]]:
    parts = token.split()
    if not parts:
        return None, frozenset()
    head, tail = parts[0], parts[1:]
    flags: set[str] = set()
    for group in tail:
        for ch in group:
            if not (ch.isalpha() and ch.islower()):
                raise FormatError(f"bad flag {group!r} in cell {token!r}",
                                  line=lineno, column=column)
            flags.add(ch)
    if head == ":":
        return None, frozenset(flags)
    if not _NUMBER_RE.match(head) or not math.isfinite(float(head)):
        raise FormatError(f"non-numeric cell {token!r}", line=lineno, column=column)
    return float(head), frozenset(flags)


def parse_eurostat_tsv(data: bytes, dataset_code: str, year: int,
                       geo_filter: set[str] | None = None) -> list[RawObservation]:
    """Extract one observation per (geo, year) match from bulk TSV bytes.

    ``geo_filter``, when given, restricts output to those geo codes. A row
    whose value is ``:`` still yields an observation (with a missing
    value); only a complete absence of matches raises EmptySelection.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as err:
        raise FormatError(f"not valid UTF-8: {err}") from None

    lines = text.splitlines()
    if not lines:
        raise FormatError("empty file", line=1)

    header = lines[0].split("\t")
    dims = header[0].split(",")
    if not dims or dims[-1] != "geo\\time":
        raise FormatError(
            f"header must end in 'geo\\time', got {header[0]!r}", line=1, column=1)

    year_cols = []
    for idx, label in enumerate(header[1:], start=1):
        try:
            if int(label.strip()) == year:
                year_cols.append(idx)
        except ValueError:
            continue  # non-annual label; never matches a year

    observations: list[RawObservation] = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != len(header):
            raise FormatError(
                f"row has {len(fields)} fields, header has {len(header)}", line=lineno)
        dim_values = fields[0].split(",")
        if len(dim_values) != len(dims):
            raise FormatError(
                f"row key has {len(dim_values)} dimensions, header has {len(dims)}",
                line=lineno, column=1)
        geo = dim_values[-1].strip()
        if geo_filter is not None and geo not in geo_filter:
            continue
        for idx in year_cols:
            value, flags = _parse_cell(fields[idx], lineno, idx + 1)
            observations.append(RawObservation(
                dataset_code=dataset_code, geo=geo, year=year,
                value=value, flags=flags))

    if not observations:
        raise EmptySelectionError(
            f"no observation matches dataset {dataset_code!r}, year {year}"
            + (f", geos {sorted(geo_filter)}" if geo_filter is not None else ""))
    return observations
