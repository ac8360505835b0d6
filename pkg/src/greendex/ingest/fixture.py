"""The project's normative fixture-CSV format.

UTF-8, comma-separated. First header cell is literally ``geo``; the
remaining header cells are dataset codes. One row per geo. An empty cell
is a missing value. Decimal point ``.``, no thousands separators. The
serializer writes canonical number spellings (no trailing ``.0``, shortest
float repr) and ``\\n`` line endings, so parse -> serialize round-trips
are byte-stable.
"""

from __future__ import annotations

import csv
import io
import math
import re
from typing import Sequence

from ..errors import FormatError
from ..model import Direction, IndicatorSpec, ObservationMatrix

# Plain decimal or scientific notation only; no underscores, no inf/nan.
_NUMBER_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


def parse_fixture_csv(data: bytes,
                      specs: Sequence[IndicatorSpec] | None = None,
                      year: int = 0) -> ObservationMatrix:
    """Parse fixture-CSV bytes into an observation matrix.

    Column order follows the header. When ``specs`` is given, header codes
    take their direction/label from the matching spec; unmatched codes
    default to stimulant. The format itself carries no year, so it must be
    supplied by the caller.
    """
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as err:
        raise FormatError(f"not valid UTF-8: {err}") from None

    rows = list(csv.reader(io.StringIO(text)))
    rows = [r for r in rows if r]  # tolerate blank lines
    if not rows:
        raise FormatError("empty file", line=1)

    header = rows[0]
    if not header or header[0] != "geo":
        raise FormatError("first header cell must be 'geo'", line=1, column=1)
    codes = header[1:]
    if not all(codes):
        raise FormatError("empty indicator code in header", line=1)
    seen: set[str] = set()
    for c in codes:
        if c in seen:
            raise FormatError(f"duplicate indicator code {c!r}", line=1)
        seen.add(c)

    by_code = {s.code: s for s in specs} if specs else {}
    indicators = [
        by_code.get(code) or IndicatorSpec(code=code, label=code,
                                           symbol_index=j + 1,
                                           direction=Direction.STIMULANT)
        for j, code in enumerate(codes)
    ]

    units: list[str] = []
    values: list[list[float | None]] = []
    seen_geos: set[str] = set()
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise FormatError(
                f"row has {len(row)} cells, header has {len(header)}", line=lineno)
        geo = row[0]
        if not geo:
            raise FormatError("empty geo code", line=lineno, column=1)
        if geo in seen_geos:
            raise FormatError(f"duplicate geo code {geo!r}", line=lineno, column=1)
        seen_geos.add(geo)
        cells: list[float | None] = []
        for col, cell in enumerate(row[1:], start=2):
            if cell == "":
                cells.append(None)
                continue
            if not _NUMBER_RE.match(cell):
                raise FormatError(f"non-numeric cell {cell!r}",
                                  line=lineno, column=col)
            v = float(cell)
            if not math.isfinite(v):
                raise FormatError(f"non-finite cell {cell!r}",
                                  line=lineno, column=col)
            cells.append(v)
        units.append(geo)
        values.append(cells)

    return ObservationMatrix(units=units, indicators=indicators,
                             values=values, year=year)


def format_number(v: float) -> str:
    """Canonical cell spelling: integral floats drop the '.0'."""
    if v == int(v) and abs(v) < 1e16:
        return str(int(v))
    return repr(v)


def serialize_fixture_csv(matrix: ObservationMatrix) -> bytes:
    """Write a matrix back to fixture-CSV bytes (canonical form)."""
    lines = ["geo," + ",".join(matrix.codes())]
    for i, unit in enumerate(matrix.units):
        cells = ["" if v is None else format_number(v) for v in matrix.values[i]]
        lines.append(",".join([unit] + cells))
    return ("\n".join(lines) + "\n").encode("utf-8")
