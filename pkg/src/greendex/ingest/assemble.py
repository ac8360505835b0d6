"""Build an observation matrix from any data source."""

from __future__ import annotations

from typing import Sequence

from ..errors import EmptySelectionError, MissingDatasetError
from ..model import IndicatorSpec, ObservationMatrix
from .bulk_tsv import parse_eurostat_tsv
from .client import Transport, fetch_dataset
from .fixture import parse_fixture_csv
from .sources import DataSource, EurostatApi, EurostatTsv, FixtureCsv, RawObservation


def _column_from_observations(observations: Sequence[RawObservation],
                              code: str) -> dict[str, float | None]:
    if not observations:
        raise MissingDatasetError(f"dataset {code!r} yielded no observations", code=code)
    return {obs.geo: obs.value for obs in observations}


def assemble_matrix(specs: Sequence[IndicatorSpec], year: int,
                    geos: Sequence[str], source: DataSource,
                    transport: Transport | None = None) -> ObservationMatrix:
    """Assemble an n x m matrix: rows follow ``geos``, columns follow ``specs``.

    A geo present in the list but absent upstream becomes a row of missing
    cells, never an error; a dataset code with no observations at all is a
    MissingDataset error. Output dimensions are always (len(geos),
    len(specs)) regardless of upstream gaps.
    """
    if not specs:
        raise ValueError("specs must be non-empty")
    if not geos:
        raise ValueError("geos must be non-empty")

    columns: list[dict[str, float | None]] = []

    if isinstance(source, FixtureCsv):
        matrix = parse_fixture_csv(source.path.read_bytes(), specs=specs, year=year)
        available = {spec.code: j for j, spec in enumerate(matrix.indicators)}
        geo_rows = {u: matrix.values[i] for i, u in enumerate(matrix.units)}
        for spec in specs:
            j = available.get(spec.code)
            if j is None:
                raise MissingDatasetError(
                    f"fixture has no column for dataset {spec.code!r}", code=spec.code)
            columns.append({geo: row[j] for geo, row in geo_rows.items()})
    elif isinstance(source, EurostatTsv):
        for spec in specs:
            path = source.paths.get(spec.code)
            if path is None:
                raise MissingDatasetError(
                    f"no TSV path configured for dataset {spec.code!r}", code=spec.code)
            try:
                observations = parse_eurostat_tsv(
                    path.read_bytes(), spec.code, year, geo_filter=set(geos))
            except EmptySelectionError as err:
                raise MissingDatasetError(str(err), code=spec.code) from err
            columns.append(_column_from_observations(observations, spec.code))
    elif isinstance(source, EurostatApi):
        for spec in specs:
            observations = fetch_dataset(source, spec.code, year, set(geos),
                                         transport=transport)
            columns.append(_column_from_observations(observations, spec.code))
    else:
        raise TypeError(f"unknown data source {type(source).__name__}")

    values = [[col.get(geo) for col in columns] for geo in geos]
    return ObservationMatrix(units=geos, indicators=specs, values=values, year=year)
