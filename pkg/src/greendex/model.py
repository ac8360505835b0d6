"""Domain types, matrix validation and missing-data policies.

The core carrier is :class:`ObservationMatrix`: an n-units x m-indicators
grid of raw values with an explicit missing mask (``None`` cells). The
constructor only freezes the data; *whether* a matrix is fit for analysis
is the job of :func:`validate`, which reports every defect instead of
raising, so a single pass can surface duplicate identifiers, ragged rows,
missing cells and constant columns together.

All types here are immutable value objects; every operation is a pure
function, so instances can be shared freely across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import DegenerateMatrixError, MissingDataError

Cell = float | None


class Direction(enum.Enum):
    """Orientation of an indicator relative to the measured phenomenon.

    Stimulant: higher raw values are better. Destimulant: higher raw
    values are worse; rescaling flips them so that 1 is always best.
    """

    STIMULANT = "stimulant"
    DESTIMULANT = "destimulant"


class MissingPolicy(enum.Enum):
    """What to do with missing cells before analysis.

    FAIL is the default: silently imputing or dropping data changes
    rankings invisibly, so the caller must opt in to a repair strategy.
    """

    FAIL = "fail"
    DROP_UNIT = "drop_unit"
    DROP_INDICATOR = "drop_indicator"
    IMPUTE_COLUMN_MEAN = "impute_column_mean"


class Group(enum.Enum):
    """Development group, from highest (I) to lowest (IV)."""

    I = "I"
    II = "II"
    III = "III"
    IV = "IV"


@dataclass(frozen=True)
class IndicatorSpec:
    """One diagnostic variable.

    ``code`` is the dataset identifier (Eurostat online-table code such as
    ``tin00111``); ``symbol_index`` is the 1-based position of the variable
    in the indicator set it belongs to.
    """

    code: str
    label: str
    symbol_index: int
    direction: Direction = Direction.STIMULANT

    def __post_init__(self) -> None:
        if not self.code:
            raise ValueError("indicator code must be non-empty")
        if self.symbol_index < 1:
            raise ValueError(f"symbol_index must be >= 1, got {self.symbol_index}")


@dataclass(frozen=True)
class ObservationMatrix:
    """Raw observations: one row per unit, one column per indicator.

    ``values[i][j]`` is the value of indicator ``j`` for unit ``i``;
    ``None`` marks a missing cell. The constructor freezes rows into
    tuples but performs no consistency checks -- run :func:`validate`
    to obtain a defect report, and rely on the analysis operations to
    refuse unfit input.
    """

    units: tuple[str, ...]
    indicators: tuple[IndicatorSpec, ...]
    values: tuple[tuple[Cell, ...], ...]
    year: int

    def __init__(self, units, indicators, values, year):
        object.__setattr__(self, "units", tuple(units))
        object.__setattr__(self, "indicators", tuple(indicators))
        object.__setattr__(self, "values", tuple(tuple(row) for row in values))
        object.__setattr__(self, "year", int(year))

    @property
    def n_units(self) -> int:
        return len(self.units)

    @property
    def n_indicators(self) -> int:
        return len(self.indicators)

    def codes(self) -> tuple[str, ...]:
        return tuple(spec.code for spec in self.indicators)

    def column(self, j: int) -> tuple[Cell, ...]:
        return tuple(row[j] for row in self.values)

    def row(self, i: int) -> tuple[Cell, ...]:
        return self.values[i]

    def missing_cells(self) -> tuple[tuple[str, str], ...]:
        """(unit, indicator code) coordinates of every missing cell, row-major."""
        out = []
        for i, row in enumerate(self.values):
            for j, v in enumerate(row):
                if v is None and j < len(self.indicators):
                    out.append((self.units[i], self.indicators[j].code))
        return tuple(out)


@dataclass(frozen=True)
class NormalizedMatrix:
    """Range-rescaled observations, every value in [0, 1].

    Unlike :class:`ObservationMatrix` this is a *result* type: the
    constructor enforces the invariants (all values in [0, 1]; each column
    attains an exact 0 and an exact 1 at the column extremes), because any
    violation is a programming error rather than bad input data.
    """

    units: tuple[str, ...]
    indicators: tuple[IndicatorSpec, ...]
    values: tuple[tuple[float, ...], ...]

    def __init__(self, units, indicators, values):
        object.__setattr__(self, "units", tuple(units))
        object.__setattr__(self, "indicators", tuple(indicators))
        object.__setattr__(self, "values", tuple(tuple(row) for row in values))
        if len(self.values) != len(self.units):
            raise ValueError("row count does not match unit count")
        for row in self.values:
            if len(row) != len(self.indicators):
                raise ValueError("column count does not match indicator count")
            for v in row:
                if not 0.0 <= v <= 1.0:
                    raise ValueError(f"normalized value {v!r} outside [0, 1]")
        for j, spec in enumerate(self.indicators):
            col = [row[j] for row in self.values]
            if col and (0.0 not in col or 1.0 not in col):
                raise ValueError(f"column {spec.code} does not attain both 0 and 1")

    @property
    def n_units(self) -> int:
        return len(self.units)

    @property
    def n_indicators(self) -> int:
        return len(self.indicators)

    def row(self, i: int) -> tuple[float, ...]:
        return self.values[i]


@dataclass(frozen=True)
class UnitScore:
    """Per-unit statistics of the normalized row and the aggregate measure.

    ``w = median * (1 - std_dev)``; since the population standard deviation
    of values in [0, 1] is at most 0.5, w always lands in [0, 1].
    """

    unit: str
    median: float
    std_dev: float
    w: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.median <= 1.0:
            raise ValueError(f"median {self.median!r} outside [0, 1]")
        if self.std_dev < 0.0:
            raise ValueError(f"std_dev {self.std_dev!r} negative")
        expected = self.median * (1.0 - self.std_dev)
        if abs(self.w - expected) > 1e-9:
            raise ValueError(
                f"inconsistent score for {self.unit}: w={self.w!r} but "
                f"median*(1-std_dev)={expected!r}"
            )


@dataclass(frozen=True)
class Classification:
    """Thresholds and the unit -> group assignment they induce.

    ``mean_w`` and ``sd_w`` are the cross-unit mean and population standard
    deviation of the aggregate measure; the four groups are cut at
    mean+sd / mean / mean-sd.
    """

    mean_w: float
    sd_w: float
    assignments: dict[str, Group]

    def __post_init__(self) -> None:
        if self.sd_w < 0.0:
            raise ValueError("sd_w must be >= 0")
        object.__setattr__(self, "assignments", dict(self.assignments))

    @property
    def upper(self) -> float:
        return self.mean_w + self.sd_w

    @property
    def lower(self) -> float:
        return self.mean_w - self.sd_w

    def members(self, group: Group) -> tuple[str, ...]:
        return tuple(u for u, g in self.assignments.items() if g is group)


# -- validation ---------------------------------------------------------------

class FindingKind(enum.Enum):
    DUPLICATE_UNIT = "duplicate_unit"
    DUPLICATE_INDICATOR = "duplicate_indicator"
    SHAPE_MISMATCH = "shape_mismatch"
    MISSING_CELL = "missing_cell"
    CONSTANT_COLUMN = "constant_column"
    TOO_FEW_UNITS = "too_few_units"
    NO_INDICATORS = "no_indicators"


@dataclass(frozen=True)
class Finding:
    kind: FindingKind
    message: str
    unit: str | None = None
    code: str | None = None


@dataclass(frozen=True)
class ValidationReport:
    findings: tuple[Finding, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.findings

    def of_kind(self, kind: FindingKind) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.kind is kind)

    def missing_coordinates(self) -> tuple[tuple[str, str], ...]:
        return tuple(
            (f.unit, f.code) for f in self.of_kind(FindingKind.MISSING_CELL)
        )


def validate(matrix: ObservationMatrix) -> ValidationReport:
    """Report every defect that would block analysis under the FAIL policy.

    Pure and total: never raises, never mutates. An empty report means the
    matrix is analysis-ready as-is (no repair policy or constant-column
    handling needed).
    """
    findings: list[Finding] = []

    seen_units: set[str] = set()
    for u in matrix.units:
        if u in seen_units:
            findings.append(Finding(FindingKind.DUPLICATE_UNIT,
                                    f"duplicate unit identifier {u!r}", unit=u))
        seen_units.add(u)

    seen_codes: set[str] = set()
    for spec in matrix.indicators:
        if spec.code in seen_codes:
            findings.append(Finding(FindingKind.DUPLICATE_INDICATOR,
                                    f"duplicate indicator code {spec.code!r}", code=spec.code))
        seen_codes.add(spec.code)

    m = matrix.n_indicators
    shape_ok = len(matrix.values) == matrix.n_units
    if not shape_ok:
        findings.append(Finding(FindingKind.SHAPE_MISMATCH,
                                f"{len(matrix.values)} rows for {matrix.n_units} units"))
    for i, row in enumerate(matrix.values):
        if len(row) != m:
            shape_ok = False
            unit = matrix.units[i] if i < matrix.n_units else None
            findings.append(Finding(FindingKind.SHAPE_MISMATCH,
                                    f"row {i} has {len(row)} cells, expected {m}", unit=unit))

    if matrix.n_units < 2:
        findings.append(Finding(FindingKind.TOO_FEW_UNITS,
                                f"{matrix.n_units} unit(s); at least 2 required"))
    if m < 1:
        findings.append(Finding(FindingKind.NO_INDICATORS, "no indicators"))

    if shape_ok:
        for i, row in enumerate(matrix.values):
            for j, v in enumerate(row):
                if v is None:
                    findings.append(Finding(
                        FindingKind.MISSING_CELL,
                        f"missing value for unit {matrix.units[i]!r}, "
                        f"indicator {matrix.indicators[j].code!r}",
                        unit=matrix.units[i], code=matrix.indicators[j].code))
        for j, spec in enumerate(matrix.indicators):
            present = [v for v in matrix.column(j) if v is not None]
            if len(present) >= 2 and max(present) == min(present):
                findings.append(Finding(FindingKind.CONSTANT_COLUMN,
                                        f"constant column {spec.code!r} "
                                        f"(all values {present[0]!r})", code=spec.code))

    return ValidationReport(tuple(findings))


def apply_missing_policy(matrix: ObservationMatrix,
                         policy: MissingPolicy) -> ObservationMatrix:
    """Return a complete matrix according to the chosen repair policy.

    A complete input is returned unchanged whatever the policy. Unit and
    indicator order are preserved. DROP_* policies refuse to shrink the
    matrix below 2 units / 1 indicator; FAIL refuses any missing cell and
    lists the offending coordinates.
    """
    missing = matrix.missing_cells()
    if not missing:
        return matrix

    if policy is MissingPolicy.FAIL:
        coords = ", ".join(f"({u}, {c})" for u, c in missing)
        raise MissingDataError(f"missing cells: {coords}", coordinates=missing)

    if policy is MissingPolicy.DROP_UNIT:
        bad_units = {u for u, _ in missing}
        keep = [i for i, u in enumerate(matrix.units) if u not in bad_units]
        if len(keep) < 2:
            raise DegenerateMatrixError(
                f"dropping units with gaps leaves {len(keep)} unit(s); at least 2 required")
        return ObservationMatrix(
            units=[matrix.units[i] for i in keep],
            indicators=matrix.indicators,
            values=[matrix.values[i] for i in keep],
            year=matrix.year)

    if policy is MissingPolicy.DROP_INDICATOR:
        bad_codes = {c for _, c in missing}
        keep = [j for j, s in enumerate(matrix.indicators) if s.code not in bad_codes]
        if len(keep) < 1:
            raise DegenerateMatrixError(
                "dropping indicators with gaps leaves no indicator; at least 1 required")
        return ObservationMatrix(
            units=matrix.units,
            indicators=[matrix.indicators[j] for j in keep],
            values=[[row[j] for j in keep] for row in matrix.values],
            year=matrix.year)

    # IMPUTE_COLUMN_MEAN
    means: dict[int, float] = {}
    for j, spec in enumerate(matrix.indicators):
        present = [v for v in matrix.column(j) if v is not None]
        if not present:
            raise MissingDataError(
                f"column {spec.code!r} is entirely missing; cannot impute",
                coordinates=tuple((u, c) for u, c in missing if c == spec.code))
        means[j] = sum(present) / len(present)
    return ObservationMatrix(
        units=matrix.units,
        indicators=matrix.indicators,
        values=[[means[j] if v is None else v for j, v in enumerate(row)]
                for row in matrix.values],
        year=matrix.year)
