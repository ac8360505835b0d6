"""The numeric core: range rescaling, per-unit statistics, classification.

The synthetic measure of a unit is built in three steps over its row of
normalized indicator values z in [0, 1]:

    Me = median(z)                      (middle order statistic)
    Sd = sqrt(mean((z - mean(z))^2))    (population standard deviation)
    w  = Me * (1 - Sd)

so the measure rewards a high typical level and penalizes an uneven
profile. Units are then cut into four groups by the cross-unit mean
``wbar`` and population standard deviation ``S`` of w:

    I   w >= wbar + S        high
    II  wbar + S > w >= wbar medium-high
    III wbar > w >= wbar - S medium-low
    IV  w < wbar - S         low

The boundary w == wbar belongs to groups II and III at the same time as
the cuts are usually printed; :class:`TiePolicy` makes the choice explicit
(default: the higher group, matching the ">=" of row II).

Everything here is 64-bit floating point with exact >=/< comparisons in
the classification: the thresholds come out of the same arithmetic as the
scores, so an epsilon would only blur reproducibility.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import (
    ConstantColumnError,
    DegenerateInputError,
    GreendexError,
)
from .model import (
    Classification,
    Direction,
    FindingKind,
    Group,
    MissingPolicy,
    NormalizedMatrix,
    ObservationMatrix,
    UnitScore,
    apply_missing_policy,
    validate,
)


class TiePolicy(enum.Enum):
    """Which group receives a unit sitting exactly on the w == wbar cut."""

    HIGHER_GROUP = "higher_group"
    LOWER_GROUP = "lower_group"


class ConstantColumnPolicy(enum.Enum):
    """What to do when a column has max == min (rescaling divides by zero).

    ERROR is the default; DROP_INDICATOR removes the column and records it
    in the result. A neutral substitute value is deliberately not offered:
    it would distort every median downstream.
    """

    ERROR = "error"
    DROP_INDICATOR = "drop_indicator"


@dataclass(frozen=True)
class PipelineSettings:
    """Bundle of the three pipeline knobs, with conservative defaults."""

    missing: MissingPolicy = MissingPolicy.FAIL
    tie: TiePolicy = TiePolicy.HIGHER_GROUP
    constant_column: ConstantColumnPolicy = ConstantColumnPolicy.ERROR


@dataclass(frozen=True)
class AnalysisResult:
    """Everything one pipeline run produces.

    ``scores`` are sorted by w descending, ties broken by unit identifier
    ascending, so a rank is the 1-based position in this tuple.
    ``dropped_units`` / ``dropped_indicators`` record what the missing-data
    policy and the constant-column handling removed.
    """

    normalized: NormalizedMatrix
    scores: tuple[UnitScore, ...]
    classification: Classification
    dropped_units: tuple[str, ...] = ()
    dropped_indicators: tuple[str, ...] = ()

    @property
    def n_indicators(self) -> int:
        """Effective indicator count after drops."""
        return self.normalized.n_indicators

    def ranking(self) -> tuple[str, ...]:
        return tuple(s.unit for s in self.scores)

    def score_of(self, unit: str) -> UnitScore:
        for s in self.scores:
            if s.unit == unit:
                return s
        raise KeyError(unit)


def normalize_column(values, direction: Direction) -> list[float]:
    """Rescale one column onto [0, 1] by its own range.

    Stimulant: (x - min) / (max - min); destimulant: (max - x) / (max - min).
    The column extremes map to exact 0.0 and 1.0.
    """
    vals = list(values)
    if len(vals) < 2:
        raise DegenerateInputError(
            f"need at least 2 values to rescale, got {len(vals)}")
    if any(v is None for v in vals):
        raise DegenerateInputError("column contains missing values")
    lo, hi = min(vals), max(vals)
    span = hi - lo
    if span == 0:
        raise ConstantColumnError(f"constant column (all values {lo!r})")
    if direction is Direction.STIMULANT:
        return [(v - lo) / span for v in vals]
    return [(hi - v) / span for v in vals]


def normalize_matrix(matrix: ObservationMatrix) -> NormalizedMatrix:
    """Rescale every column independently, per its indicator's direction."""
    if matrix.n_units < 2:
        raise DegenerateInputError(
            f"need at least 2 units, got {matrix.n_units}")
    if matrix.n_indicators < 1:
        raise DegenerateInputError("need at least 1 indicator")
    columns = []
    for j, spec in enumerate(matrix.indicators):
        try:
            columns.append(normalize_column(matrix.column(j), spec.direction))
        except ConstantColumnError as err:
            raise ConstantColumnError(str(err), code=spec.code) from None
    rows = [tuple(col[i] for col in columns) for i in range(matrix.n_units)]
    return NormalizedMatrix(units=matrix.units, indicators=matrix.indicators,
                            values=rows)


def median(values) -> float:
    """Middle order statistic; mean of the two middle ones for even length."""
    vals = sorted(values)
    m = len(vals)
    if m == 0:
        raise DegenerateInputError("median of empty list")
    if m % 2 == 1:
        return float(vals[m // 2])
    return (vals[m // 2 - 1] + vals[m // 2]) / 2.0


def std_dev(values) -> float:
    """Population standard deviation: sqrt(mean of squared deviations)."""
    vals = list(values)
    m = len(vals)
    if m == 0:
        raise DegenerateInputError("std_dev of empty list")
    mean = sum(vals) / m
    return math.sqrt(sum((v - mean) ** 2 for v in vals) / m)


def unit_score(unit: str, row) -> UnitScore:
    """Aggregate one unit's normalized row into its synthetic measure."""
    vals = list(row)
    me = median(vals)
    sd = std_dev(vals)
    return UnitScore(unit=unit, median=me, std_dev=sd, w=me * (1.0 - sd))


def classify(scores, tie: TiePolicy = TiePolicy.HIGHER_GROUP) -> Classification:
    """Cut units into four groups at mean +/- population std-dev of w.

    The same estimator as the per-unit standard deviation is used across
    units, for internal consistency.
    """
    scores = list(scores)
    if len(scores) < 2:
        raise DegenerateInputError(
            f"need at least 2 scores to classify, got {len(scores)}")
    ws = [s.w for s in scores]
    mean_w = sum(ws) / len(ws)
    sd_w = math.sqrt(sum((w - mean_w) ** 2 for w in ws) / len(ws))
    upper = mean_w + sd_w
    lower = mean_w - sd_w

    assignments: dict[str, Group] = {}
    for s in scores:
        if s.w >= upper:
            g = Group.I
        elif (s.w >= mean_w if tie is TiePolicy.HIGHER_GROUP else s.w > mean_w):
            g = Group.II
        elif s.w >= lower:
            g = Group.III
        else:
            g = Group.IV
        assignments[s.unit] = g
    return Classification(mean_w=mean_w, sd_w=sd_w, assignments=assignments)


def run_pipeline(matrix: ObservationMatrix,
                 settings: PipelineSettings | None = None) -> AnalysisResult:
    """Full analysis: repair -> rescale -> score -> classify.

    Structural defects (duplicates, ragged rows) abort immediately; errors
    from the stages are re-raised with the failing stage recorded on the
    exception. The run is deterministic: identical input and settings give
    a bit-identical result.
    """
    settings = settings or PipelineSettings()

    report = validate(matrix)
    structural = (report.of_kind(FindingKind.DUPLICATE_UNIT)
                  + report.of_kind(FindingKind.DUPLICATE_INDICATOR)
                  + report.of_kind(FindingKind.SHAPE_MISMATCH))
    if structural:
        err = DegenerateInputError(
            "; ".join(f.message for f in structural))
        err.stage = "validate"
        raise err

    try:
        complete = apply_missing_policy(matrix, settings.missing)
    except GreendexError as err:
        err.stage = "missing-policy"
        raise

    dropped_units = tuple(u for u in matrix.units if u not in set(complete.units))
    dropped_indicators = [c for c in matrix.codes()
                          if c not in set(complete.codes())]

    if settings.constant_column is ConstantColumnPolicy.DROP_INDICATOR:
        keep = []
        for j, spec in enumerate(complete.indicators):
            col = complete.column(j)
            if max(col) == min(col):
                dropped_indicators.append(spec.code)
            else:
                keep.append(j)
        if len(keep) < complete.n_indicators:
            if not keep:
                err = DegenerateInputError("every column is constant")
                err.stage = "normalize"
                raise err
            complete = ObservationMatrix(
                units=complete.units,
                indicators=[complete.indicators[j] for j in keep],
                values=[[row[j] for j in keep] for row in complete.values],
                year=complete.year)

    try:
        normalized = normalize_matrix(complete)
        scores = [unit_score(u, normalized.row(i))
                  for i, u in enumerate(normalized.units)]
    except GreendexError as err:
        err.stage = "normalize"
        raise

    scores.sort(key=lambda s: (-s.w, s.unit))

    try:
        classification = classify(scores, settings.tie)
    except GreendexError as err:
        err.stage = "classify"
        raise

    return AnalysisResult(normalized=normalized,
                          scores=tuple(scores),
                          classification=classification,
                          dropped_units=dropped_units,
                          dropped_indicators=tuple(dropped_indicators))
