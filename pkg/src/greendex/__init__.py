"""Composite development measures for multi-indicator country data.

The pipeline normalizes each indicator to [0, 1] with zero unitarization
(direction-aware), scores each unit as w = median * (1 - population
standard deviation) over its normalized row, and classifies units into
four groups split at mean(w) +/- sd(w). Ingestion covers a bundled
fixture CSV, Eurostat bulk TSV files, and the Eurostat JSON-stat API
with a verbatim on-disk cache. Robustness tooling reruns the pipeline
under leave-one-indicator-out and seeded multiplicative noise.
"""

from .config import (
    DEFAULT_BASE_URL,
    DEFAULT_INDICATORS,
    ENV_BASE_URL,
    EU28_GEOS,
    RunConfig,
    bundled_snapshot_path,
    default_config,
    load_config,
)
from .errors import (
    ConfigError,
    ConstantColumnError,
    DecodeError,
    DegenerateInputError,
    DegenerateMatrixError,
    EmptySelectionError,
    FormatError,
    GreendexError,
    MissingDataError,
    MissingDatasetError,
    NetworkError,
    UpstreamError,
)
from .ingest import (
    DataSource,
    EurostatApi,
    EurostatTsv,
    FixtureCsv,
    RawObservation,
    assemble_matrix,
    parse_eurostat_tsv,
    parse_fixture_csv,
    serialize_fixture_csv,
)
from .measure import (
    AnalysisResult,
    ConstantColumnPolicy,
    PipelineSettings,
    TiePolicy,
    classify,
    median,
    normalize_column,
    normalize_matrix,
    run_pipeline,
    std_dev,
    unit_score,
)
from .model import (
    Classification,
    Direction,
    Finding,
    FindingKind,
    Group,
    IndicatorSpec,
    MissingPolicy,
    NormalizedMatrix,
    ObservationMatrix,
    UnitScore,
    ValidationReport,
    apply_missing_policy,
    validate,
)
from .robustness import (
    PerturbationResult,
    SensitivityReport,
    SensitivityVariant,
    cell_noise,
    leave_one_out,
    perturb,
    rank_correlation,
)

__version__ = "1.0.0"

__all__ = [
    "AnalysisResult",
    "Classification",
    "ConfigError",
    "ConstantColumnError",
    "ConstantColumnPolicy",
    "DataSource",
    "DecodeError",
    "DEFAULT_BASE_URL",
    "DEFAULT_INDICATORS",
    "DegenerateInputError",
    "DegenerateMatrixError",
    "Direction",
    "EmptySelectionError",
    "ENV_BASE_URL",
    "EU28_GEOS",
    "EurostatApi",
    "EurostatTsv",
    "Finding",
    "FindingKind",
    "FixtureCsv",
    "FormatError",
    "GreendexError",
    "Group",
    "IndicatorSpec",
    "MissingDataError",
    "MissingDatasetError",
    "MissingPolicy",
    "NetworkError",
    "NormalizedMatrix",
    "ObservationMatrix",
    "PerturbationResult",
    "PipelineSettings",
    "RawObservation",
    "RunConfig",
    "SensitivityReport",
    "SensitivityVariant",
    "TiePolicy",
    "UnitScore",
    "UpstreamError",
    "ValidationReport",
    "apply_missing_policy",
    "assemble_matrix",
    "bundled_snapshot_path",
    "cell_noise",
    "classify",
    "default_config",
    "leave_one_out",
    "load_config",
    "median",
    "normalize_column",
    "normalize_matrix",
    "parse_eurostat_tsv",
    "parse_fixture_csv",
    "perturb",
    "rank_correlation",
    "run_pipeline",
    "serialize_fixture_csv",
    "std_dev",
    "unit_score",
    "validate",
]
