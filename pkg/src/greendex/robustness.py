"""Rank-stability diagnostics: leave-one-out, perturbation, rank agreement.

The ranking produced by a synthetic measure can be fragile: one indicator
or a small data revision may shuffle groups. Two probes quantify that:

* :func:`leave_one_out` re-runs the pipeline once per indicator with that
  column removed and reports rank agreement and group changes per variant.
* :func:`perturb` re-runs the pipeline on multiplicatively noised copies
  of the matrix and tallies, per unit, how often each group comes up.

Perturbation noise comes from SplitMix64 (the SplittableRandom finalizer;
constants 0x9E3779B97F4A7C15, 0xBF58476D1CE4E5B9, 0x94D049BB133111EB),
keyed per cell by (seed, trial, row, column). The
generator is fixed here rather than taken from the platform so results
are bit-identical across machines, runs, and serial/parallel execution.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import DegenerateInputError, GreendexError, MissingDataError
from .measure import AnalysisResult, PipelineSettings, run_pipeline
from .model import Group, ObservationMatrix

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _splitmix64(z: int) -> int:
    z = (z + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def cell_noise(seed: int, trial: int, row: int, col: int, amplitude: float) -> float:
    """Deterministic uniform draw in [-amplitude, +amplitude) for one cell.

    The seed is mixed through SplitMix64 before the other key parts are
    absorbed; xoring the raw seed with the trial would make the first
    step symmetric in (seed, trial), aliasing small consecutive seeds
    into permutations of each other's trial streams. The final 64-bit
    word maps to [0, 1) via its top 53 bits.
    """
    z = _splitmix64(seed & _MASK64)
    for part in (trial, row, col):
        z = _splitmix64(z ^ (part & _MASK64))
    u01 = (_splitmix64(z) >> 11) * 2.0 ** -53
    return amplitude * (2.0 * u01 - 1.0)


def rank_correlation(ranks_a, ranks_b) -> float:
    """Spearman rho between two orderings, over their common identifiers.

    rho = 1 - 6 * sum(d^2) / (k * (k^2 - 1)), where d is the difference of
    an identifier's 1-based positions after each ordering is restricted to
    the k common identifiers. No tie correction is needed: orderings are
    identifier lists, so positions are distinct by construction.
    """
    a = list(ranks_a)
    b = list(ranks_b)
    if len(set(a)) != len(a) or len(set(b)) != len(b):
        raise ValueError("orderings must be duplicate-free")
    common = set(a) & set(b)
    k = len(common)
    if k < 2:
        raise DegenerateInputError(
            f"need at least 2 common units, got {k}")
    pos_a = {u: i for i, u in enumerate(u for u in a if u in common)}
    pos_b = {u: i for i, u in enumerate(u for u in b if u in common)}
    d2 = sum((pos_a[u] - pos_b[u]) ** 2 for u in common)
    return 1.0 - 6.0 * d2 / (k * (k * k - 1))


@dataclass(frozen=True)
class SensitivityVariant:
    """One pipeline re-run, labeled by what was changed."""

    label: str
    result: AnalysisResult
    rank_correlation: float
    group_changes: int

    def __post_init__(self) -> None:
        if not -1.0 - 1e-9 <= self.rank_correlation <= 1.0 + 1e-9:
            raise ValueError(f"rank correlation {self.rank_correlation!r} out of bounds")


@dataclass(frozen=True)
class SensitivityReport:
    baseline: AnalysisResult
    variants: tuple[SensitivityVariant, ...]

    def __post_init__(self) -> None:
        base_units = set(self.baseline.ranking())
        for v in self.variants:
            if not set(v.result.ranking()) <= base_units:
                raise ValueError(f"variant {v.label!r} has units outside the baseline")


def _drop_column(matrix: ObservationMatrix, j: int) -> ObservationMatrix:
    return ObservationMatrix(
        units=matrix.units,
        indicators=[s for k, s in enumerate(matrix.indicators) if k != j],
        values=[[v for k, v in enumerate(row) if k != j] for row in matrix.values],
        year=matrix.year)


def _group_changes(baseline: AnalysisResult, variant: AnalysisResult) -> int:
    base = baseline.classification.assignments
    return sum(1 for u, g in variant.classification.assignments.items()
               if base.get(u) is not g)


def leave_one_out(matrix: ObservationMatrix,
                  settings: PipelineSettings | None = None) -> SensitivityReport:
    """Re-run the pipeline once per indicator with that column omitted.

    Variant labels carry the omitted indicator code. Rank agreement is
    Spearman rho between the baseline and variant rankings over common
    units; group changes count units whose group differs from baseline.
    """
    if matrix.n_indicators < 2:
        raise DegenerateInputError(
            f"leave-one-out needs at least 2 indicators, got {matrix.n_indicators}")
    settings = settings or PipelineSettings()
    baseline = run_pipeline(matrix, settings)
    variants = []
    for j, spec in enumerate(matrix.indicators):
        result = run_pipeline(_drop_column(matrix, j), settings)
        rho = rank_correlation(baseline.ranking(), result.ranking())
        variants.append(SensitivityVariant(
            label=spec.code,
            result=result,
            rank_correlation=rho,
            group_changes=_group_changes(baseline, result)))
    return SensitivityReport(baseline=baseline, variants=tuple(variants))


@dataclass(frozen=True)
class PerturbationResult:
    """Per-unit group tallies over noised re-runs.

    ``counts[unit][group]`` sums to ``trials - failed_trials`` for every
    unit; units are keyed in baseline ranking order.
    """

    noise: float
    trials: int
    seed: int
    failed_trials: int
    baseline: AnalysisResult
    counts: dict[str, dict[Group, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts",
                           {u: dict(c) for u, c in self.counts.items()})


def _noised(matrix: ObservationMatrix, seed: int, trial: int,
            noise: float) -> ObservationMatrix:
    values = [[v * (1.0 + cell_noise(seed, trial, i, j, noise))
               for j, v in enumerate(row)]
              for i, row in enumerate(matrix.values)]
    return ObservationMatrix(units=matrix.units, indicators=matrix.indicators,
                             values=values, year=matrix.year)


def perturb(matrix: ObservationMatrix, noise: float, trials: int, seed: int,
            settings: PipelineSettings | None = None,
            workers: int = 1) -> PerturbationResult:
    """Tally each unit's group over ``trials`` noised pipeline re-runs.

    Every cell is multiplied by (1 + u), u uniform in [-noise, +noise)
    and keyed by (seed, trial, row, column), so trial t sees the same
    noise field no matter the execution order; ``workers > 1`` runs
    trials on a thread pool with bit-identical results.

    Requires a complete matrix: noise on an imputed or dropped-row copy
    would measure the repair policy, not the data.
    """
    if noise <= 0.0:
        raise DegenerateInputError(f"noise must be > 0, got {noise!r}")
    if trials < 1:
        raise DegenerateInputError(f"trials must be >= 1, got {trials}")
    missing = matrix.missing_cells()
    if missing:
        raise MissingDataError(
            "perturbation requires a complete matrix", coordinates=missing)
    settings = settings or PipelineSettings()

    baseline = run_pipeline(matrix, settings)
    order = baseline.ranking()
    counts: dict[str, dict[Group, int]] = {
        u: {g: 0 for g in Group} for u in order}

    def one_trial(t: int) -> dict[str, Group] | None:
        try:
            result = run_pipeline(_noised(matrix, seed, t, noise), settings)
        except GreendexError:
            return None
        return result.classification.assignments

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(one_trial, range(trials)))
    else:
        outcomes = [one_trial(t) for t in range(trials)]

    failed = 0
    for assignments in outcomes:
        if assignments is None:
            failed += 1
            continue
        for u, g in assignments.items():
            counts[u][g] += 1

    return PerturbationResult(noise=noise, trials=trials, seed=seed,
                              failed_trials=failed, baseline=baseline,
                              counts=counts)
