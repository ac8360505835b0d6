"""Run configuration: TOML file format, defaults, environment override.

The config file is TOML. Top-level keys::

    name = "eu28-2019"
    year = 2019
    geos = ["FI", "DK", ...]
    missing_policy = "fail"              # fail|drop_unit|drop_indicator|impute_column_mean
    tie_policy = "higher_group"          # higher_group|lower_group
    constant_column_policy = "error"     # error|drop_indicator

    [[indicators]]
    code = "tin00111"
    label = "..."
    direction = "stimulant"              # stimulant|destimulant

    [source]
    kind = "fixture"                     # fixture|tsv|api
    path = "snapshot.csv"                # fixture: CSV path
    # kind = "tsv":  [source.paths]  tin00111 = "tin00111.tsv" ...
    # kind = "api":  base_url = "...", cache_dir = ".cache"  (base_url optional)

The API base URL may come from the ``GREENDEX_BASE_URL`` environment
variable instead of the config; setting both is rejected as ambiguous.

The shipped default configuration covers the seven enterprise-ICT usage
indicators for the 28-country 2019 EU panel, backed by the committed
snapshot CSV, so ``analyze`` works offline out of the box.
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import ConfigError
from .ingest.sources import DataSource, EurostatApi, EurostatTsv, FixtureCsv
from .measure import ConstantColumnPolicy, PipelineSettings, TiePolicy
from .model import Direction, IndicatorSpec, MissingPolicy

ENV_BASE_URL = "GREENDEX_BASE_URL"
DEFAULT_BASE_URL = "https://ec.europa.eu/eurostat/api/dissemination/statistics/1.0/data"

#: Eurostat geo codes of the 2019 EU panel (28 members, UK included).
EU28_GEOS = (
    "BE", "BG", "CZ", "DK", "DE", "EE", "IE", "EL", "ES", "FR",
    "HR", "IT", "CY", "LV", "LT", "LU", "HU", "MT", "NL", "AT",
    "PL", "PT", "RO", "SI", "SK", "FI", "SE", "UK",
)

#: The seven enterprise-ICT usage indicators, all higher-is-better.
DEFAULT_INDICATORS = (
    IndicatorSpec("tin00111", "Enterprises having received orders online "
                  "(at least 1%), % of enterprises", 1, Direction.STIMULANT),
    IndicatorSpec("tin00110", "Share of enterprises' turnover in e-commerce, %",
                  2, Direction.STIMULANT),
    IndicatorSpec("tin00090", "Enterprises with broadband access, % of enterprises",
                  3, Direction.STIMULANT),
    IndicatorSpec("tin00125", "Enterprises giving portable devices for a mobile "
                  "connection to the internet to their employees, % of enterprises",
                  4, Direction.STIMULANT),
    IndicatorSpec("tin00126", "Enterprises using radio frequency identification "
                  "(RFID), % of enterprises", 5, Direction.STIMULANT),
    IndicatorSpec("tin00115", "Enterprises whose business processes are "
                  "automatically linked to those of their suppliers and/or "
                  "customers, % of enterprises", 6, Direction.STIMULANT),
    IndicatorSpec("tin00116", "Enterprises using CRM software to analyse "
                  "information about clients for marketing purposes, "
                  "% of enterprises", 7, Direction.STIMULANT),
)


@dataclass(frozen=True)
class RunConfig:
    name: str
    year: int
    geos: tuple[str, ...]
    indicators: tuple[IndicatorSpec, ...]
    source: DataSource
    missing_policy: MissingPolicy = MissingPolicy.FAIL
    tie_policy: TiePolicy = TiePolicy.HIGHER_GROUP
    constant_column_policy: ConstantColumnPolicy = ConstantColumnPolicy.ERROR

    def settings(self) -> PipelineSettings:
        return PipelineSettings(missing=self.missing_policy,
                                tie=self.tie_policy,
                                constant_column=self.constant_column_policy)


def bundled_snapshot_path() -> Path:
    """Path of the committed EU-28/2019 snapshot CSV inside the package."""
    return Path(resources.files("greendex").joinpath("data/eu28_2019.csv"))


def default_config() -> RunConfig:
    return RunConfig(
        name="eu28-2019",
        year=2019,
        geos=EU28_GEOS,
        indicators=DEFAULT_INDICATORS,
        source=FixtureCsv(bundled_snapshot_path()),
    )


def _enum_value(enum_cls, raw, key: str):
    try:
        return enum_cls(raw)
    except ValueError:
        valid = ", ".join(m.value for m in enum_cls)
        raise ConfigError(f"{key}: {raw!r} is not one of: {valid}") from None


def _parse_source(table: dict, base_dir: Path, env: dict) -> DataSource:
    kind = table.get("kind")
    if kind == "fixture":
        try:
            path = table["path"]
        except KeyError:
            raise ConfigError("source.path is required for kind = 'fixture'") from None
        return FixtureCsv(base_dir / path)
    if kind == "tsv":
        paths = table.get("paths")
        if not isinstance(paths, dict) or not paths:
            raise ConfigError("source.paths table is required for kind = 'tsv'")
        return EurostatTsv({code: base_dir / p for code, p in paths.items()})
    if kind == "api":
        config_url = table.get("base_url")
        env_url = env.get(ENV_BASE_URL)
        if config_url and env_url:
            raise ConfigError(
                f"API base URL set both in the config ({config_url!r}) and via "
                f"{ENV_BASE_URL} ({env_url!r}); remove one")
        base_url = config_url or env_url or DEFAULT_BASE_URL
        cache_dir = table.get("cache_dir", ".greendex-cache")
        return EurostatApi(base_url, base_dir / cache_dir)
    raise ConfigError(f"source.kind must be fixture, tsv or api, got {kind!r}")


def load_config(path: str | Path, env: dict | None = None) -> RunConfig:
    """Load and validate a TOML run configuration.

    Relative paths inside the file resolve against the file's directory.
    ``env`` defaults to ``os.environ`` (injectable for tests).
    """
    path = Path(path)
    env = dict(os.environ) if env is None else env
    try:
        with open(path, "rb") as handle:
            doc = tomllib.load(handle)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except tomllib.TOMLDecodeError as err:
        raise ConfigError(f"invalid TOML in {path}: {err}") from None

    for key in ("name", "year", "geos", "indicators", "source"):
        if key not in doc:
            raise ConfigError(f"missing required config key {key!r}")

    geos = tuple(str(g) for g in doc["geos"])
    if len(set(geos)) != len(geos):
        raise ConfigError("geos contains duplicates")

    indicators = []
    for j, entry in enumerate(doc["indicators"], start=1):
        try:
            code = entry["code"]
        except (KeyError, TypeError):
            raise ConfigError(f"indicators[{j - 1}] lacks a code") from None
        indicators.append(IndicatorSpec(
            code=str(code),
            label=str(entry.get("label", code)),
            symbol_index=int(entry.get("symbol_index", j)),
            direction=_enum_value(Direction, entry.get("direction", "stimulant"),
                                  f"indicators[{j - 1}].direction")))
    if len({s.code for s in indicators}) != len(indicators):
        raise ConfigError("indicator codes contain duplicates")
    if not indicators:
        raise ConfigError("indicators must be non-empty")

    source = _parse_source(doc["source"], path.parent, env)

    return RunConfig(
        name=str(doc["name"]),
        year=int(doc["year"]),
        geos=geos,
        indicators=tuple(indicators),
        source=source,
        missing_policy=_enum_value(MissingPolicy, doc.get("missing_policy", "fail"),
                                   "missing_policy"),
        tie_policy=_enum_value(TiePolicy, doc.get("tie_policy", "higher_group"),
                               "tie_policy"),
        constant_column_policy=_enum_value(
            ConstantColumnPolicy, doc.get("constant_column_policy", "error"),
            "constant_column_policy"),
    )
