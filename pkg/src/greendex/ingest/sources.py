"""Data-source descriptors and the raw observation record."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from urllib.parse import urlparse


@dataclass(frozen=True)
class FixtureCsv:
    """A committed snapshot in the normative fixture-CSV format."""

    path: Path

    def __init__(self, path):
        object.__setattr__(self, "path", Path(path))


@dataclass(frozen=True)
class EurostatTsv:
    """Local bulk-download TSV files, one per dataset code."""

    paths: dict[str, Path]

    def __init__(self, paths):
        object.__setattr__(self, "paths",
                           {code: Path(p) for code, p in dict(paths).items()})


@dataclass(frozen=True)
class EurostatApi:
    """The dissemination statistics API plus a response cache directory."""

    base_url: str
    cache_dir: Path

    def __init__(self, base_url, cache_dir):
        parsed = urlparse(base_url)
        if not (parsed.scheme and parsed.netloc):
            raise ValueError(f"API base URL must be absolute, got {base_url!r}")
        object.__setattr__(self, "base_url", base_url.rstrip("/"))
        object.__setattr__(self, "cache_dir", Path(cache_dir))


DataSource = FixtureCsv | EurostatTsv | EurostatApi


@dataclass(frozen=True)
class RawObservation:
    """One (dataset, geo, year) value as delivered upstream.

    ``flags`` keeps Eurostat's single-letter value annotations (e.g. "e"
    estimated, "p" provisional, "b" break in series) as metadata; they
    never alter the value itself.
    """

    dataset_code: str
    geo: str
    year: int
    value: float | None
    flags: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.year <= 1900:
            raise ValueError(f"implausible year {self.year}")
        object.__setattr__(self, "flags", frozenset(self.flags))
        for f in self.flags:
            if not (len(f) == 1 and f.isalpha() and f.islower()):
                raise ValueError(f"flag {f!r} is not a single lowercase letter")
