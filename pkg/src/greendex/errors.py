"""Exception hierarchy shared by all greendex modules.

Every error raised by this package derives from :class:`GreendexError`.
Errors raised inside the analysis pipeline additionally carry the name of
the stage that failed (see :attr:`GreendexError.stage`), so callers can
report *where* a run broke without string-matching messages.
"""

from __future__ import annotations


class GreendexError(Exception):
    """Base class for all package errors.

    ``stage`` is filled in by the pipeline runner when the error surfaces
    from one of its stages; it stays ``None`` for errors raised directly.
    """

    stage: str | None = None

    def __str__(self) -> str:
        base = super().__str__()
        if self.stage:
            return f"[stage: {self.stage}] {base}"
        return base


# -- data/shape problems ----------------------------------------------------

class MissingDataError(GreendexError):
    """A computation that requires complete data hit missing cells."""

    def __init__(self, message: str, coordinates: tuple[tuple[str, str], ...] = ()):
        super().__init__(message)
        self.coordinates = tuple(coordinates)


class DegenerateMatrixError(GreendexError):
    """A missing-data policy reduced the matrix below the analyzable size."""


class DegenerateInputError(GreendexError):
    """An operation received too little data to be meaningful."""


class ConstantColumnError(GreendexError):
    """A column has max == min, so range rescaling is undefined."""

    def __init__(self, message: str, code: str | None = None):
        super().__init__(message)
        self.code = code


# -- ingestion --------------------------------------------------------------

class FormatError(GreendexError):
    """Malformed input text; carries the 1-based line (and column if known)."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + where)
        self.line = line
        self.column = column


class EmptySelectionError(GreendexError):
    """A parse/filter selected zero observations."""


class MissingDatasetError(GreendexError):
    """A dataset code produced no observations at all."""

    def __init__(self, message: str, code: str):
        super().__init__(message)
        self.code = code


class NetworkError(GreendexError):
    """Transport-level failure talking to the statistics API."""

    def __init__(self, message: str, code: str):
        super().__init__(message)
        self.code = code


class UpstreamError(GreendexError):
    """The statistics API answered with a non-2xx status."""

    def __init__(self, message: str, code: str, status: int):
        super().__init__(message)
        self.code = code
        self.status = status


class DecodeError(GreendexError):
    """The statistics API answered 2xx but the body shape was unexpected."""

    def __init__(self, message: str, code: str):
        super().__init__(message)
        self.code = code


# -- configuration ----------------------------------------------------------

class ConfigError(GreendexError):
    """A run configuration file is missing, malformed, or ambiguous."""
