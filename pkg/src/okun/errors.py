"""Exception types shared across the package.

Everything user-facing derives from :class:`OkunError` so the CLI and the
HTTP service can map the whole family to "bad input / bad data" responses,
keeping unexpected exceptions distinguishable as internal failures.
"""


class OkunError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(OkunError):
    """A value is outside the mathematical domain of an operation."""


class InsufficientDataError(OkunError):
    """Too few observations for the requested transform."""


class AlignmentError(OkunError):
    """Year ranges do not line up (no overlap, anchor mismatch, splice mismatch)."""


class UnitError(OkunError):
    """Unsupported unit or unit conversion."""


class ParseError(OkunError):
    """Malformed input file; ``line`` is the 1-based line of the offence."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class DuplicateYearError(ParseError):
    pass


class YearGapError(ParseError):
    pass


class NumberFormatError(ParseError):
    pass


class EmptyInputError(ParseError):
    pass


class DataError(OkunError):
    """Data present but unusable (too short, missing series, bad overlap)."""


class RankDeficiencyError(OkunError):
    """Singular normal equations; coefficients are not identifiable."""


class DegenerateModelError(OkunError):
    """Model parameters make the requested quantity undefined (zero slope)."""


class DegenerateStatisticsError(OkunError):
    """Fit statistics undefined (zero variance in the measured series)."""


class ConfigError(OkunError):
    """No admissible configuration; message lists why each candidate failed."""
