"""Parsing and validation of country data.

Input files are minimal two-column CSVs (``year,value``, optional header).
A :class:`CountryDataset` bundles the GDP-per-capita series with at least
one labor-rate series, after declared level-shift adjustments have spliced
out purely definitional jumps (the estimator must see continuous series;
reports re-apply the shift for display).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .errors import (
    AlignmentError,
    DataError,
    DomainError,
    DuplicateYearError,
    EmptyInputError,
    NumberFormatError,
    UnitError,
    YearGapError,
)
from .series import AnnualSeries, Unit

MIN_OVERLAP_YEARS = 12  # >= 5 obs per segment plus break-grid slack


class RateKind(str, Enum):
    EMPLOYMENT = "employment"
    UNEMPLOYMENT = "unemployment"


@dataclass(frozen=True)
class LevelShift:
    """Declared artificial jump: ``magnitude`` is added at ``year`` in the raw data."""

    series: RateKind
    year: int
    magnitude: float


def parse_series_csv(text: str | bytes, declared_unit: Unit) -> AnnualSeries:
    """Parse ``year,value`` lines into a contiguous series.

    Records are sorted by year before validation; duplicate years, gaps,
    unparsable numbers and empty input each raise a distinct error carrying
    the offending 1-based line number.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    records: list[tuple[int, float, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if lineno == 1 and line.lower().replace(" ", "") == "year,value":
            continue
        parts = line.split(",")
        if len(parts) != 2:
            raise NumberFormatError(
                f"line {lineno}: expected 'year,value', got {line!r}", line=lineno
            )
        try:
            year = int(parts[0].strip())
        except ValueError:
            raise NumberFormatError(
                f"line {lineno}: unparsable year {parts[0].strip()!r}", line=lineno
            ) from None
        try:
            value = float(parts[1].strip())
        except ValueError:
            raise NumberFormatError(
                f"line {lineno}: unparsable value {parts[1].strip()!r}", line=lineno
            ) from None
        records.append((year, value, lineno))

    if not records:
        raise EmptyInputError("no data records found", line=None)

    records.sort(key=lambda r: (r[0], r[2]))
    for (y0, _, _), (y1, _, lineno) in zip(records, records[1:]):
        if y1 == y0:
            raise DuplicateYearError(f"line {lineno}: duplicate year {y1}", line=lineno)
        if y1 != y0 + 1:
            missing = ", ".join(str(y) for y in range(y0 + 1, y1))
            raise YearGapError(
                f"line {lineno}: gap in years, missing {missing}", line=lineno
            )

    values = tuple(v for _, v, _ in records)
    series = AnnualSeries(records[0][0], values, declared_unit)
    if declared_unit is Unit.CURRENCY:
        _validate_positive("gdp", series)
    return series


def normalize_unit(s: AnnualSeries, target: Unit) -> AnnualSeries:
    """Convert between fraction and percent-points; other pairs are rejected."""
    if s.unit is target:
        return s
    if s.unit is Unit.FRACTION and target is Unit.PERCENT:
        return AnnualSeries(s.start_year, tuple(v * 100.0 for v in s.values), target)
    if s.unit is Unit.PERCENT and target is Unit.FRACTION:
        return AnnualSeries(s.start_year, tuple(v / 100.0 for v in s.values), target)
    raise UnitError(f"unsupported unit conversion {s.unit.value} -> {target.value}")


def apply_level_shift(s: AnnualSeries, shift: LevelShift) -> AnnualSeries:
    """Remove a declared level shift: subtract ``magnitude`` from ``shift.year`` on.

    The shift year must lie inside the series and cannot be the first year
    (there would be no jump to splice out).
    """
    if not s.has_year(shift.year) or shift.year == s.start_year:
        raise AlignmentError(
            f"level-shift year {shift.year} outside adjustable range "
            f"{s.start_year + 1}-{s.end_year}"
        )
    cut = shift.year - s.start_year
    values = s.values[:cut] + tuple(v - shift.magnitude for v in s.values[cut:])
    return AnnualSeries(s.start_year, values, s.unit)


def restore_level_shift(s: AnnualSeries, shift: LevelShift) -> AnnualSeries:
    """Inverse of :func:`apply_level_shift`, used to re-shift output for display."""
    return apply_level_shift(s, replace(shift, magnitude=-shift.magnitude))


def _validate_positive(name: str, s: AnnualSeries) -> None:
    for year, value in s.items():
        if value <= 0.0:
            raise DomainError(f"{name} value {value} in {year} must be positive")


def _validate_rate(name: str, s: AnnualSeries) -> None:
    if s.unit is not Unit.PERCENT:
        raise UnitError(f"{name} series must be in percent-points, got {s.unit.value}")
    for year, value in s.items():
        if not 0.0 <= value <= 100.0:
            raise DomainError(f"{name} rate {value} in {year} outside [0, 100]")


@dataclass(frozen=True)
class CountryDataset:
    """Aligned GDP and labor-rate series for one country.

    Rate series are stored with declared level shifts already removed;
    ``adjustments`` records what was removed so output can be re-shifted.
    ``gdp_variant`` is free-text metadata (e.g. the source's index variant)
    and is never interpreted.
    """

    country: str
    gdp_per_capita: AnnualSeries
    employment_rate: AnnualSeries | None = None
    unemployment_rate: AnnualSeries | None = None
    adjustments: tuple[LevelShift, ...] = ()
    gdp_variant: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "adjustments", tuple(self.adjustments))
        if self.gdp_per_capita.unit is not Unit.CURRENCY:
            raise UnitError(
                f"gdp_per_capita must be currency-per-capita, got {self.gdp_per_capita.unit.value}"
            )
        _validate_positive("gdp_per_capita", self.gdp_per_capita)
        if self.employment_rate is None and self.unemployment_rate is None:
            raise DataError("at least one of employment_rate/unemployment_rate required")
        for name, rate in (
            ("employment", self.employment_rate),
            ("unemployment", self.unemployment_rate),
        ):
            if rate is None:
                continue
            _validate_rate(name, rate)
            overlap = min(rate.end_year, self.gdp_per_capita.end_year) - max(
                rate.start_year, self.gdp_per_capita.start_year
            ) + 1
            if overlap < MIN_OVERLAP_YEARS:
                raise DataError(
                    f"{name} series overlaps GDP by {max(overlap, 0)} years; "
                    f"at least {MIN_OVERLAP_YEARS} required"
                )

    def rate(self, kind: RateKind) -> AnnualSeries:
        series = (
            self.employment_rate
            if kind is RateKind.EMPLOYMENT
            else self.unemployment_rate
        )
        if series is None:
            raise DataError(f"dataset for {self.country!r} has no {kind.value} series")
        return series


def build_dataset(
    country: str,
    gdp_per_capita: AnnualSeries,
    employment_rate: AnnualSeries | None = None,
    unemployment_rate: AnnualSeries | None = None,
    level_shifts: tuple[LevelShift, ...] = (),
    gdp_variant: str | None = None,
) -> CountryDataset:
    """Assemble a dataset: normalize rate units, then apply declared level shifts."""
    series = {
        RateKind.EMPLOYMENT: (
            normalize_unit(employment_rate, Unit.PERCENT) if employment_rate else None
        ),
        RateKind.UNEMPLOYMENT: (
            normalize_unit(unemployment_rate, Unit.PERCENT) if unemployment_rate else None
        ),
    }
    for shift in level_shifts:
        target = series[shift.series]
        if target is None:
            raise DataError(
                f"level shift declared for absent {shift.series.value} series"
            )
        series[shift.series] = apply_level_shift(target, shift)
    return CountryDataset(
        country=country,
        gdp_per_capita=gdp_per_capita,
        employment_rate=series[RateKind.EMPLOYMENT],
        unemployment_rate=series[RateKind.UNEMPLOYMENT],
        adjustments=tuple(level_shifts),
        gdp_variant=gdp_variant,
    )
