"""Year-indexed annual series and the elementary transforms built on it.

An :class:`AnnualSeries` is a contiguous run of annual observations: the
value at index ``i`` belongs to calendar year ``start_year + i``.  Gaps are
unrepresentable by construction, which keeps every transform a pure
index-shift exercise.  Rates are carried in percentage points and relative
GDP growth in percent per year (100 times the log difference), so model
coefficients stay dimensionless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import AlignmentError, DomainError, InsufficientDataError


class Unit(str, Enum):
    """Measurement unit carried by a series."""

    PERCENT = "percent-points"
    FRACTION = "fraction"
    CURRENCY = "currency-per-capita"
    LOG_POINTS = "log-points"


@dataclass(frozen=True)
class AnnualSeries:
    """Immutable contiguous annual series.

    The container enforces shape only (non-empty, finite values).  Range
    checks depend on what a series *means* and live at the boundaries that
    need them: measured rates in [0, 100] and positive GDP levels are
    checked at ingestion, log transforms re-check positivity themselves.
    Derived series (first differences of a GDP path, say) may legitimately
    hold zeros or negatives in any unit.
    """

    start_year: int
    values: tuple[float, ...]
    unit: Unit = Unit.PERCENT

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        object.__setattr__(self, "start_year", int(self.start_year))
        if not self.values:
            raise InsufficientDataError("series must contain at least one value")
        for year, value in self.items():
            if not math.isfinite(value):
                raise DomainError(f"non-finite value {value!r} in {year}")

    def __len__(self) -> int:
        return len(self.values)

    @property
    def end_year(self) -> int:
        return self.start_year + len(self.values) - 1

    def years(self) -> range:
        return range(self.start_year, self.end_year + 1)

    def items(self):
        """Iterate ``(year, value)`` pairs."""
        for i, v in enumerate(self.values):
            yield self.start_year + i, v

    def has_year(self, year: int) -> bool:
        return self.start_year <= year <= self.end_year

    def at(self, year: int) -> float:
        if not self.has_year(year):
            raise AlignmentError(
                f"year {year} outside series range {self.start_year}-{self.end_year}"
            )
        return self.values[year - self.start_year]

    def window(self, first_year: int, last_year: int) -> "AnnualSeries":
        """Restrict to the inclusive year range ``[first_year, last_year]``."""
        if first_year > last_year:
            raise AlignmentError(f"empty window {first_year}-{last_year}")
        if not (self.has_year(first_year) and self.has_year(last_year)):
            raise AlignmentError(
                f"window {first_year}-{last_year} outside series range "
                f"{self.start_year}-{self.end_year}"
            )
        i = first_year - self.start_year
        j = last_year - self.start_year + 1
        return AnnualSeries(first_year, self.values[i:j], self.unit)

    def with_unit(self, unit: Unit) -> "AnnualSeries":
        return AnnualSeries(self.start_year, self.values, unit)


def log_growth(g: AnnualSeries) -> AnnualSeries:
    """Annual relative growth rate, 100 * (ln g_t - ln g_{t-1}).

    The result starts one year after ``g`` and carries percent-points per
    year.  Exact log differences (rather than finite ratios dG/G) make
    cumulative sums telescope back to ln(G_t/G_0).
    """
    if len(g) < 2:
        raise InsufficientDataError("log growth needs at least 2 values")
    for year, value in g.items():
        if value <= 0.0:
            raise DomainError(f"log growth undefined for non-positive value {value} in {year}")
    logs = [math.log(v) for v in g.values]
    rates = tuple(100.0 * (logs[i] - logs[i - 1]) for i in range(1, len(logs)))
    return AnnualSeries(g.start_year + 1, rates, Unit.PERCENT)


def diff(s: AnnualSeries) -> AnnualSeries:
    """First difference s_t - s_{t-1}; one value shorter, same unit."""
    if len(s) < 2:
        raise InsufficientDataError("difference needs at least 2 values")
    deltas = tuple(s.values[i] - s.values[i - 1] for i in range(1, len(s)))
    return AnnualSeries(s.start_year + 1, deltas, s.unit)


def cumsum(increments: AnnualSeries, anchor_year: int, anchor_value: float) -> AnnualSeries:
    """Integrate annual increments from an initial condition.

    The anchor year must immediately precede the increments so the result is
    contiguous; ``result[anchor_year] = anchor_value`` and each later year
    adds the increment for that year.  Inverse of :func:`diff`.
    """
    if anchor_year != increments.start_year - 1:
        raise AlignmentError(
            f"anchor year {anchor_year} must be {increments.start_year - 1}, "
            f"the year before the first increment"
        )
    levels = [float(anchor_value)]
    for v in increments.values:
        levels.append(levels[-1] + v)
    return AnnualSeries(anchor_year, tuple(levels), increments.unit)


def lag(s: AnnualSeries, k: int) -> AnnualSeries:
    """Re-index the series ``k`` years later, so it explains later targets.

    Values are untouched; the value formerly at year t is addressed at t+k.
    """
    if k < 0:
        raise DomainError(f"lag must be non-negative, got {k}")
    if k >= len(s):
        raise InsufficientDataError(f"lag {k} not smaller than series length {len(s)}")
    return AnnualSeries(s.start_year + k, s.values, s.unit)


def align(a: AnnualSeries, b: AnnualSeries) -> tuple[AnnualSeries, AnnualSeries]:
    """Crop both series to the intersection of their year ranges."""
    first = max(a.start_year, b.start_year)
    last = min(a.end_year, b.end_year)
    if first > last:
        raise AlignmentError(
            f"no overlapping years between {a.start_year}-{a.end_year} "
            f"and {b.start_year}-{b.end_year}"
        )
    return a.window(first, last), b.window(first, last)
