"""Two-segment anchored level model linking a labor rate to log GDP per capita.

The predicted rate is a linear function of 100*ln(G_{t-k}/G_anchor-k) plus a
linear time trend, anchored so the prediction is exact at the anchor year
(no free intercept).  A structural break splits the sample: the second
segment is re-anchored at the break year to the *predicted* value there, so
the two-segment curve is continuous by construction and the break year
belongs to the second segment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import AlignmentError, DegenerateModelError, DomainError
from .series import AnnualSeries, Unit, diff


class Target(str, Enum):
    UNEMPLOYMENT = "unemployment"
    EMPLOYMENT = "employment"


@dataclass(frozen=True)
class Segment:
    """One regime: rate = anchor + slope*100*ln(G/G_anchor) + trend*(t - anchor_year).

    ``slope`` is dimensionless (pp of rate per pp of log-GDP growth), ``trend``
    is pp per year.  Sign conventions (slope < 0 for unemployment, > 0 for
    employment) are reported as warnings after fitting, never enforced.
    """

    slope: float
    trend: float
    anchor_year: int
    anchor_value: float


@dataclass(frozen=True)
class SegmentedModel:
    """Two chained segments with a single structural break.

    ``segment2.anchor_year`` equals ``break_year`` and its anchor value is the
    segment-1 prediction there (continuity; maintained by the estimator and
    asserted in tests, since verifying it needs the GDP series).  The GDP
    regressor is lagged by ``lag`` years in both segments.
    """

    target: Target
    lag: int
    break_year: int
    segment1: Segment
    segment2: Segment

    def __post_init__(self):
        if self.lag < 0:
            raise DomainError(f"lag must be non-negative, got {self.lag}")
        if not self.segment1.anchor_year < self.break_year:
            raise DomainError(
                f"segment-1 anchor {self.segment1.anchor_year} must precede "
                f"break year {self.break_year}"
            )
        if self.segment2.anchor_year != self.break_year:
            raise DomainError(
                f"segment-2 anchor {self.segment2.anchor_year} must equal "
                f"break year {self.break_year}"
            )


def _log_level(g: AnnualSeries, year: int, lag_years: int) -> float:
    """100 * ln G at ``year - lag_years``; alignment error if uncovered."""
    source = year - lag_years
    if not g.has_year(source):
        raise AlignmentError(
            f"GDP series {g.start_year}-{g.end_year} does not cover year "
            f"{source} (needed for {year} with lag {lag_years})"
        )
    value = g.at(source)
    if value <= 0.0:
        raise DomainError(f"GDP must be positive to take logs, got {value} in {source}")
    return 100.0 * math.log(value)


def predict_level(
    m: SegmentedModel,
    g: AnnualSeries,
    first_year: int | None = None,
    last_year: int | None = None,
) -> AnnualSeries:
    """Evaluate the model's rate level over ``[first_year, last_year]``.

    Defaults to the maximal range the GDP series supports, starting at the
    segment-1 anchor.  Requested years must not precede that anchor.
    """
    if g.unit is not Unit.CURRENCY:
        raise DomainError(f"GDP series must be currency-per-capita, got {g.unit.value}")
    anchor1 = m.segment1.anchor_year
    if first_year is None:
        first_year = anchor1
    if last_year is None:
        last_year = g.end_year + m.lag
    if first_year < anchor1:
        raise AlignmentError(
            f"prediction cannot start before the anchor year {anchor1}"
        )
    if first_year > last_year:
        raise AlignmentError(f"empty prediction range {first_year}-{last_year}")

    # each segment only needs its own anchor level, so a GDP series covering
    # just the post-break years supports post-break-only predictions
    base1 = _log_level(g, anchor1, m.lag) if first_year < m.break_year else 0.0
    base2 = _log_level(g, m.break_year, m.lag) if last_year >= m.break_year else 0.0

    values = []
    for t in range(first_year, last_year + 1):
        level = _log_level(g, t, m.lag)
        if t < m.break_year:
            seg = m.segment1
            values.append(
                seg.anchor_value + seg.slope * (level - base1) + seg.trend * (t - anchor1)
            )
        else:
            seg = m.segment2
            values.append(
                seg.anchor_value
                + seg.slope * (level - base2)
                + seg.trend * (t - m.break_year)
            )
    return AnnualSeries(first_year, tuple(values), Unit.PERCENT)


def predict_change(
    m: SegmentedModel,
    g: AnnualSeries,
    first_year: int | None = None,
    last_year: int | None = None,
) -> AnnualSeries:
    """Predicted annual change of the rate: the first difference of the levels.

    Within a segment this equals trend + slope * dlnG_{t-lag}; across the
    break it reflects the chained re-anchoring, exactly as the level path does.
    """
    return diff(predict_level(m, g, first_year, last_year))


def growth_threshold(seg: Segment) -> float:
    """GDP growth rate (pp per year) at which the predicted rate change is zero.

    Above -trend/slope the rate falls for unemployment-type fits (trend > 0,
    slope < 0) and rises for employment-type fits (trend < 0, slope > 0).
    """
    if seg.slope == 0.0:
        raise DegenerateModelError("growth threshold undefined for zero slope")
    return -seg.trend / seg.slope


def trend_components(
    m: SegmentedModel,
    g: AnnualSeries,
    first_year: int | None = None,
    last_year: int | None = None,
) -> tuple[AnnualSeries, AnnualSeries]:
    """Split the prediction into its time-trend and GDP components.

    Returns ``(trend_component, gdp_component)`` where the trend component
    accumulates the per-segment trends (piecewise linear, continuous at the
    break) and the GDP component is defined as trend minus prediction, so
    ``trend - gdp == predicted`` holds exactly at every year.  For a single
    regime this reduces to a*(t - t0) and -b*ln-ratio - anchor.
    """
    predicted = predict_level(m, g, first_year, last_year)
    anchor1 = m.segment1.anchor_year
    trend_at_break = m.segment1.trend * (m.break_year - anchor1)
    trend_values = []
    for t in predicted.years():
        if t < m.break_year:
            trend_values.append(m.segment1.trend * (t - anchor1))
        else:
            trend_values.append(trend_at_break + m.segment2.trend * (t - m.break_year))
    trend = AnnualSeries(predicted.start_year, tuple(trend_values), Unit.PERCENT)
    gdp = AnnualSeries(
        predicted.start_year,
        tuple(tv - pv for tv, pv in zip(trend.values, predicted.values)),
        Unit.PERCENT,
    )
    return trend, gdp
