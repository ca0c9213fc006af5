"""Parametric GDP scenarios and long-horizon rate projections.

Two growth rules are supported: a constant annual increment (the inertial
long-run regime, whose relative growth rate C/G decays as the level grows)
and a constant exponential rate.  A projection splices the scenario path
onto the historical GDP series and extends the fitted model's post-break
segment; no future structural breaks are modeled.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import AlignmentError, DomainError
from .ingest import CountryDataset, RateKind
from .model import SegmentedModel, predict_level
from .series import AnnualSeries, Unit, log_growth

SPLICE_REL_TOL = 1e-9


class GrowthRule(str, Enum):
    CONSTANT_INCREMENT = "constant_increment"
    EXPONENTIAL = "exponential"


@dataclass(frozen=True)
class GrowthScenario:
    """Deterministic GDP-per-capita path rule from a start point to a horizon.

    ``increment`` (currency per year) applies to the constant-increment rule,
    ``rate`` (per-year log rate) to the exponential rule.  A horizon equal to
    the start year yields the degenerate single-point path.
    """

    rule: GrowthRule
    start_year: int
    start_value: float
    horizon_year: int
    increment: float | None = None
    rate: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "rule", GrowthRule(self.rule))
        if self.horizon_year < self.start_year:
            raise DomainError(
                f"horizon {self.horizon_year} precedes start year {self.start_year}"
            )
        if self.start_value <= 0.0:
            raise DomainError(f"start value must be positive, got {self.start_value}")
        if self.rule is GrowthRule.CONSTANT_INCREMENT and self.increment is None:
            raise DomainError("constant_increment scenario requires an increment")
        if self.rule is GrowthRule.EXPONENTIAL and self.rate is None:
            raise DomainError("exponential scenario requires a rate")


@dataclass(frozen=True)
class ProjectionResult:
    """Projected rate path with its GDP path and per-year clipping flags."""

    rates: AnnualSeries
    gdp: AnnualSeries
    clipped: tuple[bool, ...]

    @property
    def clipped_any(self) -> bool:
        return any(self.clipped)


def gdp_path(s: GrowthScenario) -> AnnualSeries:
    """Evaluate the scenario rule year by year, start through horizon inclusive."""
    steps = range(s.horizon_year - s.start_year + 1)
    if s.rule is GrowthRule.CONSTANT_INCREMENT:
        values = tuple(s.start_value + s.increment * k for k in steps)
        bad = next((k for k, v in enumerate(values) if v <= 0.0), None)
        if bad is not None:
            raise DomainError(
                f"constant-increment path becomes non-positive in {s.start_year + bad}"
            )
    else:
        values = tuple(s.start_value * math.exp(s.rate * k) for k in steps)
    return AnnualSeries(s.start_year, values, Unit.CURRENCY)


def implied_growth_rate(path: AnnualSeries) -> AnnualSeries:
    """Relative growth rate of a GDP path, percent per year.

    For a constant-increment path this tracks 100*C/G and decays toward zero
    as the level accumulates; for an exponential path it is constant.
    """
    return log_growth(path)


def _splice(history: AnnualSeries, scenario: GrowthScenario) -> AnnualSeries:
    if scenario.start_year != history.end_year:
        raise AlignmentError(
            f"scenario starts in {scenario.start_year} but history ends in "
            f"{history.end_year}"
        )
    last = history.at(history.end_year)
    if abs(scenario.start_value - last) > SPLICE_REL_TOL * abs(last):
        raise AlignmentError(
            f"scenario start value {scenario.start_value} does not match final "
            f"historical GDP {last}"
        )
    future = gdp_path(scenario)
    return AnnualSeries(
        history.start_year, history.values + future.values[1:], Unit.CURRENCY
    )


def project_rate(
    m: SegmentedModel,
    history: CountryDataset,
    s: GrowthScenario,
) -> ProjectionResult:
    """Extend the fitted model through the scenario horizon.

    The scenario must splice exactly onto the end of the historical GDP
    series (same year, same value).  Output is clipped to [0, 100] with a
    per-year flag instead of failing: implausible projections are reported,
    impossible rates are not emitted.
    """
    combined = _splice(history.gdp_per_capita, s)
    raw = predict_level(m, combined, s.start_year, s.horizon_year)
    clipped_flags = tuple(v < 0.0 or v > 100.0 for v in raw.values)
    values = tuple(min(max(v, 0.0), 100.0) for v in raw.values)
    rates = AnnualSeries(raw.start_year, values, Unit.PERCENT)
    return ProjectionResult(rates=rates, gdp=gdp_path(s), clipped=clipped_flags)


def counterfactual_trend(m: SegmentedModel, history: CountryDataset) -> AnnualSeries:
    """Post-break prediction with the pre-break time trend extended.

    Keeps the post-break GDP slope but substitutes the segment-1 trend, for
    comparing what the rate path would have been without the trend shift.
    The gap versus the actual prediction is (trend1 - trend2)*(t - break).
    """
    target = history.rate(RateKind(m.target.value))
    g = history.gdp_per_capita
    last = min(target.end_year, g.end_year + m.lag)
    if last < m.break_year:
        raise AlignmentError(
            f"no post-break years: window ends {last}, break {m.break_year}"
        )
    actual = predict_level(m, g, m.break_year, last)
    shift = m.segment1.trend - m.segment2.trend
    values = tuple(
        v + shift * (t - m.break_year) for t, v in actual.items()
    )
    return AnnualSeries(actual.start_year, values, Unit.PERCENT)
