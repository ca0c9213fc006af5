"""Synthetic data generation shared by estimator and acceptance tests.

The generator is the oracle: datasets are simulated from a known chained
two-segment model, so recovery can be judged against the exact truth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from okun import AnnualSeries, CountryDataset, Segment, SegmentedModel, Target, Unit, build_dataset

BREAK_GRID = (1975, 1995)
SLOPE_RANGE = (0.02, 0.50)
TREND_RANGE = (-1.11, 1.11)


@dataclass(frozen=True)
class Truth:
    slope1: float
    trend1: float
    slope2: float
    trend2: float
    break_year: int
    anchor_value: float


def wiggly_gdp(
    rng: np.random.Generator,
    start_year: int = 1950,
    n_years: int = 61,
    g0: float = 20000.0,
    mean_growth: float = 2.0,
    sigma: float = 2.0,
) -> AnnualSeries:
    increments = mean_growth + sigma * rng.standard_normal(n_years - 1)
    log_level = np.concatenate([[0.0], np.cumsum(increments)])
    return AnnualSeries(start_year, tuple(g0 * np.exp(log_level / 100.0)), Unit.CURRENCY)


def chained_levels(
    g: AnnualSeries,
    truth: Truth,
    anchor_year: int,
    last_year: int,
    lag: int = 0,
) -> np.ndarray:
    level = {
        t: 100.0 * math.log(g.at(t - lag)) for t in range(anchor_year, last_year + 1)
    }
    base = level[anchor_year]
    out = []
    for t in range(anchor_year, truth.break_year):
        out.append(
            truth.anchor_value
            + truth.slope1 * (level[t] - base)
            + truth.trend1 * (t - anchor_year)
        )
    anchor2 = (
        truth.anchor_value
        + truth.slope1 * (level[truth.break_year] - base)
        + truth.trend1 * (truth.break_year - anchor_year)
    )
    for t in range(truth.break_year, last_year + 1):
        out.append(
            anchor2
            + truth.slope2 * (level[t] - level[truth.break_year])
            + truth.trend2 * (t - truth.break_year)
        )
    return np.asarray(out)


def draw_truth(rng: np.random.Generator) -> Truth:
    """Draw identifiable parameters from the documented coefficient ranges.

    Redraws until the two segments differ enough to pin the break down
    (identical regimes have no break to find) and until the noise-free path
    stays inside the feasible [1, 99] rate band.
    """
    while True:
        slope1, slope2 = rng.uniform(*SLOPE_RANGE, size=2)
        trend1, trend2 = rng.uniform(*TREND_RANGE, size=2)
        if abs(slope1 - slope2) < 0.05 and abs(trend1 - trend2) < 0.15:
            continue
        break_year = int(rng.integers(BREAK_GRID[0], BREAK_GRID[1] + 1))
        return Truth(slope1, trend1, slope2, trend2, break_year, anchor_value=50.0)


def simulate_dataset(
    rng: np.random.Generator,
    noise_sigma: float = 0.2,
    lag: int = 0,
) -> tuple[CountryDataset, Truth]:
    """A 60-observation employment dataset drawn from a known model."""
    while True:
        g = wiggly_gdp(rng)
        truth = draw_truth(rng)
        path = chained_levels(g, truth, 1951, 2010, lag=lag)
        if path.min() > 1.0 and path.max() < 99.0:
            break
    values = path + noise_sigma * rng.standard_normal(path.size) if noise_sigma else path
    if values.min() <= 0.0 or values.max() >= 100.0:
        values = np.clip(values, 0.05, 99.95)
    rate = AnnualSeries(1951, tuple(values), Unit.PERCENT)
    data = build_dataset("synthetic", g, employment_rate=rate)
    return data, truth


def truth_model(truth: Truth, g: AnnualSeries, anchor_year: int = 1951, lag: int = 0) -> SegmentedModel:
    level = lambda t: 100.0 * math.log(g.at(t - lag))  # noqa: E731
    anchor2 = (
        truth.anchor_value
        + truth.slope1 * (level(truth.break_year) - level(anchor_year))
        + truth.trend1 * (truth.break_year - anchor_year)
    )
    return SegmentedModel(
        target=Target.EMPLOYMENT,
        lag=lag,
        break_year=truth.break_year,
        segment1=Segment(truth.slope1, truth.trend1, anchor_year, truth.anchor_value),
        segment2=Segment(truth.slope2, truth.trend2, truth.break_year, anchor2),
    )
