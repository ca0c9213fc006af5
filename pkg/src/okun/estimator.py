"""Least-squares estimation of the two-segment level model.

Fitting works on levels, not first differences: each segment is an
anchored regression (no free intercept) of the measured rate on the
cumulative log-GDP regressor and a linear time trend, and the break year
and predictor lag are chosen by exhaustive grid search on the total sum of
squared level errors.  Segment 2 is chained to segment 1 through the
predicted value at the break, so the search has exactly four free
coefficients for any candidate break.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    AlignmentError,
    ConfigError,
    DataError,
    DegenerateStatisticsError,
    RankDeficiencyError,
)
from .ingest import CountryDataset, RateKind
from .model import Segment, SegmentedModel, Target, predict_level
from .series import AnnualSeries, align, diff

# Relative tolerance on the scaled determinant of the 2x2 normal equations.
DETERMINANT_TOL = 1e-12

N_COEFFICIENTS = 4  # two per segment; anchors are data or derived, not fitted


class CoefficientSignWarning(UserWarning):
    """Fitted slope contradicts the expected sign for the target rate."""


@dataclass(frozen=True)
class FitConfig:
    """Grid-search settings for :func:`fit_model`."""

    target: Target
    break_from: int = 1975
    break_to: int = 1995
    lag_candidates: tuple[int, ...] = (0, 1)
    min_segment_obs: int = 5

    def __post_init__(self):
        object.__setattr__(self, "lag_candidates", tuple(sorted(set(self.lag_candidates))))
        object.__setattr__(self, "target", Target(self.target))
        if self.break_from > self.break_to:
            raise ConfigError(
                f"empty break grid {self.break_from}-{self.break_to}"
            )
        if not self.lag_candidates:
            raise ConfigError("lag_candidates must not be empty")
        if any(k < 0 for k in self.lag_candidates):
            raise ConfigError(f"lags must be non-negative, got {self.lag_candidates}")
        if self.min_segment_obs < 3:
            raise ConfigError(
                f"min_segment_obs must be at least 3 (two coefficients per "
                f"segment need residual dof), got {self.min_segment_obs}"
            )


@dataclass(frozen=True)
class FitReport:
    """Winning model plus diagnostics of the grid search."""

    model: SegmentedModel
    r_squared: float
    std_error: float
    residuals: AnnualSeries
    sse_by_break: dict[int, float]
    n_obs: int
    window: tuple[int, int]


def _solve_anchored(x1: np.ndarray, x2: np.ndarray, r: np.ndarray) -> tuple[float, float]:
    """Closed-form 2x2 normal equations for a no-intercept regression."""
    s11 = float(x1 @ x1)
    s12 = float(x1 @ x2)
    s22 = float(x2 @ x2)
    det = s11 * s22 - s12 * s12
    scale = s11 * s22
    if scale <= 0.0 or det <= DETERMINANT_TOL * scale:
        raise RankDeficiencyError(
            "normal equations singular: regressors are collinear or constant"
        )
    b1 = float(x1 @ r)
    b2 = float(x2 @ r)
    slope = (s22 * b1 - s12 * b2) / det
    trend = (s11 * b2 - s12 * b1) / det
    return slope, trend


def fit_segment(
    y: AnnualSeries,
    g: AnnualSeries,
    anchor_year: int,
    anchor_value: float,
    lag: int,
    window: tuple[int, int],
    min_obs: int = 3,
) -> Segment:
    """Fit one segment through its anchor.

    Regresses ``y_t - anchor_value`` on ``100*ln(G_{t-lag}/G_{anchor-lag})``
    and ``t - anchor_year`` over the inclusive ``window`` (which should
    exclude the anchor year itself; an anchor row is identically zero and
    carries no information).
    """
    first, last = window
    if first > last:
        raise DataError(f"empty fit window {first}-{last}")
    years = np.arange(first, last + 1)
    if not (y.has_year(first) and y.has_year(last)):
        raise AlignmentError(
            f"target series {y.start_year}-{y.end_year} does not cover window {first}-{last}"
        )
    for needed in (first - lag, last - lag, anchor_year - lag):
        if not g.has_year(needed):
            raise AlignmentError(
                f"GDP series {g.start_year}-{g.end_year} does not cover year "
                f"{needed} (lag {lag})"
            )
    if len(years) < min_obs:
        raise DataError(
            f"window {first}-{last} has {len(years)} observations; "
            f"at least {min_obs} required"
        )
    g_vals = np.asarray(g.values)
    log_levels = 100.0 * np.log(
        g_vals[first - lag - g.start_year : last - lag - g.start_year + 1]
    )
    base = 100.0 * np.log(g.at(anchor_year - lag))
    y_vals = np.asarray(y.values[first - y.start_year : last - y.start_year + 1])
    x1 = log_levels - base
    x2 = (years - anchor_year).astype(float)
    slope, trend = _solve_anchored(x1, x2, y_vals - anchor_value)
    return Segment(slope=slope, trend=trend, anchor_year=anchor_year, anchor_value=anchor_value)


def fit_stats(
    measured: AnnualSeries,
    predicted: AnnualSeries,
    n_params: int,
) -> tuple[float, float, AnnualSeries]:
    """R-squared, residual standard error and the residual series.

    R^2 is computed about the mean of the measured series; the standard
    error uses ``n - n_params`` degrees of freedom.
    """
    if measured.start_year != predicted.start_year or len(measured) != len(predicted):
        raise AlignmentError(
            f"measured ({measured.start_year}, n={len(measured)}) and predicted "
            f"({predicted.start_year}, n={len(predicted)}) are not aligned"
        )
    n = len(measured)
    if n <= n_params:
        raise DataError(f"need more than {n_params} observations, got {n}")
    mv = np.asarray(measured.values)
    pv = np.asarray(predicted.values)
    resid = mv - pv
    sse = float(resid @ resid)
    centered = mv - mv.mean()
    sst = float(centered @ centered)
    if sst == 0.0:
        raise DegenerateStatisticsError("measured series has zero variance")
    r_squared = 1.0 - sse / sst
    std_error = float(np.sqrt(sse / (n - n_params)))
    residuals = AnnualSeries(measured.start_year, tuple(resid), measured.unit)
    return r_squared, std_error, residuals


def okun_correlation(e: AnnualSeries, u: AnnualSeries) -> tuple[float, float]:
    """Regress annual unemployment changes on the negated employment changes.

    Free-intercept simple regression of du on -de; returns (slope, R^2).
    A slope near one with high R^2 is the empirical motivation for modeling
    the employment rate the same way as unemployment.
    """
    try:
        du, de = align(diff(u), diff(e))
    except AlignmentError as exc:
        raise DataError(str(exc)) from None
    n = len(du)
    if n < 3:
        raise DataError(f"need at least 3 overlapping annual changes, got {n}")
    yv = np.asarray(du.values)
    xv = -np.asarray(de.values)
    xc = xv - xv.mean()
    yc = yv - yv.mean()
    sxx = float(xc @ xc)
    syy = float(yc @ yc)
    if sxx == 0.0 or syy == 0.0:
        raise DegenerateStatisticsError("zero variance in annual changes")
    sxy = float(xc @ yc)
    slope = sxy / sxx
    r_squared = sxy * sxy / (sxx * syy)
    return slope, r_squared


@dataclass
class _Candidate:
    sse: float
    break_year: int
    lag: int
    segment1: Segment
    segment2: Segment


def _expected_sign(target: Target) -> float:
    return -1.0 if target is Target.UNEMPLOYMENT else 1.0


def fit_model(data: CountryDataset, cfg: FitConfig) -> FitReport:
    """Exhaustive (break year, lag) grid search minimizing level-domain SSE.

    For each candidate, segment 1 is anchored at the first measured year,
    segment 2 at the segment-1 prediction for the break year; the candidate
    score is the SSE of predicted versus measured levels over the whole
    window.  All lag candidates are scored over the common window so their
    SSEs are comparable.  Ties break toward the earlier year, then the
    smaller lag.
    """
    y = data.rate(RateKind(cfg.target.value))
    g = data.gdp_per_capita
    max_lag = max(cfg.lag_candidates)
    min_lag = min(cfg.lag_candidates)
    first = max(y.start_year, g.start_year + max_lag)
    last = min(y.end_year, g.end_year + min_lag)
    if last - first + 1 < 2 * cfg.min_segment_obs + 2:
        raise DataError(
            f"usable window {first}-{last} too short for two segments of "
            f"{cfg.min_segment_obs} observations"
        )
    n = last - first + 1
    years = np.arange(first, last + 1)
    y_vals = np.asarray(y.values[first - y.start_year : last - y.start_year + 1])
    g_vals = np.asarray(g.values)
    log_by_lag = {
        k: 100.0 * np.log(g_vals[first - k - g.start_year : last - k - g.start_year + 1])
        for k in cfg.lag_candidates
    }

    failures: list[str] = []
    sse_by_break: dict[int, float] = {}
    best: _Candidate | None = None
    for ts in range(cfg.break_from, cfg.break_to + 1):
        n1 = ts - first - 1  # regression rows before the break (anchor excluded)
        n2 = last - ts       # regression rows after the break year
        if n1 < cfg.min_segment_obs or n2 < cfg.min_segment_obs:
            failures.append(
                f"break {ts}: segment sizes {max(n1, 0)}/{max(n2, 0)} below "
                f"min_segment_obs={cfg.min_segment_obs}"
            )
            continue
        i = ts - first
        for k in cfg.lag_candidates:
            logs = log_by_lag[k]
            try:
                slope1, trend1 = _solve_anchored(
                    logs[1:i] - logs[0],
                    (years[1:i] - first).astype(float),
                    y_vals[1:i] - y_vals[0],
                )
                anchor2 = (
                    y_vals[0]
                    + slope1 * (logs[i] - logs[0])
                    + trend1 * (ts - first)
                )
                slope2, trend2 = _solve_anchored(
                    logs[i + 1 :] - logs[i],
                    (years[i + 1 :] - ts).astype(float),
                    y_vals[i + 1 :] - anchor2,
                )
            except RankDeficiencyError as exc:
                failures.append(f"break {ts}, lag {k}: {exc}")
                continue
            predicted = np.empty(n)
            predicted[:i] = (
                y_vals[0] + slope1 * (logs[:i] - logs[0]) + trend1 * (years[:i] - first)
            )
            predicted[i:] = (
                anchor2 + slope2 * (logs[i:] - logs[i]) + trend2 * (years[i:] - ts)
            )
            resid = y_vals - predicted
            sse = float(resid @ resid)
            if ts not in sse_by_break or sse < sse_by_break[ts]:
                sse_by_break[ts] = sse
            candidate = _Candidate(
                sse=sse,
                break_year=ts,
                lag=k,
                segment1=Segment(slope1, trend1, first, float(y_vals[0])),
                segment2=Segment(slope2, trend2, ts, float(anchor2)),
            )
            if best is None or (sse, ts, k) < (best.sse, best.break_year, best.lag):
                best = candidate

    if best is None:
        detail = "; ".join(failures) if failures else "empty grid"
        raise ConfigError(f"no admissible break-year candidate: {detail}")

    model = SegmentedModel(
        target=cfg.target,
        lag=best.lag,
        break_year=best.break_year,
        segment1=best.segment1,
        segment2=best.segment2,
    )
    expected = _expected_sign(cfg.target)
    for label, seg in (("segment 1", model.segment1), ("segment 2", model.segment2)):
        if seg.slope * expected < 0:
            warnings.warn(
                f"{label} slope {seg.slope:.4g} has unexpected sign for "
                f"{cfg.target.value} target",
                CoefficientSignWarning,
                stacklevel=2,
            )

    measured = y.window(first, last)
    predicted_series = predict_level(model, g, first, last)
    r_squared, std_error, residuals = fit_stats(measured, predicted_series, N_COEFFICIENTS)
    return FitReport(
        model=model,
        r_squared=r_squared,
        std_error=std_error,
        residuals=residuals,
        sse_by_break=dict(sorted(sse_by_break.items())),
        n_obs=n,
        window=(first, last),
    )
