"""Piecewise integral Okun's-law models.

Estimates two-segment level models linking employment/unemployment rates to
the logarithm of real GDP per capita, with structural-break search, fit
diagnostics, growth thresholds, and long-horizon projections under
parametric GDP growth scenarios.
"""

__version__ = "0.1.0"

from .errors import OkunError
from .estimator import FitConfig, FitReport, fit_model, fit_segment, fit_stats, okun_correlation
from .ingest import (
    CountryDataset,
    LevelShift,
    RateKind,
    apply_level_shift,
    build_dataset,
    normalize_unit,
    parse_series_csv,
)
from .model import (
    Segment,
    SegmentedModel,
    Target,
    growth_threshold,
    predict_change,
    predict_level,
    trend_components,
)
from .projector import (
    GrowthRule,
    GrowthScenario,
    ProjectionResult,
    counterfactual_trend,
    gdp_path,
    implied_growth_rate,
    project_rate,
)
from .series import AnnualSeries, Unit, align, cumsum, diff, lag, log_growth

__all__ = [
    "AnnualSeries",
    "CountryDataset",
    "FitConfig",
    "FitReport",
    "GrowthRule",
    "GrowthScenario",
    "LevelShift",
    "OkunError",
    "ProjectionResult",
    "RateKind",
    "Segment",
    "SegmentedModel",
    "Target",
    "Unit",
    "align",
    "apply_level_shift",
    "build_dataset",
    "counterfactual_trend",
    "cumsum",
    "diff",
    "fit_model",
    "fit_segment",
    "fit_stats",
    "gdp_path",
    "growth_threshold",
    "implied_growth_rate",
    "lag",
    "log_growth",
    "normalize_unit",
    "okun_correlation",
    "parse_series_csv",
    "predict_change",
    "predict_level",
    "project_rate",
    "trend_components",
]
