"""Deterministic report payloads and plot-data renderers.

Everything emitted is reproducible byte for byte: floats are written with
six significant digits, JSON keys are sorted, rows are ordered by year and
columns by name.  Plot data goes out as tab-separated values; rendering to
images is deliberately left to external tools.
"""

from __future__ import annotations

import json
from typing import Iterable

from .errors import DegenerateModelError
from .estimator import FitReport
from .ingest import CountryDataset, RateKind, restore_level_shift
from .model import growth_threshold, predict_level, trend_components
from .projector import GrowthScenario, ProjectionResult, gdp_path
from .series import AnnualSeries, diff, log_growth

SCHEMA_VERSION = "1"

FIT_JSON_NAME = "{country}_{target}_fit.json"
PREDICTED_CSV_NAME = "{country}_{target}_predicted.csv"
PROJECTION_CSV_NAME = "{country}_{scenario}_projection.csv"
FIGURE_NAMES = (
    "du_vs_minus_de.tsv",
    "level_fit.tsv",
    "components.tsv",
    "gdp_paths.tsv",
    "growth_threshold.tsv",
)


def fmt(x: float) -> str:
    """Render a float with 6 significant digits (stable across platforms)."""
    return f"{float(x):.6g}"


def sig6(x: float) -> float:
    """Round to 6 significant digits for JSON payloads."""
    return float(fmt(x))


def _segment_payload(seg, lag: int) -> dict:
    try:
        threshold = sig6(growth_threshold(seg))
    except DegenerateModelError:
        threshold = None
    return {
        "anchor_year": seg.anchor_year,
        "anchor_value": sig6(seg.anchor_value),
        "slope": sig6(seg.slope),
        "trend": sig6(seg.trend),
        "growth_threshold": threshold,
        "lag": lag,
    }


def fit_report_payload(report: FitReport, data: CountryDataset) -> dict:
    """JSON-ready fit report; validates against data/fit_report.schema.json."""
    m = report.model
    return {
        "schema_version": SCHEMA_VERSION,
        "country": data.country,
        "target": m.target.value,
        "gdp_variant": data.gdp_variant,
        "window": {"first_year": report.window[0], "last_year": report.window[1]},
        "n_obs": report.n_obs,
        "lag": m.lag,
        "break_year": m.break_year,
        "segments": [_segment_payload(m.segment1, m.lag), _segment_payload(m.segment2, m.lag)],
        "r_squared": sig6(report.r_squared),
        "std_error": sig6(report.std_error),
        "sse_by_break": {str(year): sig6(sse) for year, sse in sorted(report.sse_by_break.items())},
        "adjustments": [
            {"series": a.series.value, "year": a.year, "magnitude": sig6(a.magnitude)}
            for a in data.adjustments
            if a.series.value == m.target.value
        ],
    }


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _rows(header: Iterable[str], rows: Iterable[Iterable[str]], sep: str) -> str:
    lines = [sep.join(header)]
    lines.extend(sep.join(row) for row in rows)
    return "\n".join(lines) + "\n"


def _display_rate(series: AnnualSeries, data: CountryDataset, kind: RateKind) -> AnnualSeries:
    """Re-apply declared level shifts so output matches the raw data scale."""
    out = series
    for shift in data.adjustments:
        if shift.series is kind and out.has_year(shift.year) and shift.year > out.start_year:
            out = restore_level_shift(out, shift)
    return out


def predicted_csv(report: FitReport, data: CountryDataset) -> str:
    """``year,measured,predicted,residual`` over the fit window (display scale)."""
    kind = RateKind(report.model.target.value)
    first, last = report.window
    measured = _display_rate(data.rate(kind).window(first, last), data, kind)
    predicted = _display_rate(
        predict_level(report.model, data.gdp_per_capita, first, last), data, kind
    )
    rows = (
        (str(t), fmt(mv), fmt(pv), fmt(rv))
        for (t, mv), pv, rv in zip(measured.items(), predicted.values, report.residuals.values)
    )
    return _rows(("year", "measured", "predicted", "residual"), rows, ",")


def projection_csv(result: ProjectionResult) -> str:
    """``year,gdp,projected_rate,clipped`` through the scenario horizon."""
    rows = (
        (str(t), fmt(g), fmt(r), "1" if c else "0")
        for (t, g), r, c in zip(result.gdp.items(), result.rates.values, result.clipped)
    )
    return _rows(("year", "gdp", "projected_rate", "clipped"), rows, ",")


def du_vs_minus_de_tsv(data: CountryDataset) -> str | None:
    """Annual unemployment change against the negated employment change."""
    if data.employment_rate is None or data.unemployment_rate is None:
        return None
    du = diff(data.unemployment_rate)
    de = diff(data.employment_rate)
    first = max(du.start_year, de.start_year)
    last = min(du.end_year, de.end_year)
    rows = (
        (str(t), fmt(du.at(t)), fmt(-de.at(t))) for t in range(first, last + 1)
    )
    return _rows(("year", "du", "minus_de"), rows, "\t")


def level_fit_tsv(report: FitReport, data: CountryDataset) -> str:
    """Measured versus predicted levels over the fit window (display scale)."""
    kind = RateKind(report.model.target.value)
    first, last = report.window
    measured = _display_rate(data.rate(kind).window(first, last), data, kind)
    predicted = _display_rate(
        predict_level(report.model, data.gdp_per_capita, first, last), data, kind
    )
    rows = (
        (str(t), fmt(mv), fmt(pv))
        for (t, mv), pv in zip(measured.items(), predicted.values)
    )
    return _rows(("year", "measured", "predicted"), rows, "\t")


def components_tsv(report: FitReport, data: CountryDataset) -> str:
    """Time-trend and GDP components; trend - gdp equals predicted on each row."""
    first, last = report.window
    trend, gdp = trend_components(report.model, data.gdp_per_capita, first, last)
    predicted = predict_level(report.model, data.gdp_per_capita, first, last)
    rows = (
        (str(t), fmt(tv), fmt(gv), fmt(pv))
        for (t, tv), gv, pv in zip(trend.items(), gdp.values, predicted.values)
    )
    return _rows(("year", "trend_component", "gdp_component", "predicted"), rows, "\t")


def gdp_paths_tsv(data: CountryDataset, scenarios: dict[str, GrowthScenario]) -> str:
    """Historical GDP with one column per scenario path, anchored at the splice."""
    history = data.gdp_per_capita
    names = sorted(scenarios)
    paths = {name: gdp_path(scenarios[name]) for name in names}
    last = max([history.end_year] + [p.end_year for p in paths.values()])
    rows = []
    for t in range(history.start_year, last + 1):
        row = [str(t), fmt(history.at(t)) if history.has_year(t) else ""]
        for name in names:
            p = paths[name]
            row.append(fmt(p.at(t)) if p.has_year(t) else "")
        rows.append(row)
    return _rows(["year", "measured"] + names, rows, "\t")


def growth_threshold_tsv(report: FitReport, data: CountryDataset) -> str:
    """Post-break GDP growth with the zero-change threshold and the mean rate."""
    m = report.model
    growth = log_growth(data.gdp_per_capita)
    first = max(m.break_year, growth.start_year)
    last = min(report.window[1], growth.end_year)
    window = growth.window(first, last)
    mean = sum(window.values) / len(window)
    threshold = growth_threshold(m.segment2)
    rows = (
        (str(t), fmt(v), fmt(threshold), fmt(mean)) for t, v in window.items()
    )
    return _rows(("year", "dlng", "threshold", "mean"), rows, "\t")


def figure_files(
    report: FitReport,
    data: CountryDataset,
    scenarios: dict[str, GrowthScenario],
) -> dict[str, str]:
    """All plot-data files for one country, keyed by file name."""
    files = {
        "level_fit.tsv": level_fit_tsv(report, data),
        "components.tsv": components_tsv(report, data),
        "gdp_paths.tsv": gdp_paths_tsv(data, scenarios),
        "growth_threshold.tsv": growth_threshold_tsv(report, data),
    }
    du_de = du_vs_minus_de_tsv(data)
    if du_de is not None:
        files["du_vs_minus_de.tsv"] = du_de
    return files
