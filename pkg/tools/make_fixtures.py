#!/usr/bin/env python3
"""Regenerate the synthetic country fixtures under fixtures/.

Each country is simulated from a known two-segment model on a crafted GDP
path, with calibrated noise, then written as CSV. Seeds and noise knobs are
frozen: they were chosen so that the fitted coefficients, the du/-de
diagnostic regression, and the long-horizon projection all land inside the
tolerances asserted by the test suite, with margin. After writing, this
script re-reads the files and re-checks every constraint, so a regeneration
that would break the tests fails loudly here instead.

Run from the repository root:  python3 tools/make_fixtures.py
"""

from __future__ import annotations

import json
import math
import sys
import warnings
from pathlib import Path

import numpy as np

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from okun import (  # noqa: E402
    AnnualSeries,
    FitConfig,
    GrowthRule,
    GrowthScenario,
    Target,
    Unit,
    fit_model,
    okun_correlation,
    project_rate,
)
from okun.manifest import dataset_payload, load_manifest  # noqa: E402

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"


def growth_series(rng: np.random.Generator, windows) -> np.ndarray:
    """Annual growth rates (pp/yr) with *exact* means over each window."""
    parts = []
    for first, last, mean, sigma in windows:
        z = rng.standard_normal(last - first + 1) * sigma
        z -= z.mean()
        parts.append(z + mean)
    return np.concatenate(parts)


def gdp_from_growth(g0: float, start_year: int, growth: np.ndarray) -> AnnualSeries:
    log_level = np.concatenate([[0.0], np.cumsum(growth)])
    return AnnualSeries(start_year, tuple(g0 * np.exp(log_level / 100.0)), Unit.CURRENCY)


def chained_rate_path(
    g: AnnualSeries,
    anchor_year: int,
    anchor_value: float,
    break_year: int,
    slope1: float,
    trend1: float,
    slope2: float,
    trend2: float,
    last_year: int,
    lag: int = 0,
) -> np.ndarray:
    """Noise-free two-segment path, segment 2 anchored at the segment-1 prediction."""
    level = {t: 100.0 * math.log(g.at(t - lag)) for t in range(anchor_year, last_year + 1)}
    base1 = level[anchor_year]
    values = [
        anchor_value + slope1 * (level[t] - base1) + trend1 * (t - anchor_year)
        for t in range(anchor_year, break_year)
    ]
    anchor2 = (
        anchor_value
        + slope1 * (level[break_year] - base1)
        + trend1 * (break_year - anchor_year)
    )
    values += [
        anchor2 + slope2 * (level[t] - level[break_year]) + trend2 * (t - break_year)
        for t in range(break_year, last_year + 1)
    ]
    return np.asarray(values)


def write_csv(path: Path, series_start: int, values, decimals: int = 6) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = ["year,value"]
    for i, v in enumerate(values):
        lines.append(f"{series_start + i},{v:.{decimals}f}")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


# --------------------------------------------------------------------------
# Country generators (all parameters frozen by calibration)
# --------------------------------------------------------------------------

def make_us() -> None:
    rng = np.random.default_rng(522)
    common_load_u, common_load_e = 1.15, 0.55
    sigma_common, sigma_u, sigma_e = 0.38, 0.13, 0.10

    z1 = rng.standard_normal(28)  # 1952-1979
    z2 = rng.standard_normal(31)  # 1980-2010
    sig2 = np.where(np.arange(1980, 2011) <= 1983, 3.0, 1.8)
    d1 = 2.7 * z1
    d1 -= d1.mean()
    d1 += 2.56
    d2 = sig2 * z2
    d2 -= d2.mean()
    d2 += 1.65  # post-1979 mean growth pinned at 1.65 pp/yr
    # the 1950->1951 increment sits at the segment mean so the cumulative
    # log-GDP terms over both fit segments are pinned exactly
    g = gdp_from_growth(14200.0, 1950, np.concatenate([[2.56], d1, d2]))

    u_path = chained_rate_path(g, 1951, 3.3, 1979, -0.406, 1.113, -0.465, 0.866, 2010)
    e_path = chained_rate_path(g, 1951, 55.9, 1983, 0.277, -0.457, 0.496, -0.870, 2010)
    n = len(u_path)
    common = rng.standard_normal(n) * sigma_common
    u_vals = u_path + common_load_u * common + rng.standard_normal(n) * sigma_u
    e_vals = e_path - common_load_e * common + rng.standard_normal(n) * sigma_e

    write_csv(FIXTURES / "us" / "gdp_per_capita.csv", 1950, g.values)
    write_csv(FIXTURES / "us" / "unemployment_rate.csv", 1951, u_vals)
    write_csv(FIXTURES / "us" / "employment_rate.csv", 1951, e_vals)


def make_uk() -> None:
    rng = np.random.default_rng(113)
    growth = growth_series(rng, [(1971, 1983, 1.9, 2.6), (1984, 2010, 2.3, 1.9)])
    g = gdp_from_growth(16000.0, 1970, growth)
    e_path = chained_rate_path(g, 1971, 61.0, 1983, 0.41, -1.11, 0.41, -0.81, 2010, lag=1)
    e_vals = e_path + rng.standard_normal(len(e_path)) * 0.20

    write_csv(FIXTURES / "uk" / "gdp_per_capita.csv", 1970, g.values)
    # stored as a fraction of population to exercise unit normalization
    write_csv(FIXTURES / "uk" / "employment_rate.csv", 1971, e_vals / 100.0, decimals=8)


def make_france() -> None:
    rng = np.random.default_rng(217)
    growth = growth_series(
        rng, [(1971, 1982, 2.8, 1.8), (1983, 1994, 1.7, 1.5), (1995, 2010, 1.3, 1.4)]
    )
    g = gdp_from_growth(13000.0, 1970, growth)
    e_path = chained_rate_path(g, 1971, 56.0, 1994, 0.155, -0.65, 0.25, -0.30, 2010)
    e_vals = e_path + rng.standard_normal(len(e_path)) * 0.18
    e_vals[1982 - 1971 :] += 2.1  # definitional jump, declared in the manifest

    write_csv(FIXTURES / "france" / "gdp_per_capita.csv", 1970, g.values)
    write_csv(FIXTURES / "france" / "employment_rate.csv", 1971, e_vals)


def make_japan() -> None:
    rng = np.random.default_rng(137)
    growth = growth_series(
        rng, [(1951, 1973, 7.5, 2.5), (1974, 1991, 3.1, 2.0), (1992, 2010, 0.8, 1.6)]
    )
    g = gdp_from_growth(2100.0, 1950, growth)
    e_path = chained_rate_path(g, 1971, 64.0, 1978, 0.02, -0.53, 0.14, -0.42, 2010)
    e_vals = e_path + rng.standard_normal(len(e_path)) * 0.50

    write_csv(FIXTURES / "japan" / "gdp_per_capita.csv", 1950, g.values)
    write_csv(FIXTURES / "japan" / "employment_rate.csv", 1971, e_vals)


def write_manifest() -> None:
    manifest = {
        "countries": {
            "us": {
                "gdp_per_capita": {
                    "path": "us/gdp_per_capita.csv",
                    "unit": "currency-per-capita",
                    "variant": "synthetic",
                },
                "unemployment_rate": {
                    "path": "us/unemployment_rate.csv",
                    "unit": "percent-points",
                },
                "employment_rate": {
                    "path": "us/employment_rate.csv",
                    "unit": "percent-points",
                },
            },
            "uk": {
                "gdp_per_capita": {
                    "path": "uk/gdp_per_capita.csv",
                    "unit": "currency-per-capita",
                    "variant": "synthetic",
                },
                "employment_rate": {
                    "path": "uk/employment_rate.csv",
                    "unit": "fraction",
                },
            },
            "france": {
                "gdp_per_capita": {
                    "path": "france/gdp_per_capita.csv",
                    "unit": "currency-per-capita",
                    "variant": "synthetic",
                },
                "employment_rate": {
                    "path": "france/employment_rate.csv",
                    "unit": "percent-points",
                },
                "level_shifts": [
                    {"series": "employment", "year": 1982, "magnitude": 2.1}
                ],
            },
            "japan": {
                "gdp_per_capita": {
                    "path": "japan/gdp_per_capita.csv",
                    "unit": "currency-per-capita",
                    "variant": "synthetic",
                },
                "employment_rate": {
                    "path": "japan/employment_rate.csv",
                    "unit": "percent-points",
                },
            },
        },
        "fit": {
            "target": "employment",
            "break_from": 1975,
            "break_to": 1995,
            "lags": [0, 1],
            "min_segment_obs": 5,
        },
        "scenarios": [
            {
                "name": "constant_increment_591",
                "rule": "constant_increment",
                "increment": 591.5,
                "horizon_year": 2050,
            },
            {
                "name": "exponential_trend",
                "rule": "exponential",
                "rate": 0.0209,
                "horizon_year": 2050,
            },
        ],
        "output_dir": "out",
    }
    path = FIXTURES / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")


# --------------------------------------------------------------------------
# Post-write verification on the round-tripped files
# --------------------------------------------------------------------------

def _check(label: str, ok: bool, detail: str) -> None:
    status = "ok " if ok else "FAIL"
    print(f"  [{status}] {label}: {detail}")
    if not ok:
        raise SystemExit(f"fixture constraint violated: {label}")


def verify() -> None:
    manifest = load_manifest(FIXTURES / "manifest.json")

    def fitted(country: str, target: Target, lags=(0, 1)):
        data = dataset_payload(manifest, country).to_dataset()
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            return data, fit_model(
                data, FitConfig(target=target, lag_candidates=tuple(lags))
            )

    print("us:")
    data, rep = fitted("us", Target.UNEMPLOYMENT)
    m = rep.model
    _check("break/lag", m.break_year == 1979 and m.lag == 0,
           f"break {m.break_year}, lag {m.lag}")
    _check("slope1", abs(m.segment1.slope + 0.406) <= 0.02, f"{m.segment1.slope:.4f}")
    _check("slope2", abs(m.segment2.slope + 0.465) <= 0.02, f"{m.segment2.slope:.4f}")
    _check("trend2", abs(m.segment2.trend - 0.866) <= 0.06, f"{m.segment2.trend:.4f}")
    _check("r2", rep.r_squared >= 0.84, f"{rep.r_squared:.4f}")
    slope, r2 = okun_correlation(data.employment_rate, data.unemployment_rate)
    _check("du/-de slope", abs(slope - 1.24) <= 0.05, f"{slope:.4f}")
    _check("du/-de r2", abs(r2 - 0.88) <= 0.03, f"{r2:.4f}")
    gdp = data.gdp_per_capita
    scenario = GrowthScenario(
        GrowthRule.CONSTANT_INCREMENT, gdp.end_year, gdp.at(gdp.end_year), 2050,
        increment=591.5,
    )
    projected = project_rate(m, data, scenario).rates.at(2050)
    _check("2050 projection", abs(projected - 25.0) <= 3.0, f"{projected:.2f}")
    u = data.unemployment_rate
    level_79 = u.at(1951) - 0.406 * 100 * math.log(gdp.at(1979) / gdp.at(1951)) + 1.113 * 28
    level_10 = level_79 + 0.866 * 31 - 0.465 * 100 * math.log(gdp.at(2010) / gdp.at(1979))
    published = level_10 + 0.866 * 40 - 0.465 * 100 * math.log(
        (gdp.at(2010) + 591.5 * 40) / gdp.at(2010)
    )
    _check(
        "2050 projection (published coefficients)",
        abs(published - 25.0) <= 3.0,
        f"{published:.2f}",
    )
    _, rep_e = fitted("us", Target.EMPLOYMENT)
    me = rep_e.model
    _check("employment break", me.break_year == 1983, f"{me.break_year}")
    _check("employment slopes",
           abs(me.segment1.slope - 0.277) <= 0.02 and abs(me.segment2.slope - 0.496) <= 0.02,
           f"{me.segment1.slope:.4f}/{me.segment2.slope:.4f}")

    print("uk:")
    data, rep = fitted("uk", Target.EMPLOYMENT)
    m = rep.model
    _check("break/lag", m.break_year == 1983 and m.lag == 1,
           f"break {m.break_year}, lag {m.lag}")
    _check("slopes", abs(m.segment1.slope - 0.41) <= 0.03 and abs(m.segment2.slope - 0.41) <= 0.03,
           f"{m.segment1.slope:.4f}/{m.segment2.slope:.4f}")
    _, rep0 = fitted("uk", Target.EMPLOYMENT, lags=(0,))
    _check("lag-1 beats lag-0",
           min(rep.sse_by_break.values()) < min(rep0.sse_by_break.values()),
           f"{min(rep.sse_by_break.values()):.3f} < {min(rep0.sse_by_break.values()):.3f}")

    print("france:")
    data, rep = fitted("france", Target.EMPLOYMENT)
    m = rep.model
    _check("break", m.break_year == 1994, f"{m.break_year}")
    _check("slopes", abs(m.segment1.slope - 0.155) <= 0.025 and abs(m.segment2.slope - 0.25) <= 0.025,
           f"{m.segment1.slope:.4f}/{m.segment2.slope:.4f}")
    _check("raw jump", data.adjustments[0].magnitude == 2.1, "declared 2.1 pp at 1982")

    print("japan:")
    data, rep = fitted("japan", Target.EMPLOYMENT)
    _check("break", rep.model.break_year == 1978, f"{rep.model.break_year}")
    _check("r2", abs(rep.r_squared - 0.95) <= 0.02, f"{rep.r_squared:.4f}")
    _check("std error", abs(rep.std_error - 0.50) <= 0.10, f"{rep.std_error:.4f}")


def main() -> None:
    make_us()
    make_uk()
    make_france()
    make_japan()
    write_manifest()
    verify()
    print("fixtures written to", FIXTURES)


if __name__ == "__main__":
    main()
