"""Run manifests: a JSON document naming data files, units and run settings.

The manifest is client-side plumbing: it maps country names to CSV paths
(relative to the manifest's own directory), declares units and level-shift
adjustments, and carries default fit settings plus named growth scenarios.
Loading produces the wire payloads the service consumes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError
from .ingest import parse_series_csv
from .schemas import (
    DatasetPayload,
    FitConfigPayload,
    LevelShiftPayload,
    ScenarioPayload,
    SeriesPayload,
)
from .series import Unit

_RATE_KEYS = ("employment_rate", "unemployment_rate")


@dataclass(frozen=True)
class RunManifest:
    path: Path
    countries: dict
    fit: dict
    scenarios: dict[str, dict]
    output_dir: str

    @property
    def base_dir(self) -> Path:
        return self.path.parent


def load_manifest(path: str | Path) -> RunManifest:
    path = Path(path)
    if not path.is_file():
        raise ConfigError(f"manifest not found: {path}")
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"manifest {path} is not valid JSON: {exc}") from None
    countries = raw.get("countries")
    if not isinstance(countries, dict) or not countries:
        raise ConfigError(f"manifest {path} must define a non-empty 'countries' map")
    scenarios = {}
    for entry in raw.get("scenarios", []):
        name = entry.get("name")
        if not name:
            raise ConfigError(f"manifest {path}: scenario without a name")
        if name in scenarios:
            raise ConfigError(f"manifest {path}: duplicate scenario {name!r}")
        scenarios[name] = entry
    return RunManifest(
        path=path,
        countries=countries,
        fit=raw.get("fit", {}),
        scenarios=scenarios,
        output_dir=raw.get("output_dir", "."),
    )


def _load_series(manifest: RunManifest, country: str, key: str, entry: dict) -> SeriesPayload:
    if "path" not in entry:
        raise ConfigError(f"{country}.{key}: missing 'path'")
    path = manifest.base_dir / entry["path"]
    if not path.is_file():
        raise ConfigError(f"{country}.{key}: missing data file: {path}")
    unit_name = entry.get("unit", Unit.PERCENT.value)
    try:
        unit = Unit(unit_name)
    except ValueError:
        raise ConfigError(f"{country}.{key}: unknown unit {unit_name!r}") from None
    series = parse_series_csv(path.read_bytes(), unit)
    return SeriesPayload.from_series(series)


def dataset_payload(manifest: RunManifest, country: str) -> DatasetPayload:
    """Read a country's CSV files into the inline wire payload."""
    if country not in manifest.countries:
        known = ", ".join(sorted(manifest.countries))
        raise ConfigError(f"unknown country {country!r}; manifest defines: {known}")
    entry = manifest.countries[country]
    if "gdp_per_capita" not in entry:
        raise ConfigError(f"{country}: manifest entry lacks 'gdp_per_capita'")
    gdp_entry = entry["gdp_per_capita"]
    gdp = _load_series(manifest, country, "gdp_per_capita", gdp_entry)
    rates = {
        key: _load_series(manifest, country, key, entry[key])
        for key in _RATE_KEYS
        if key in entry
    }
    if not rates:
        raise ConfigError(
            f"{country}: manifest entry needs employment_rate or unemployment_rate"
        )
    shifts = [LevelShiftPayload(**s) for s in entry.get("level_shifts", [])]
    return DatasetPayload(
        country=country,
        gdp_per_capita=gdp,
        employment_rate=rates.get("employment_rate"),
        unemployment_rate=rates.get("unemployment_rate"),
        level_shifts=shifts,
        gdp_variant=gdp_entry.get("variant"),
    )


def fit_config_payload(
    manifest: RunManifest,
    target: str | None = None,
    break_from: int | None = None,
    break_to: int | None = None,
    lags: tuple[int, ...] | None = None,
) -> FitConfigPayload:
    """Merge manifest fit defaults with command-line overrides."""
    fit = manifest.fit
    target = target or fit.get("target")
    if target is None:
        raise ConfigError("no fit target: pass --target or set fit.target in the manifest")
    return FitConfigPayload(
        target=target,
        break_from=break_from if break_from is not None else fit.get("break_from", 1975),
        break_to=break_to if break_to is not None else fit.get("break_to", 1995),
        lags=list(lags) if lags is not None else list(fit.get("lags", [0, 1])),
        min_segment_obs=fit.get("min_segment_obs", 5),
    )


def scenario_payload(
    manifest: RunManifest, name: str, horizon_year: int | None = None
) -> ScenarioPayload:
    if name not in manifest.scenarios:
        known = ", ".join(sorted(manifest.scenarios)) or "(none)"
        raise ConfigError(f"unknown scenario {name!r}; manifest defines: {known}")
    entry = dict(manifest.scenarios[name])
    if horizon_year is not None:
        entry["horizon_year"] = horizon_year
    if "horizon_year" not in entry:
        raise ConfigError(f"scenario {name!r}: no horizon_year (set it or pass --horizon)")
    return ScenarioPayload(**entry)


def all_scenarios(manifest: RunManifest) -> list[ScenarioPayload]:
    return [scenario_payload(manifest, name) for name in sorted(manifest.scenarios)]
