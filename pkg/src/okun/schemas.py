"""Pydantic request/response models for the HTTP service.

The wire format carries series inline (start year plus a contiguous value
list) so the service stays stateless; validation beyond shape checks is
done by the domain constructors, whose errors the service maps to 400s.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field

from .ingest import LevelShift, RateKind, build_dataset
from .projector import GrowthRule, GrowthScenario
from .series import AnnualSeries, Unit


class SeriesPayload(BaseModel):
    start_year: int
    values: list[float] = Field(min_length=1)
    unit: str = Unit.PERCENT.value

    def to_series(self) -> AnnualSeries:
        return AnnualSeries(self.start_year, tuple(self.values), Unit(self.unit))

    @classmethod
    def from_series(cls, s: AnnualSeries) -> "SeriesPayload":
        return cls(start_year=s.start_year, values=list(s.values), unit=s.unit.value)


class LevelShiftPayload(BaseModel):
    series: Literal["employment", "unemployment"]
    year: int
    magnitude: float

    def to_shift(self) -> LevelShift:
        return LevelShift(RateKind(self.series), self.year, self.magnitude)


class DatasetPayload(BaseModel):
    country: str
    gdp_per_capita: SeriesPayload
    employment_rate: Optional[SeriesPayload] = None
    unemployment_rate: Optional[SeriesPayload] = None
    level_shifts: list[LevelShiftPayload] = Field(default_factory=list)
    gdp_variant: Optional[str] = None

    def to_dataset(self):
        return build_dataset(
            country=self.country,
            gdp_per_capita=self.gdp_per_capita.to_series(),
            employment_rate=(
                self.employment_rate.to_series() if self.employment_rate else None
            ),
            unemployment_rate=(
                self.unemployment_rate.to_series() if self.unemployment_rate else None
            ),
            level_shifts=tuple(s.to_shift() for s in self.level_shifts),
            gdp_variant=self.gdp_variant,
        )


class FitConfigPayload(BaseModel):
    target: Literal["unemployment", "employment"]
    break_from: int = 1975
    break_to: int = 1995
    lags: list[int] = Field(default_factory=lambda: [0, 1])
    min_segment_obs: int = 5


class ScenarioPayload(BaseModel):
    """Growth rule without a start point; the splice comes from the data."""

    name: str
    rule: Literal["constant_increment", "exponential"]
    horizon_year: int
    increment: Optional[float] = None
    rate: Optional[float] = None

    def to_scenario(self, start_year: int, start_value: float) -> GrowthScenario:
        return GrowthScenario(
            rule=GrowthRule(self.rule),
            start_year=start_year,
            start_value=start_value,
            horizon_year=self.horizon_year,
            increment=self.increment,
            rate=self.rate,
        )


class FitRequest(BaseModel):
    dataset: DatasetPayload
    config: FitConfigPayload


class FitResponse(BaseModel):
    report: dict
    files: dict[str, str]


class ProjectRequest(BaseModel):
    dataset: DatasetPayload
    config: FitConfigPayload
    scenario: ScenarioPayload


class ProjectResponse(BaseModel):
    final_year: int
    final_rate: float
    clipped_any: bool
    files: dict[str, str]


class FiguresRequest(BaseModel):
    dataset: DatasetPayload
    config: FitConfigPayload
    scenarios: list[ScenarioPayload] = Field(default_factory=list)


class FiguresResponse(BaseModel):
    files: dict[str, str]


class HealthResponse(BaseModel):
    status: str
    version: str
    schema_version: str


class ErrorBody(BaseModel):
    type: str
    message: str


class ErrorResponse(BaseModel):
    error: ErrorBody
