"""FastAPI service wrapping the estimation core.

Endpoints are stateless: each request carries the data inline and the
response bundles both a structured summary and the rendered output files,
so any client (the bundled CLI included) can persist byte-identical
artifacts.  Domain errors map to 400, malformed payloads to FastAPI's
usual 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .errors import OkunError
from .estimator import FitConfig, fit_model
from .model import Target
from .projector import project_rate
from .report import (
    FIT_JSON_NAME,
    PREDICTED_CSV_NAME,
    PROJECTION_CSV_NAME,
    SCHEMA_VERSION,
    figure_files,
    fit_report_payload,
    predicted_csv,
    projection_csv,
    render_json,
    sig6,
)
from .schemas import (
    FiguresRequest,
    FiguresResponse,
    FitConfigPayload,
    FitRequest,
    FitResponse,
    HealthResponse,
    ProjectRequest,
    ProjectResponse,
)


def _to_config(payload: FitConfigPayload) -> FitConfig:
    return FitConfig(
        target=Target(payload.target),
        break_from=payload.break_from,
        break_to=payload.break_to,
        lag_candidates=tuple(payload.lags),
        min_segment_obs=payload.min_segment_obs,
    )


def run_fit(req: FitRequest) -> FitResponse:
    data = req.dataset.to_dataset()
    report = fit_model(data, _to_config(req.config))
    payload = fit_report_payload(report, data)
    files = {
        FIT_JSON_NAME.format(country=data.country, target=payload["target"]): render_json(payload),
        PREDICTED_CSV_NAME.format(country=data.country, target=payload["target"]): predicted_csv(report, data),
    }
    return FitResponse(report=payload, files=files)


def run_project(req: ProjectRequest) -> ProjectResponse:
    data = req.dataset.to_dataset()
    report = fit_model(data, _to_config(req.config))
    gdp = data.gdp_per_capita
    scenario = req.scenario.to_scenario(gdp.end_year, gdp.at(gdp.end_year))
    result = project_rate(report.model, data, scenario)
    name = PROJECTION_CSV_NAME.format(country=data.country, scenario=req.scenario.name)
    return ProjectResponse(
        final_year=result.rates.end_year,
        final_rate=sig6(result.rates.at(result.rates.end_year)),
        clipped_any=result.clipped_any,
        files={name: projection_csv(result)},
    )


def run_figures(req: FiguresRequest) -> FiguresResponse:
    data = req.dataset.to_dataset()
    report = fit_model(data, _to_config(req.config))
    gdp = data.gdp_per_capita
    scenarios = {
        s.name: s.to_scenario(gdp.end_year, gdp.at(gdp.end_year)) for s in req.scenarios
    }
    return FiguresResponse(files=figure_files(report, data, scenarios))


app = FastAPI(title="okun", version=__version__)


@app.exception_handler(OkunError)
async def okun_error_handler(_: Request, exc: OkunError) -> JSONResponse:
    return JSONResponse(
        status_code=400,
        content={"error": {"type": type(exc).__name__, "message": str(exc)}},
    )


@app.get("/health", response_model=HealthResponse)
def health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__, schema_version=SCHEMA_VERSION)


@app.post("/fit", response_model=FitResponse)
def fit(req: FitRequest) -> FitResponse:
    return run_fit(req)


@app.post("/project", response_model=ProjectResponse)
def project(req: ProjectRequest) -> ProjectResponse:
    return run_project(req)


@app.post("/figures", response_model=FiguresResponse)
def figures(req: FiguresRequest) -> FiguresResponse:
    return run_figures(req)
