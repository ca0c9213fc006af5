"""Command-line front end.

A thin client over the service layer: commands read the manifest and data
files, build the same request payloads the HTTP API accepts, execute them
in-process (or against a remote server with ``--server``), and write the
returned files.  Exit codes: 0 success, 1 user/data error, 2 internal
failure.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import httpx

from . import __version__
from .errors import OkunError
from .manifest import (
    all_scenarios,
    dataset_payload,
    fit_config_payload,
    load_manifest,
    scenario_payload,
)
from .schemas import FiguresRequest, FitRequest, ProjectRequest
from .service import run_figures, run_fit, run_project


class RemoteServiceError(OkunError):
    """Error reported by a remote service instance."""


class ServiceClient:
    """Dispatches requests in-process or to a remote server."""

    def __init__(self, server: str | None):
        self.server = server.rstrip("/") if server else None

    def _post(self, path, request, response_cls, local):
        if self.server is None:
            return local(request)
        resp = httpx.post(
            self.server + path, json=request.model_dump(), timeout=120.0
        )
        if resp.status_code == 400:
            body = resp.json().get("error", {})
            raise RemoteServiceError(
                f"{body.get('type', 'error')}: {body.get('message', resp.text)}"
            )
        resp.raise_for_status()
        return response_cls.model_validate(resp.json())

    def fit(self, request: FitRequest):
        from .schemas import FitResponse

        return self._post("/fit", request, FitResponse, run_fit)

    def project(self, request: ProjectRequest):
        from .schemas import ProjectResponse

        return self._post("/project", request, ProjectResponse, run_project)

    def figures(self, request: FiguresRequest):
        from .schemas import FiguresResponse

        return self._post("/figures", request, FiguresResponse, run_figures)


def _parse_lags(text: str | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {text!r}")


def _write_files(out_dir: Path, files: dict[str, str]) -> list[Path]:
    out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for name in sorted(files):
        path = out_dir / name
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text(files[name], encoding="utf-8", newline="\n")
        tmp.replace(path)
        written.append(path)
    return written


def _common_options(fn):
    fn = click.option(
        "--manifest",
        "manifest_path",
        required=True,
        type=click.Path(),
        help="Run manifest (JSON).",
    )(fn)
    fn = click.option("--out", "out_dir", type=click.Path(), default=None,
                      help="Output directory (default: manifest output_dir).")(fn)
    fn = click.option("--server", default=None,
                      help="Base URL of a running service; default runs in-process.")(fn)
    return fn


@click.group()
@click.version_option(version=__version__, prog_name="okun")
def cli():
    """Piecewise level models of labor rates driven by real GDP per capita."""


@cli.command("fit")
@_common_options
@click.option("--country", required=True)
@click.option("--target", type=click.Choice(["unemployment", "employment"]), default=None)
@click.option("--break-from", type=int, default=None)
@click.option("--break-to", type=int, default=None)
@click.option("--lags", default=None, help="Comma-separated lag candidates, e.g. 0,1.")
def cmd_fit(manifest_path, out_dir, server, country, target, break_from, break_to, lags):
    """Fit the two-segment model and write the report JSON and predicted CSV."""
    manifest = load_manifest(manifest_path)
    request = FitRequest(
        dataset=dataset_payload(manifest, country),
        config=fit_config_payload(
            manifest, target, break_from, break_to, _parse_lags(lags)
        ),
    )
    response = ServiceClient(server).fit(request)
    out = Path(out_dir) if out_dir else manifest.base_dir / manifest.output_dir
    for path in _write_files(out, response.files):
        click.echo(str(path))
    r = response.report
    click.echo(
        f"{country} {r['target']}: break {r['break_year']}, lag {r['lag']}, "
        f"R^2 {r['r_squared']}, std error {r['std_error']}"
    )


@cli.command("project")
@_common_options
@click.option("--country", required=True)
@click.option("--scenario", "scenario_name", required=True)
@click.option("--horizon", type=int, default=None, help="Override the scenario horizon year.")
@click.option("--target", type=click.Choice(["unemployment", "employment"]), default=None)
def cmd_project(manifest_path, out_dir, server, country, scenario_name, horizon, target):
    """Project the fitted model through a growth scenario and write the CSV."""
    manifest = load_manifest(manifest_path)
    request = ProjectRequest(
        dataset=dataset_payload(manifest, country),
        config=fit_config_payload(manifest, target),
        scenario=scenario_payload(manifest, scenario_name, horizon),
    )
    response = ServiceClient(server).project(request)
    out = Path(out_dir) if out_dir else manifest.base_dir / manifest.output_dir
    for path in _write_files(out, response.files):
        click.echo(str(path))
    flag = " (clipped)" if response.clipped_any else ""
    click.echo(f"{country} {scenario_name}: {response.final_year} -> "
               f"{response.final_rate}{flag}")


@cli.command("figures")
@_common_options
@click.option("--country", required=True)
@click.option("--target", type=click.Choice(["unemployment", "employment"]), default=None)
def cmd_figures(manifest_path, out_dir, server, country, target):
    """Write plot-data files (TSV) for one country under <out>/<country>/."""
    manifest = load_manifest(manifest_path)
    request = FiguresRequest(
        dataset=dataset_payload(manifest, country),
        config=fit_config_payload(manifest, target),
        scenarios=all_scenarios(manifest),
    )
    response = ServiceClient(server).figures(request)
    out = Path(out_dir) if out_dir else manifest.base_dir / manifest.output_dir
    for path in _write_files(out / country, response.files):
        click.echo(str(path))


@cli.command("serve")
@click.option("--host", default="127.0.0.1")
@click.option("--port", type=int, default=8000)
def cmd_serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("okun.service:app", host=host, port=port)


def main(argv=None):
    """Console entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        sys.exit(exc.exit_code)
    except click.Abort:
        sys.exit(1)
    except click.ClickException as exc:
        exc.show()
        sys.exit(1)
    except OkunError as exc:
        sys.stderr.write(
            json.dumps({"error": {"type": type(exc).__name__, "message": str(exc)}})
            + "\n"
        )
        sys.exit(1)
    except httpx.HTTPError as exc:
        sys.stderr.write(
            json.dumps({"error": {"type": "TransportError", "message": str(exc)}}) + "\n"
        )
        sys.exit(1)
    except Exception as exc:  # pragma: no cover - internal invariant violation
        sys.stderr.write(
            json.dumps(
                {"error": {"type": "InternalError", "message": f"{type(exc).__name__}: {exc}"}}
            )
            + "\n"
        )
        sys.exit(2)


if __name__ == "__main__":
    main()
