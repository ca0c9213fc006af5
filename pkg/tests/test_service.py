import json

import pytest
from fastapi.testclient import TestClient

from okun import __version__
from okun.manifest import all_scenarios, dataset_payload, fit_config_payload
from okun.service import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


@pytest.fixture(scope="module")
def us_fit_body(manifest):
    return {
        "dataset": dataset_payload(manifest, "us").model_dump(),
        "config": fit_config_payload(manifest, target="unemployment").model_dump(),
    }


class TestHealth:
    def test_health(self, client):
        resp = client.get("/health")
        assert resp.status_code == 200
        body = resp.json()
        assert body["status"] == "ok"
        assert body["version"] == __version__


class TestFitEndpoint:
    def test_fit_us(self, client, us_fit_body):
        resp = client.post("/fit", json=us_fit_body)
        assert resp.status_code == 200
        body = resp.json()
        assert body["report"]["break_year"] == 1979
        assert body["report"]["target"] == "unemployment"
        assert set(body["files"]) == {
            "us_unemployment_fit.json",
            "us_unemployment_predicted.csv",
        }
        emitted = json.loads(body["files"]["us_unemployment_fit.json"])
        assert emitted == body["report"]

    def test_domain_error_maps_to_400(self, client, us_fit_body):
        bad = json.loads(json.dumps(us_fit_body))
        bad["dataset"]["gdp_per_capita"]["values"][3] = -1.0
        resp = client.post("/fit", json=bad)
        assert resp.status_code == 400
        assert resp.json()["error"]["type"] == "DomainError"

    def test_config_error_maps_to_400(self, client, us_fit_body):
        bad = json.loads(json.dumps(us_fit_body))
        bad["config"]["break_from"] = 1999
        bad["config"]["break_to"] = 1990
        resp = client.post("/fit", json=bad)
        assert resp.status_code == 400
        assert resp.json()["error"]["type"] == "ConfigError"

    def test_malformed_payload_is_422(self, client):
        resp = client.post("/fit", json={"dataset": {"country": "x"}})
        assert resp.status_code == 422


class TestProjectEndpoint:
    def test_project_us(self, client, manifest, us_fit_body):
        scenario = next(
            s for s in all_scenarios(manifest) if s.name == "constant_increment_591"
        )
        resp = client.post(
            "/project", json={**us_fit_body, "scenario": scenario.model_dump()}
        )
        assert resp.status_code == 200
        body = resp.json()
        assert body["final_year"] == 2050
        assert body["final_rate"] == pytest.approx(25.0, abs=3.0)
        assert "us_constant_increment_591_projection.csv" in body["files"]

    def test_unknown_fields_rejected_cleanly(self, client, us_fit_body):
        resp = client.post(
            "/project",
            json={
                **us_fit_body,
                "scenario": {"name": "x", "rule": "warp", "horizon_year": 2050},
            },
        )
        assert resp.status_code == 422


class TestFiguresEndpoint:
    def test_figures_us(self, client, manifest, us_fit_body):
        scenarios = [s.model_dump() for s in all_scenarios(manifest)]
        resp = client.post("/figures", json={**us_fit_body, "scenarios": scenarios})
        assert resp.status_code == 200
        files = resp.json()["files"]
        assert set(files) == {
            "du_vs_minus_de.tsv",
            "level_fit.tsv",
            "components.tsv",
            "gdp_paths.tsv",
            "growth_threshold.tsv",
        }

    def test_figures_without_scenarios(self, client, manifest):
        body = {
            "dataset": dataset_payload(manifest, "uk").model_dump(),
            "config": fit_config_payload(manifest, target="employment").model_dump(),
        }
        resp = client.post("/figures", json=body)
        assert resp.status_code == 200
        files = resp.json()["files"]
        # no du/-de figure without both rate series; gdp_paths has no scenarios
        assert "du_vs_minus_de.tsv" not in files
        header = files["gdp_paths.tsv"].splitlines()[0]
        assert header == "year\tmeasured"
