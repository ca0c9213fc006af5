from pathlib import Path

import pytest

from okun import FitConfig, Target, fit_model
from okun.manifest import dataset_payload, load_manifest

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"


@pytest.fixture(scope="session")
def manifest_path() -> Path:
    return FIXTURES / "manifest.json"


@pytest.fixture(scope="session")
def manifest(manifest_path):
    return load_manifest(manifest_path)


def _dataset(manifest, country):
    return dataset_payload(manifest, country).to_dataset()


@pytest.fixture(scope="session")
def us_dataset(manifest):
    return _dataset(manifest, "us")


@pytest.fixture(scope="session")
def uk_dataset(manifest):
    return _dataset(manifest, "uk")


@pytest.fixture(scope="session")
def france_dataset(manifest):
    return _dataset(manifest, "france")


@pytest.fixture(scope="session")
def japan_dataset(manifest):
    return _dataset(manifest, "japan")


@pytest.fixture(scope="session")
def us_unemployment_fit(us_dataset):
    return fit_model(us_dataset, FitConfig(target=Target.UNEMPLOYMENT))


@pytest.fixture(scope="session")
def us_employment_fit(us_dataset):
    return fit_model(us_dataset, FitConfig(target=Target.EMPLOYMENT))


@pytest.fixture(scope="session")
def japan_fit(japan_dataset):
    return fit_model(japan_dataset, FitConfig(target=Target.EMPLOYMENT))
