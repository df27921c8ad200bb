from __future__ import annotations

import json
from pathlib import Path

import pytest

from humboldt.catalog import CatalogSnapshot, load_catalog
from humboldt.service import DiscoveryService
from humboldt.spec import SpecDocument, parse_spec

TESTS_DIR = Path(__file__).parent
DATA_DIR = TESTS_DIR / "data"
DEMO_DIR = TESTS_DIR.parent / "demo"


def read_data(name: str) -> str:
    return (DATA_DIR / name).read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def joinable_provider_text() -> str:
    return read_data("joinable_provider.json")


@pytest.fixture(scope="session")
def global_ranking_text() -> str:
    return read_data("global_ranking.json")


@pytest.fixture(scope="session")
def team_homes_text() -> str:
    return read_data("team_homes.json")


@pytest.fixture(scope="session")
def demo_spec_text() -> str:
    return (DEMO_DIR / "spec.json").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def demo_catalog_text() -> str:
    return (DEMO_DIR / "catalog.json").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def demo_doc(demo_spec_text) -> SpecDocument:
    return parse_spec(demo_spec_text)


@pytest.fixture(scope="session")
def demo_snapshot(demo_catalog_text) -> CatalogSnapshot:
    return load_catalog(demo_catalog_text)


@pytest.fixture()
def service(demo_doc, demo_snapshot, tmp_path) -> DiscoveryService:
    return DiscoveryService(
        demo_doc, demo_snapshot, state_path=tmp_path / "state.json"
    )


@pytest.fixture()
def client(service):
    from fastapi.testclient import TestClient

    from humboldt.api import create_app

    return TestClient(create_app(service), raise_server_exceptions=False)


def team_homes_with_providers() -> str:
    """The custom home-page block joined with the five providers it names."""
    doc = json.loads(read_data("team_homes.json"))
    doc["providers"] = [
        {"type": "team", "name": "Team", "representation": "LIST",
         "endpoint": "api/team"},
        {"type": "favorites", "name": "Favorites", "representation": "LIST"},
        {"type": "shared", "name": "Shared", "representation": "LIST",
         "endpoint": "api/shared"},
        {"type": "badged", "name": "Endorsed", "representation": "LIST",
         "endpoint": "api/endorsed"},
        {"type": "similar", "name": "Recommended", "representation": "TILES",
         "endpoint": "api/recommended"},
    ]
    return json.dumps(doc)
