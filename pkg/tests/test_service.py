"""Discovery service: overviews, exploration, search, filtering, config."""

from __future__ import annotations

import json

import pytest

from humboldt.catalog import load_catalog
from humboldt.errors import (
    MissingInputError,
    ParseError,
    SchemaError,
    UnauthorizedScopeError,
    UnknownArtifactError,
    UnknownProviderError,
    UnknownProviderReferenceError,
)
from humboldt.service import DiscoveryService
from humboldt.spec import Representation, parse_spec

RECENCY_ORDER = [
    "wb_fleet_id", "FLIGHTS_id", "wb_delays_id", "AIRLINES_id",
    "dash_ops_id", "viz_routes_id", "CARRIERS_id", "PAYROLL_id",
]
SCORE_ORDER = [
    "dash_ops_id", "AIRLINES_id", "wb_fleet_id", "FLIGHTS_id",
    "wb_delays_id", "viz_routes_id", "CARRIERS_id", "PAYROLL_id",
]


def names(views):
    return [v.spec.name for v in views]


class TestOverviews:
    def test_default_user_sees_zero_input_discovery_providers(self, service):
        views = service.overviews("u1")
        assert names(views) == ["Recent Documents", "Favorites", "Embedding"]
        assert all(v.error is None for v in views)
        by_name = {v.spec.name: v for v in views}
        assert list(by_name["Recent Documents"].payload.item_ids()) == RECENCY_ORDER
        assert list(by_name["Favorites"].payload.item_ids()) == [
            "AIRLINES_id", "wb_delays_id", "dash_ops_id"
        ]
        embedding = by_name["Embedding"].payload
        assert embedding.representation is Representation.EMBEDDING
        assert "PAYROLL_id" not in embedding.item_ids()  # no position, stays out
        assert len(embedding.item_ids()) == 7

    def test_team_membership_switches_to_custom_home(self, service):
        service.update_config("user", {"team": "A Team"}, user_id="u1")
        assert names(service.overviews("u1")) == ["Favorites", "Recent Documents"]
        # other users keep the default
        assert names(service.overviews("u2")) == [
            "Recent Documents", "Favorites", "Embedding"
        ]

    def test_team_config_overrides_spec_custom_content(self, service):
        service.update_config(
            "team",
            {"home_providers": [["embedding", "Embedding"]]},
            role="team-admin",
            team="A Team",
        )
        service.update_config("user", {"team": "A Team"}, user_id="u1")
        assert names(service.overviews("u1")) == ["Embedding"]

    def test_hidden_providers_drop_out(self, service):
        service.update_config(
            "user", {"hidden_providers": [["favorites", "Favorites"]]}, user_id="u1"
        )
        assert names(service.overviews("u1")) == ["Recent Documents", "Embedding"]

    def test_provider_order_preference(self, service):
        service.update_config(
            "user",
            {"provider_order": [["embedding", "Embedding"], ["favorites", "Favorites"]]},
            user_id="u1",
        )
        assert names(service.overviews("u1")) == [
            "Embedding", "Favorites", "Recent Documents"
        ]

    def test_admin_disabled_vanishes_for_everyone(self, service):
        service.update_config(
            "admin",
            {"disabled_providers": [["embedding", "Embedding"]]},
            role="admin",
        )
        assert names(service.overviews("u1")) == ["Recent Documents", "Favorites"]
        assert names(service.overviews("u2")) == ["Recent Documents", "Favorites"]


class TestExplore:
    def test_table_selection_drives_input_binding(self, service):
        views = service.explore("AIRLINES_id", "u1")
        assert names(views) == ["Owned By", "Badged", "Type", "Name-Based"]
        by_name = {v.spec.name: v for v in views}
        assert list(by_name["Owned By"].payload.item_ids()) == [
            "AIRLINES_id", "CARRIERS_id", "dash_ops_id"
        ]
        assert list(by_name["Badged"].payload.item_ids()) == [
            "AIRLINES_id", "dash_ops_id"
        ]
        assert list(by_name["Type"].payload.item_ids()) == [
            "AIRLINES_id", "CARRIERS_id", "FLIGHTS_id", "PAYROLL_id"
        ]
        graph = by_name["Name-Based"].payload
        assert graph.representation is Representation.GRAPH
        assert sorted(graph.item_ids()) == ["AIRLINES_id", "CARRIERS_id", "FLIGHTS_id"]

    def test_workbook_selection_offers_fewer_views(self, service):
        views = service.explore("wb_fleet_id", "u1")
        assert names(views) == ["Owned By", "Type"]
        for view in views:
            assert list(view.payload.item_ids()) == ["wb_fleet_id", "wb_delays_id"]

    def test_unknown_artifact(self, service):
        with pytest.raises(UnknownArtifactError):
            service.explore("ghost", "u1")


class TestSearch:
    def test_empty_query_ranks_whole_catalog(self, service):
        assert service.search("", "u1") == SCORE_ORDER

    def test_filter_chain(self, service):
        got = service.search("type: workbook owned_by: 'John Doe'", "u1")
        assert got == ["wb_fleet_id", "wb_delays_id"]

    def test_provider_call_composes_with_keyword(self, service):
        assert service.search(":recent_documents() & bit", "u1") == ["wb_delays_id"]

    def test_no_matches(self, service):
        assert service.search("zzz_nothing_matches", "u1") == []

    def test_parse_error_propagates(self, service):
        with pytest.raises(ParseError):
            service.search("type:", "u1")

    def test_hidden_provider_not_callable(self, service):
        service.update_config(
            "user", {"hidden_providers": [["favorites", "Favorites"]]}, user_id="u1"
        )
        with pytest.raises(UnknownProviderError):
            service.search(":favorites()", "u1")
        # an unaffected user can still call it
        assert service.search(":favorites()", "u2") == [
            "dash_ops_id", "AIRLINES_id", "wb_delays_id"
        ]


class TestFilterView:
    def test_graph_filtered_to_matching_nodes(self, service):
        view = service.filter_view(
            "joinable", "Name-Based", "AIRLINES | CARRIERS",
            {"TABLEID": "AIRLINES_id"}, user_id="u1",
        )
        assert list(view.payload.item_ids()) == ["AIRLINES_id", "CARRIERS_id"]
        assert [(e.source, e.target, e.label) for e in view.payload.edges] == [
            ("AIRLINES_id", "CARRIERS_id", "carrier_id")
        ]

    def test_empty_query_leaves_view_unfiltered(self, service):
        view = service.filter_view(
            "joinable", "Name-Based", "", {"TABLEID": "AIRLINES_id"}, user_id="u1"
        )
        assert len(view.payload.item_ids()) == 3
        assert len(view.payload.edges) == 2

    def test_no_matches_keeps_representation(self, service):
        view = service.filter_view(
            "joinable", "Name-Based", "zzz", {"TABLEID": "AIRLINES_id"}, user_id="u1"
        )
        assert view.payload.representation is Representation.GRAPH
        assert view.payload.item_ids() == ()
        assert view.payload.edges == ()

    def test_list_view_filtering(self, service):
        view = service.filter_view(
            "recent", "Recent Documents", "type: workbook", user_id="u1"
        )
        assert list(view.payload.item_ids()) == ["wb_fleet_id", "wb_delays_id"]

    def test_missing_required_input(self, service):
        with pytest.raises(MissingInputError):
            service.filter_view("joinable", "Name-Based", "", user_id="u1")

    def test_unknown_view(self, service):
        with pytest.raises(UnknownProviderError):
            service.filter_view("nope", "Nope", "", user_id="u1")

    def test_hidden_view_is_unknown(self, service):
        service.update_config(
            "user", {"hidden_providers": [["recent", "Recent Documents"]]}, user_id="u1"
        )
        with pytest.raises(UnknownProviderError):
            service.filter_view("recent", "Recent Documents", "", user_id="u1")


class TestFaultIsolation:
    def test_unreachable_provider_becomes_error_placeholder(self, demo_snapshot, tmp_path):
        raw = {
            "providers": [
                {"type": "recent", "name": "Recent Documents",
                 "representation": "LIST", "input": []},
                {"type": "remote", "name": "Flaky", "representation": "LIST",
                 "input": [], "endpoint": "api/flaky"},
            ]
        }
        service = DiscoveryService(
            parse_spec(json.dumps(raw)),
            demo_snapshot,
            state_path=tmp_path / "s.json",
            provider_base="http://127.0.0.1:9",
            timeout_ms=300,
        )
        views = service.overviews("u1")
        assert names(views) == ["Recent Documents", "Flaky"]
        ok, flaky = views
        assert ok.error is None and ok.payload is not None
        assert flaky.payload is None
        assert flaky.error is not None
        assert flaky.error.kind == "provider_unavailable"


class TestConfigValidation:
    def test_admin_scope_requires_admin_role(self, service):
        with pytest.raises(UnauthorizedScopeError):
            service.update_config("admin", {"disabled_providers": []}, role="user")
        with pytest.raises(UnauthorizedScopeError):
            service.update_config("admin", {"disabled_providers": []}, role="team-admin")

    def test_team_scope_accepts_team_admin_and_admin(self, service):
        service.update_config("team", {"home_providers": []}, role="team-admin", team="T")
        service.update_config("team", {"home_providers": []}, role="admin", team="T")
        with pytest.raises(UnauthorizedScopeError):
            service.update_config("team", {"home_providers": []}, role="user", team="T")

    def test_team_scope_needs_a_team_name(self, service):
        with pytest.raises(SchemaError):
            service.update_config("team", {"home_providers": []}, role="admin")

    def test_unknown_provider_reference_rejected(self, service):
        with pytest.raises(UnknownProviderReferenceError) as exc:
            service.update_config(
                "team", {"home_providers": [["x", "Nope"]]},
                role="team-admin", team="T",
            )
        assert exc.value.reference == ("x", "Nope")
        with pytest.raises(UnknownProviderReferenceError):
            service.update_config(
                "user", {"hidden_providers": [["x", "Nope"]]}, user_id="u1"
            )

    def test_unknown_scope_is_a_schema_error(self, service):
        with pytest.raises(SchemaError):
            service.update_config("galaxy", {}, role="admin")

    def test_state_survives_service_restart(self, demo_doc, demo_snapshot, tmp_path):
        path = tmp_path / "state.json"
        first = DiscoveryService(demo_doc, demo_snapshot, state_path=path)
        first.update_config("user", {"team": "A Team"}, user_id="u1")
        second = DiscoveryService(demo_doc, demo_snapshot, state_path=path)
        assert names(second.overviews("u1")) == ["Favorites", "Recent Documents"]


class TestConstruction:
    def test_invalid_spec_rejected(self, demo_snapshot, joinable_provider_text):
        raw = json.loads(joinable_provider_text)
        doc = parse_spec(json.dumps({"providers": [raw, raw]}))
        with pytest.raises(ValueError):
            DiscoveryService(doc, demo_snapshot)

    def test_suggest_respects_hidden(self, service):
        service.update_config(
            "user", {"hidden_providers": [["recent", "Recent Documents"]]}, user_id="u1"
        )
        assert service.suggest_query(":rec", None, "u1") == []
        got = service.suggest_query(":rec", None, "u2")
        assert [s.text for s in got] == ["recent_documents"]
