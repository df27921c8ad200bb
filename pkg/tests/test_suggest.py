"""Context-sensitive completion for the search box."""

from __future__ import annotations

import pytest

from humboldt.query.suggest import MAX_VALUE_SUGGESTIONS, suggest
from strategies import gen_catalog


def texts(results, kind=None):
    return [s.text for s in results if kind is None or s.kind == kind]


class TestProviderContext:
    def test_colon_prefix_completes_provider_names(self, demo_doc, demo_snapshot):
        got = suggest(":rec", None, demo_doc, demo_snapshot)
        assert [(s.kind, s.text) for s in got] == [("provider", "recent_documents")]

    def test_bare_colon_lists_all_search_visible_providers(self, demo_doc, demo_snapshot):
        got = suggest(":", None, demo_doc, demo_snapshot)
        assert texts(got, "provider") == [
            "badged", "embedding", "favorites", "name_based",
            "owned_by", "recent_documents", "type",
        ]

    def test_hidden_providers_never_appear(self, demo_doc, demo_snapshot):
        got = suggest(":rec", None, demo_doc, demo_snapshot,
                      hidden={("recent", "Recent Documents")})
        assert got == []

    def test_provider_context_inside_expression(self, demo_doc, demo_snapshot):
        got = suggest(":favorites() & ba", None, demo_doc, demo_snapshot)
        assert texts(got, "provider") == ["badged"]
        assert texts(got, "field") == ["badge", "badged_by"]


class TestValueContext:
    def test_field_values_come_from_the_catalog(self, demo_doc, demo_snapshot):
        got = suggest("owned_by: ", None, demo_doc, demo_snapshot)
        assert texts(got) == ["Dev Patel", "John Doe", "Maya Flores", "Priya Nair"]
        assert all(s.kind == "value" for s in got)

    def test_prefix_filters_values(self, demo_doc, demo_snapshot):
        got = suggest("owned_by: jo", None, demo_doc, demo_snapshot)
        assert texts(got) == ["John Doe"]

    def test_open_quote_still_completes(self, demo_doc, demo_snapshot):
        got = suggest("owned_by: 'Jo", None, demo_doc, demo_snapshot)
        assert texts(got) == ["John Doe"]

    def test_type_values_are_artifact_kinds(self, demo_doc, demo_snapshot):
        got = suggest("type: ", None, demo_doc, demo_snapshot)
        assert texts(got) == ["dashboard", "table", "visualization", "workbook"]

    def test_text_list_fields_suggest_entries(self, demo_doc, demo_snapshot):
        got = suggest("tags: ", None, demo_doc, demo_snapshot)
        assert texts(got) == ["arbitration", "geo", "otp"]

    def test_numeric_fields_suggest_observed_values(self, demo_doc, demo_snapshot):
        got = suggest("views: ", None, demo_doc, demo_snapshot)
        assert "10" in texts(got) and "20" in texts(got)

    def test_value_list_is_capped(self, demo_doc):
        import random

        snap = gen_catalog(random.Random(7), 80)
        got = suggest("name: ", None, demo_doc, snap)
        assert len(got) <= MAX_VALUE_SUGGESTIONS


class TestTermStart:
    def test_empty_input_offers_fields_providers_and_a_hint(self, demo_doc, demo_snapshot):
        got = suggest("", None, demo_doc, demo_snapshot)
        assert "owned_by" in texts(got, "field")
        assert "type" in texts(got, "field")
        assert "favorites" in texts(got, "provider")
        assert texts(got, "hint") != []

    def test_after_operator(self, demo_doc, demo_snapshot):
        got = suggest("a & ", None, demo_doc, demo_snapshot)
        assert "badged_by" in texts(got, "field")

    def test_bare_prefix_matches_fields_and_providers(self, demo_doc, demo_snapshot):
        got = suggest("fav", None, demo_doc, demo_snapshot)
        assert [(s.kind, s.text) for s in got] == [
            ("field", "favorite"),
            ("provider", "favorites"),
        ]

    def test_field_aliases_require_backing_field(self, demo_doc, demo_snapshot):
        got = suggest("", None, demo_doc, demo_snapshot)
        fields = texts(got, "field")
        assert "owned_by" in fields  # owner exists in the demo catalog
        assert "badged_by" in fields
        # alias targets absent from the catalog stay out of the list
        import random

        empty = gen_catalog(random.Random(0), 0)
        bare = texts(suggest("", None, demo_doc, empty), "field")
        assert "owned_by" not in bare


class TestStability:
    @pytest.mark.parametrize(
        "partial",
        ["", ":", ":rec", "owned_by: ", "owned_by: 'Jo", "a & (", "!  ", "x | y: "],
    )
    def test_never_raises_and_is_deterministic(self, partial, demo_doc, demo_snapshot):
        once = suggest(partial, None, demo_doc, demo_snapshot)
        again = suggest(partial, None, demo_doc, demo_snapshot)
        assert once == again
