"""Wire payload decoding, section discipline, validation, and filtering."""

from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from humboldt.catalog import CatalogSnapshot, DataArtifact
from humboldt.errors import (
    DanglingArtifactError,
    MalformedPayloadError,
    RepresentationMismatchError,
)
from humboldt.payload import (
    Edge,
    PayloadItem,
    RepresentationPayload,
    parse_payload,
    prune_payload,
    serialize_payload,
    validate_payload,
)
from humboldt.spec import Representation


def snap(*ids: str) -> CatalogSnapshot:
    return CatalogSnapshot(
        artifacts={
            aid: DataArtifact(id=aid, kind="table", name=aid, fields={})
            for aid in ids
        }
    )


def items(*ids: str) -> tuple[PayloadItem, ...]:
    return tuple(PayloadItem(id=aid) for aid in ids)


class TestSections:
    def test_list_payload_carries_items_only(self):
        payload = RepresentationPayload(Representation.LIST, items("a", "b"))
        assert payload.item_ids() == ("a", "b")
        assert payload.edges is None and payload.children is None

    def test_owned_section_defaults_empty(self):
        assert RepresentationPayload(Representation.GRAPH, ()).edges == ()
        assert RepresentationPayload(Representation.HIERARCHY, ()).children == {}
        assert RepresentationPayload(Representation.CATEGORIES, ()).categories == {}
        assert RepresentationPayload(Representation.EMBEDDING, ()).positions == {}

    def test_foreign_section_rejected(self):
        with pytest.raises(MalformedPayloadError):
            RepresentationPayload(
                Representation.LIST, items("a"), edges=(Edge("a", "a"),)
            )
        with pytest.raises(MalformedPayloadError):
            RepresentationPayload(
                Representation.GRAPH, items("a"), categories={"c": ("a",)}
            )


class TestParse:
    def test_graph_wire_format(self):
        payload = parse_payload(
            {
                "representation": "GRAPH",
                "items": [{"id": "a"}, {"id": "b", "annotations": {"note": "hub"}}],
                "edges": [{"from": "a", "to": "b", "label": "carrier_id"}],
            }
        )
        assert payload.representation is Representation.GRAPH
        assert payload.items[1].annotations == {"note": "hub"}
        assert payload.edges == (Edge("a", "b", "carrier_id"),)

    def test_edge_label_is_optional(self):
        payload = parse_payload(
            {"representation": "GRAPH", "items": [], "edges": [{"from": "a", "to": "b"}]}
        )
        assert payload.edges[0].label == ""

    def test_positions_decode_as_floats(self):
        payload = parse_payload(
            {
                "representation": "EMBEDDING",
                "items": [{"id": "a"}],
                "positions": {"a": {"x": 1, "y": 0.5}},
            }
        )
        assert payload.positions == {"a": (1.0, 0.5)}

    @pytest.mark.parametrize(
        "data",
        [
            "not an object",
            {"items": []},
            {"representation": "BLOB"},
            {"representation": "LIST", "items": [{"no_id": True}]},
            {"representation": "LIST", "items": [{"id": "a", "weird": 1}]},
            {"representation": "GRAPH", "edges": [{"from": "a"}]},
            {"representation": "GRAPH", "edges": [{"from": "a", "to": "b", "label": 3}]},
            {"representation": "HIERARCHY", "children": {"a": "b"}},
            {"representation": "EMBEDDING", "positions": {"a": {"x": 1}}},
            {"representation": "EMBEDDING", "positions": {"a": {"x": 1, "y": "up"}}},
            {"representation": "LIST", "items": [], "junk": []},
        ],
    )
    def test_malformed_shapes_rejected(self, data):
        with pytest.raises(MalformedPayloadError):
            parse_payload(data)

    def test_wrong_section_for_representation_rejected(self):
        with pytest.raises(MalformedPayloadError):
            parse_payload(
                {"representation": "LIST", "items": [], "edges": []}
            )

    def test_round_trip(self):
        payload = parse_payload(
            {
                "representation": "CATEGORIES",
                "items": [{"id": "a"}, {"id": "b"}],
                "categories": {"tables": ["a"], "books": ["b"]},
            }
        )
        assert parse_payload(serialize_payload(payload)) == payload


class TestValidate:
    def test_matching_payload_passes(self):
        payload = RepresentationPayload(
            Representation.GRAPH, items("a", "b"), edges=(Edge("a", "b"),)
        )
        assert validate_payload(payload, Representation.GRAPH, snap("a", "b")) is payload

    def test_representation_mismatch(self):
        payload = RepresentationPayload(Representation.LIST, items("a"))
        with pytest.raises(RepresentationMismatchError) as exc:
            validate_payload(payload, Representation.GRAPH, snap("a"))
        assert exc.value.declared is Representation.GRAPH
        assert exc.value.got is Representation.LIST

    def test_unknown_item_id(self):
        payload = RepresentationPayload(Representation.LIST, items("ghost"))
        with pytest.raises(DanglingArtifactError) as exc:
            validate_payload(payload, Representation.LIST, snap("a"))
        assert exc.value.artifact_id == "ghost"

    def test_unknown_edge_endpoint(self):
        payload = RepresentationPayload(
            Representation.GRAPH, items("a"), edges=(Edge("a", "ghost"),)
        )
        with pytest.raises(DanglingArtifactError):
            validate_payload(payload, Representation.GRAPH, snap("a"))

    def test_hierarchy_cycle_rejected(self):
        payload = RepresentationPayload(
            Representation.HIERARCHY,
            items("a", "b"),
            children={"a": ("b",), "b": ("a",)},
        )
        with pytest.raises(MalformedPayloadError):
            validate_payload(payload, Representation.HIERARCHY, snap("a", "b"))

    def test_deep_hierarchy_without_recursion_limit(self):
        ids = [f"n{i}" for i in range(3000)]
        payload = RepresentationPayload(
            Representation.HIERARCHY,
            items(*ids),
            children={ids[i]: (ids[i + 1],) for i in range(len(ids) - 1)},
        )
        validate_payload(payload, Representation.HIERARCHY, snap(*ids))


class TestPrune:
    def test_list_keeps_matching_items_in_order(self):
        payload = RepresentationPayload(Representation.LIST, items("a", "b", "c"))
        pruned = prune_payload(payload, {"c", "a"})
        assert pruned.item_ids() == ("a", "c")
        assert pruned.representation is Representation.LIST

    def test_graph_edges_need_both_endpoints(self):
        payload = RepresentationPayload(
            Representation.GRAPH,
            items("a", "b", "c"),
            edges=(Edge("a", "b", "x"), Edge("b", "c", "y")),
        )
        pruned = prune_payload(payload, {"a", "b"})
        assert pruned.item_ids() == ("a", "b")
        assert pruned.edges == (Edge("a", "b", "x"),)

    def test_graph_to_single_node(self):
        payload = RepresentationPayload(
            Representation.GRAPH, items("a", "b"), edges=(Edge("a", "b"),)
        )
        pruned = prune_payload(payload, {"b"})
        assert pruned.item_ids() == ("b",)
        assert pruned.edges == ()

    def test_hierarchy_drops_orphaned_subtrees(self):
        # root -> mid -> leaf; pruning mid takes leaf with it even though
        # leaf itself matched
        payload = RepresentationPayload(
            Representation.HIERARCHY,
            items("root", "mid", "leaf", "other"),
            children={"root": ("mid",), "mid": ("leaf",)},
        )
        pruned = prune_payload(payload, {"root", "leaf", "other"})
        assert pruned.item_ids() == ("root", "other")
        assert pruned.children == {}

    def test_hierarchy_keeps_connected_chain(self):
        payload = RepresentationPayload(
            Representation.HIERARCHY,
            items("root", "mid", "leaf"),
            children={"root": ("mid",), "mid": ("leaf",)},
        )
        pruned = prune_payload(payload, {"root", "mid", "leaf"})
        assert pruned.item_ids() == ("root", "mid", "leaf")
        assert pruned.children == {"root": ("mid",), "mid": ("leaf",)}

    def test_emptied_categories_are_dropped(self):
        payload = RepresentationPayload(
            Representation.CATEGORIES,
            items("a", "b"),
            categories={"keep": ("a", "b"), "gone": ("b",)},
        )
        pruned = prune_payload(payload, {"a"})
        assert pruned.categories == {"keep": ("a",)}

    def test_positions_follow_items(self):
        payload = RepresentationPayload(
            Representation.EMBEDDING,
            items("a", "b"),
            positions={"a": (0.0, 0.0), "b": (1.0, 1.0)},
        )
        pruned = prune_payload(payload, {"b"})
        assert pruned.positions == {"b": (1.0, 1.0)}

    def test_keep_everything_is_identity(self):
        payload = RepresentationPayload(
            Representation.GRAPH, items("a", "b"), edges=(Edge("a", "b", "z"),)
        )
        assert prune_payload(payload, {"a", "b"}) == payload


@st.composite
def graph_payloads(draw):
    n = draw(st.integers(1, 8))
    ids = [f"g{i}" for i in range(n)]
    pairs = [(a, b) for i, a in enumerate(ids) for b in ids[i + 1 :]]
    chosen = draw(st.lists(st.sampled_from(pairs), max_size=10)) if pairs else []
    return RepresentationPayload(
        Representation.GRAPH,
        items(*ids),
        edges=tuple(Edge(a, b) for a, b in chosen),
    )


class TestPruneProperties:
    @given(graph_payloads(), st.sets(st.sampled_from([f"g{i}" for i in range(8)])))
    def test_pruned_graph_is_closed_over_kept_ids(self, payload, keep):
        pruned = prune_payload(payload, keep)
        kept = set(pruned.item_ids())
        assert kept <= set(payload.item_ids()) & keep
        assert pruned.representation is payload.representation
        for edge in pruned.edges:
            assert edge.source in kept and edge.target in kept

    @given(graph_payloads())
    def test_prune_is_idempotent(self, payload):
        keep = set(payload.item_ids()[::2])
        once = prune_payload(payload, keep)
        assert prune_payload(once, keep) == once
