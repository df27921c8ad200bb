"""Representation payloads: what a provider returns for display.

Every payload carries its representation and the artifact ids to show.
Exactly one extra section may be present and it must match the
representation: edges for GRAPH, children for HIERARCHY, categories for
CATEGORIES, positions for EMBEDDING. TILES and LIST carry items only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterator

from .catalog import CatalogSnapshot
from .errors import (
    DanglingArtifactError,
    MalformedPayloadError,
    RepresentationMismatchError,
)
from .spec import Representation

__all__ = [
    "PayloadItem",
    "Edge",
    "RepresentationPayload",
    "parse_payload",
    "serialize_payload",
    "validate_payload",
    "prune_payload",
]


@dataclass(frozen=True)
class PayloadItem:
    id: str
    # Free-form text annotations shown by a UI, ignored by the engine.
    annotations: dict[str, str] = field(default_factory=dict)


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    label: str = ""


def _owned_section(representation: Representation) -> str | None:
    return {
        Representation.GRAPH: "edges",
        Representation.HIERARCHY: "children",
        Representation.CATEGORIES: "categories",
        Representation.EMBEDDING: "positions",
    }.get(representation)


@dataclass(frozen=True)
class RepresentationPayload:
    representation: Representation
    items: tuple[PayloadItem, ...] = ()
    edges: tuple[Edge, ...] | None = None
    children: dict[str, tuple[str, ...]] | None = None
    categories: dict[str, tuple[str, ...]] | None = None
    positions: dict[str, tuple[float, float]] | None = None

    def __post_init__(self):
        owned = _owned_section(self.representation)
        defaults = {"edges": (), "children": {}, "categories": {}, "positions": {}}
        for section, empty in defaults.items():
            value = getattr(self, section)
            if section == owned:
                if value is None:
                    object.__setattr__(self, section, empty)
            elif value is not None:
                raise MalformedPayloadError(
                    f"{self.representation.value} payload may not carry {section!r}"
                )

    def item_ids(self) -> tuple[str, ...]:
        return tuple(item.id for item in self.items)

    def referenced_ids(self) -> Iterator[str]:
        for item in self.items:
            yield item.id
        if self.edges:
            for edge in self.edges:
                yield edge.source
                yield edge.target
        if self.children:
            for parent, kids in self.children.items():
                yield parent
                yield from kids
        if self.categories:
            for ids in self.categories.values():
                yield from ids
        if self.positions:
            yield from self.positions


def _expect_id_list(value: Any, where: str) -> tuple[str, ...]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise MalformedPayloadError(f"{where}: expected a list of artifact ids")
    return tuple(value)


def parse_payload(data: Any) -> RepresentationPayload:
    """Decode a payload from wire JSON; shape problems raise MalformedPayload."""
    if not isinstance(data, dict):
        raise MalformedPayloadError("payload must be an object")
    unknown = set(data) - {"representation", "items", "edges", "children", "categories", "positions"}
    if unknown:
        raise MalformedPayloadError(f"unknown payload key {sorted(unknown)[0]!r}")
    rep_name = data.get("representation")
    if not isinstance(rep_name, str):
        raise MalformedPayloadError("payload needs a 'representation' string")
    try:
        representation = Representation(rep_name)
    except ValueError:
        raise MalformedPayloadError(f"unknown representation {rep_name!r}") from None

    items: list[PayloadItem] = []
    raw_items = data.get("items", [])
    if not isinstance(raw_items, list):
        raise MalformedPayloadError("'items' must be a list")
    for i, raw in enumerate(raw_items):
        if not isinstance(raw, dict) or not isinstance(raw.get("id"), str):
            raise MalformedPayloadError(f"items[{i}]: expected an object with an 'id'")
        if set(raw) - {"id", "annotations"}:
            raise MalformedPayloadError(f"items[{i}]: unknown key")
        annotations = raw.get("annotations", {})
        if not isinstance(annotations, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in annotations.items()
        ):
            raise MalformedPayloadError(f"items[{i}].annotations: expected string pairs")
        items.append(PayloadItem(id=raw["id"], annotations=dict(annotations)))

    edges = None
    if data.get("edges") is not None:
        if not isinstance(data["edges"], list):
            raise MalformedPayloadError("'edges' must be a list")
        parsed = []
        for i, raw in enumerate(data["edges"]):
            if (
                not isinstance(raw, dict)
                or not isinstance(raw.get("from"), str)
                or not isinstance(raw.get("to"), str)
                or set(raw) - {"from", "to", "label"}
            ):
                raise MalformedPayloadError(f"edges[{i}]: expected {{'from', 'to', 'label'?}}")
            label = raw.get("label", "")
            if not isinstance(label, str):
                raise MalformedPayloadError(f"edges[{i}].label: expected a string")
            parsed.append(Edge(source=raw["from"], target=raw["to"], label=label))
        edges = tuple(parsed)

    children = None
    if data.get("children") is not None:
        if not isinstance(data["children"], dict):
            raise MalformedPayloadError("'children' must be an object")
        children = {
            parent: _expect_id_list(kids, f"children[{parent!r}]")
            for parent, kids in data["children"].items()
        }

    categories = None
    if data.get("categories") is not None:
        if not isinstance(data["categories"], dict):
            raise MalformedPayloadError("'categories' must be an object")
        categories = {
            label: _expect_id_list(ids, f"categories[{label!r}]")
            for label, ids in data["categories"].items()
        }

    positions = None
    if data.get("positions") is not None:
        if not isinstance(data["positions"], dict):
            raise MalformedPayloadError("'positions' must be an object")
        positions = {}
        for aid, pos in data["positions"].items():
            if not isinstance(pos, dict) or set(pos) != {"x", "y"}:
                raise MalformedPayloadError(f"positions[{aid!r}]: expected {{'x', 'y'}}")
            x, y = pos["x"], pos["y"]
            for coord in (x, y):
                if isinstance(coord, bool) or not isinstance(coord, (int, float)):
                    raise MalformedPayloadError(f"positions[{aid!r}]: coordinates must be numbers")
                if not math.isfinite(coord):
                    raise MalformedPayloadError(f"positions[{aid!r}]: coordinates must be finite")
            positions[aid] = (float(x), float(y))

    return RepresentationPayload(
        representation=representation,
        items=tuple(items),
        edges=edges,
        children=children,
        categories=categories,
        positions=positions,
    )


def serialize_payload(payload: RepresentationPayload) -> dict[str, Any]:
    out: dict[str, Any] = {
        "representation": payload.representation.value,
        "items": [
            {"id": item.id, "annotations": item.annotations}
            if item.annotations
            else {"id": item.id}
            for item in payload.items
        ],
    }
    if payload.edges is not None:
        out["edges"] = [
            {"from": e.source, "to": e.target, "label": e.label} for e in payload.edges
        ]
    if payload.children is not None:
        out["children"] = {parent: list(kids) for parent, kids in payload.children.items()}
    if payload.categories is not None:
        out["categories"] = {label: list(ids) for label, ids in payload.categories.items()}
    if payload.positions is not None:
        out["positions"] = {
            aid: {"x": pos[0], "y": pos[1]} for aid, pos in payload.positions.items()
        }
    return out


def _check_acyclic(children: dict[str, tuple[str, ...]]) -> None:
    WHITE, GRAY, BLACK = 0, 1, 2
    color: dict[str, int] = {}

    for start in children:
        if color.get(start, WHITE) != WHITE:
            continue
        stack: list[tuple[str, Iterator[str]]] = [(start, iter(children.get(start, ())))]
        color[start] = GRAY
        while stack:
            node, kids = stack[-1]
            advanced = False
            for kid in kids:
                state = color.get(kid, WHITE)
                if state == GRAY:
                    raise MalformedPayloadError(f"hierarchy contains a cycle through {kid!r}")
                if state == WHITE:
                    color[kid] = GRAY
                    stack.append((kid, iter(children.get(kid, ()))))
                    advanced = True
                    break
            if not advanced:
                color[node] = BLACK
                stack.pop()


def validate_payload(
    payload: RepresentationPayload,
    declared: Representation,
    snapshot: CatalogSnapshot,
) -> RepresentationPayload:
    """Check a payload against the provider's declared representation and
    the catalog. Returns the payload unchanged when everything holds."""
    if payload.representation is not declared:
        raise RepresentationMismatchError(declared, payload.representation)
    for artifact_id in payload.referenced_ids():
        if snapshot.get(artifact_id) is None:
            raise DanglingArtifactError(artifact_id)
    if payload.children:
        _check_acyclic(payload.children)
    return payload


def _hierarchy_keep(
    items: tuple[str, ...], children: dict[str, tuple[str, ...]], matched: set[str]
) -> set[str]:
    # A node survives only if it matched and every ancestor up to a root
    # matched too: dropped parents take their whole subtree with them.
    all_children = {kid for kids in children.values() for kid in kids}
    roots = [aid for aid in items if aid not in all_children]
    keep: set[str] = set()
    queue = [r for r in roots if r in matched]
    while queue:
        node = queue.pop()
        if node in keep:
            continue
        keep.add(node)
        for kid in children.get(node, ()):
            if kid in matched:
                queue.append(kid)
    return keep


def prune_payload(payload: RepresentationPayload, keep: set[str]) -> RepresentationPayload:
    """Restrict a payload to the given ids, preserving its representation.

    Edges survive only when both endpoints do; hierarchy nodes survive only
    when reachable from a surviving root; categories emptied by the pruning
    are dropped.
    """
    matched = {aid for aid in payload.item_ids() if aid in keep}

    if payload.representation is Representation.HIERARCHY:
        kept = _hierarchy_keep(payload.item_ids(), payload.children or {}, matched)
        children = {}
        for parent, kids in (payload.children or {}).items():
            if parent not in kept:
                continue
            surviving = tuple(k for k in kids if k in kept)
            if surviving:
                children[parent] = surviving
        return RepresentationPayload(
            representation=payload.representation,
            items=tuple(i for i in payload.items if i.id in kept),
            children=children,
        )

    items = tuple(i for i in payload.items if i.id in matched)
    if payload.representation is Representation.GRAPH:
        edges = tuple(
            e for e in (payload.edges or ()) if e.source in matched and e.target in matched
        )
        return RepresentationPayload(payload.representation, items, edges=edges)
    if payload.representation is Representation.CATEGORIES:
        categories = {}
        for label, ids in (payload.categories or {}).items():
            surviving = tuple(i for i in ids if i in matched)
            if surviving:
                categories[label] = surviving
        return RepresentationPayload(payload.representation, items, categories=categories)
    if payload.representation is Representation.EMBEDDING:
        positions = {
            aid: pos for aid, pos in (payload.positions or {}).items() if aid in matched
        }
        return RepresentationPayload(payload.representation, items, positions=positions)
    return RepresentationPayload(payload.representation, items)
