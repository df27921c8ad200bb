"""Reference provider implementations that run in-process.

A provider spec without an endpoint is wired to one of these by its
normalized name (see the alias table). Each implementation consumes an input
binding plus the catalog snapshot and returns a representation payload.
"""

from __future__ import annotations

from collections import deque
from typing import Callable

from .catalog import CatalogSnapshot, DataArtifact, Timestamp, get_field
from .errors import MissingInputError
from .payload import Edge, PayloadItem, RepresentationPayload
from .spec import InputType, Representation, normalize_name

__all__ = ["BUILTIN_ALIASES", "builtin_for", "eval_builtin"]

BUILTIN_ALIASES: dict[str, tuple[str, ...]] = {
    "recent_documents": ("recent_documents", "recents", "recent"),
    "owned_by": ("owned_by", "owned", "owner"),
    "badged": ("badged", "badges", "badge", "badged_by"),
    "type_is": ("type_is", "type", "kind"),
    "name_joinable": ("name_joinable", "joinable", "name_based", "joinability"),
    "favorites": ("favorites", "favorite", "starred"),
    "embedding_view": ("embedding_view", "embedding", "projection"),
}

_ALIAS_INDEX = {
    alias: builtin_id for builtin_id, aliases in BUILTIN_ALIASES.items() for alias in aliases
}


def builtin_for(name: str) -> str | None:
    """Built-in id for a provider display name, or None."""
    return _ALIAS_INDEX.get(normalize_name(name))


def _require(binding, input_type: InputType, kind: str) -> str:
    value = binding.values.get(input_type)
    if value is None:
        raise MissingInputError(("builtin", kind), (input_type,))
    return value


def _list_payload(artifacts: list[DataArtifact]) -> RepresentationPayload:
    return RepresentationPayload(
        Representation.LIST, items=tuple(PayloadItem(a.id) for a in artifacts)
    )


def _text_values(value) -> tuple[str, ...]:
    if isinstance(value, str):
        return (value,)
    if isinstance(value, tuple):
        return value
    return ()


def _recent_documents(binding, snapshot: CatalogSnapshot) -> RepresentationPayload:
    """Artifacts that carry a created_at timestamp, newest first."""
    dated = [
        (a, get_field(a, "created_at"))
        for a in snapshot
        if isinstance(get_field(a, "created_at"), Timestamp)
    ]
    dated.sort(key=lambda pair: (-pair[1].seconds, pair[0].id))
    return _list_payload([a for a, _ in dated])


def _owned_by(binding, snapshot: CatalogSnapshot) -> RepresentationPayload:
    user = _require(binding, InputType.USERID, "owned_by").casefold()
    return _list_payload(
        [
            a
            for a in snapshot
            if isinstance(get_field(a, "owner"), str)
            and get_field(a, "owner").casefold() == user
        ]
    )


def _badged(binding, snapshot: CatalogSnapshot) -> RepresentationPayload:
    badge = _require(binding, InputType.TEXT, "badged").casefold()
    return _list_payload(
        [
            a
            for a in snapshot
            if any(b.casefold() == badge for b in _text_values(get_field(a, "badge")))
        ]
    )


def _type_is(binding, snapshot: CatalogSnapshot) -> RepresentationPayload:
    kind = _require(binding, InputType.TEXT, "type_is").casefold()
    return _list_payload([a for a in snapshot if a.kind.casefold() == kind])


def _favorites(binding, snapshot: CatalogSnapshot) -> RepresentationPayload:
    return _list_payload([a for a in snapshot if get_field(a, "favorite") is True])


def _shared_columns(a: DataArtifact, b: DataArtifact) -> tuple[str, ...]:
    cols_a = {c.casefold() for c in (a.columns or ())}
    cols_b = {c.casefold() for c in (b.columns or ())}
    return tuple(sorted(cols_a & cols_b))


def _name_joinable(binding, snapshot: CatalogSnapshot) -> RepresentationPayload:
    """Connected component of tables joinable with the input table.

    Two tables are joinable when they share at least one column name
    (case-insensitive). Edges are emitted once per unordered pair, labeled
    with the shared column names. Unknown or non-table input yields an
    empty graph rather than an error.
    """
    table_id = _require(binding, InputType.TABLEID, "name_joinable")
    start = snapshot.get(table_id)
    if start is None or start.kind.casefold() != "table":
        return RepresentationPayload(Representation.GRAPH)

    tables = {a.id: a for a in snapshot if a.kind.casefold() == "table"}
    component = {start.id}
    queue = deque([start.id])
    while queue:
        current = tables[queue.popleft()]
        for other in tables.values():
            if other.id not in component and _shared_columns(current, other):
                component.add(other.id)
                queue.append(other.id)

    ordered = sorted(component)
    edges = []
    for i, aid in enumerate(ordered):
        for bid in ordered[i + 1 :]:
            shared = _shared_columns(tables[aid], tables[bid])
            if shared:
                edges.append(Edge(source=aid, target=bid, label=",".join(shared)))
    return RepresentationPayload(
        Representation.GRAPH,
        items=tuple(PayloadItem(aid) for aid in ordered),
        edges=tuple(edges),
    )


def _embedding_view(binding, snapshot: CatalogSnapshot) -> RepresentationPayload:
    placed = [a for a in snapshot if a.position is not None]
    return RepresentationPayload(
        Representation.EMBEDDING,
        items=tuple(PayloadItem(a.id) for a in placed),
        positions={a.id: a.position for a in placed},
    )


_IMPLS: dict[str, Callable[..., RepresentationPayload]] = {
    "recent_documents": _recent_documents,
    "owned_by": _owned_by,
    "badged": _badged,
    "type_is": _type_is,
    "name_joinable": _name_joinable,
    "favorites": _favorites,
    "embedding_view": _embedding_view,
}


def eval_builtin(kind: str, binding, snapshot: CatalogSnapshot) -> RepresentationPayload:
    """Run a built-in provider. ``kind`` must be one of the seven ids."""
    impl = _IMPLS.get(kind)
    if impl is None:
        raise KeyError(f"not a built-in provider id: {kind!r}")
    return impl(binding, snapshot)
