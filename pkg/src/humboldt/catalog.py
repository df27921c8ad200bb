"""Data artifact catalogs.

A catalog file is a JSON array of artifact objects. Metadata values are typed
by their JSON type (number, string, boolean, list of strings) with timestamps
written as ``{"ts": <seconds since epoch>}``. Snapshots are immutable; a
refresh builds a new snapshot rather than mutating one in place.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Iterator, Union

from .errors import CatalogSyntaxError, DuplicateIdError

__all__ = [
    "Timestamp",
    "MetadataValue",
    "DataArtifact",
    "CatalogSnapshot",
    "load_catalog",
    "serialize_catalog",
    "get_field",
    "keyword_match",
]


@dataclass(frozen=True)
class Timestamp:
    """Seconds since the Unix epoch, UTC, non-negative."""

    seconds: float


# number | text | boolean | text-list | timestamp
MetadataValue = Union[int, float, str, bool, tuple, Timestamp]


@dataclass(frozen=True)
class DataArtifact:
    id: str
    kind: str
    name: str
    fields: dict[str, MetadataValue] = field(default_factory=dict)
    columns: tuple[str, ...] | None = None
    position: tuple[float, float] | None = None


@dataclass(frozen=True)
class CatalogSnapshot:
    """Immutable view of the catalog; file order is preserved."""

    artifacts: dict[str, DataArtifact]
    version: int = 0

    def get(self, artifact_id: str) -> DataArtifact | None:
        return self.artifacts.get(artifact_id)

    def ids(self) -> frozenset[str]:
        return frozenset(self.artifacts)

    def __iter__(self) -> Iterator[DataArtifact]:
        return iter(self.artifacts.values())

    def __len__(self) -> int:
        return len(self.artifacts)


def _finite_number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CatalogSyntaxError(f"{where}: expected a number")
    if not math.isfinite(value):
        raise CatalogSyntaxError(f"{where}: number must be finite")
    return value


def _decode_field(value: Any, where: str) -> MetadataValue:
    if isinstance(value, bool):
        return value
    if isinstance(value, (int, float)):
        return _finite_number(value, where)
    if isinstance(value, str):
        return value
    if isinstance(value, list):
        if not all(isinstance(v, str) for v in value):
            raise CatalogSyntaxError(f"{where}: lists may only contain strings")
        return tuple(value)
    if isinstance(value, dict):
        if set(value) != {"ts"}:
            raise CatalogSyntaxError(f"{where}: objects must be timestamps {{'ts': seconds}}")
        ts = _finite_number(value["ts"], f"{where}.ts")
        if ts < 0:
            raise CatalogSyntaxError(f"{where}.ts: timestamp must be non-negative")
        return Timestamp(ts)
    raise CatalogSyntaxError(f"{where}: unsupported value type")


def _decode_artifact(raw: Any, where: str) -> DataArtifact:
    if not isinstance(raw, dict):
        raise CatalogSyntaxError(f"{where}: expected an object")
    unknown = set(raw) - {"id", "kind", "name", "fields", "columns", "position"}
    if unknown:
        raise CatalogSyntaxError(f"{where}: unknown key {sorted(unknown)[0]!r}")
    for needed in ("id", "kind", "name"):
        if not isinstance(raw.get(needed), str) or not raw[needed]:
            raise CatalogSyntaxError(f"{where}.{needed}: expected a non-empty string")

    raw_fields = raw.get("fields", {})
    if not isinstance(raw_fields, dict):
        raise CatalogSyntaxError(f"{where}.fields: expected an object")
    fields = {
        key: _decode_field(val, f"{where}.fields.{key}") for key, val in raw_fields.items()
    }

    columns = None
    if raw.get("columns") is not None:
        if not isinstance(raw["columns"], list) or not all(
            isinstance(c, str) for c in raw["columns"]
        ):
            raise CatalogSyntaxError(f"{where}.columns: expected a list of strings")
        columns = tuple(raw["columns"])

    position = None
    if raw.get("position") is not None:
        pos = raw["position"]
        if not isinstance(pos, dict) or set(pos) != {"x", "y"}:
            raise CatalogSyntaxError(f"{where}.position: expected {{'x', 'y'}}")
        position = (
            float(_finite_number(pos["x"], f"{where}.position.x")),
            float(_finite_number(pos["y"], f"{where}.position.y")),
        )

    return DataArtifact(
        id=raw["id"],
        kind=raw["kind"],
        name=raw["name"],
        fields=fields,
        columns=columns,
        position=position,
    )


def load_catalog(source: bytes | str, version: int = 0) -> CatalogSnapshot:
    """Load a snapshot from catalog JSON. Duplicate ids are rejected."""
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        data = json.loads(source)
    except json.JSONDecodeError as exc:
        raise CatalogSyntaxError(f"catalog is not valid JSON: {exc}") from exc
    if not isinstance(data, list):
        raise CatalogSyntaxError("catalog top level must be an array")

    artifacts: dict[str, DataArtifact] = {}
    for i, raw in enumerate(data):
        artifact = _decode_artifact(raw, f"[{i}]")
        if artifact.id in artifacts:
            raise DuplicateIdError(artifact.id)
        artifacts[artifact.id] = artifact
    return CatalogSnapshot(artifacts=artifacts, version=version)


def _encode_field(value: MetadataValue) -> Any:
    if isinstance(value, Timestamp):
        return {"ts": value.seconds}
    if isinstance(value, tuple):
        return list(value)
    return value


def serialize_catalog(snapshot: CatalogSnapshot) -> str:
    """Catalog JSON for a snapshot; load(serialize(s)) equals s."""
    out = []
    for artifact in snapshot:
        row: dict[str, Any] = {
            "id": artifact.id,
            "kind": artifact.kind,
            "name": artifact.name,
            "fields": {k: _encode_field(v) for k, v in artifact.fields.items()},
        }
        if artifact.columns is not None:
            row["columns"] = list(artifact.columns)
        if artifact.position is not None:
            row["position"] = {"x": artifact.position[0], "y": artifact.position[1]}
        out.append(row)
    return json.dumps(out, indent=2, ensure_ascii=False) + "\n"


def get_field(artifact: DataArtifact, name: str) -> MetadataValue | None:
    """Case-insensitive metadata lookup; first matching key wins."""
    want = name.casefold()
    for key, value in artifact.fields.items():
        if key.casefold() == want:
            return value
    return None


def keyword_match(artifact: DataArtifact, keyword: str) -> bool:
    """Case-insensitive substring match over name, kind, and textual fields.

    Numbers, booleans, and timestamps never match a keyword.
    """
    needle = keyword.strip().casefold()
    if not needle:
        return False
    if needle in artifact.name.casefold() or needle in artifact.kind.casefold():
        return True
    for value in artifact.fields.values():
        if isinstance(value, str):
            if needle in value.casefold():
                return True
        elif isinstance(value, tuple):
            if any(needle in item.casefold() for item in value):
                return True
    return False
