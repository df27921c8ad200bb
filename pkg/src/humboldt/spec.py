"""Provider specification documents.

A spec document is UTF-8 JSON describing the metadata providers a deployment
offers, an optional global ranking, and optional free-form custom content
(team home pages live there under the field name ``home``). Parsing is strict
about provider objects (unknown keys rejected) and deliberately lenient about
custom content, which round-trips verbatim.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping

from .errors import SchemaError, SpecSyntaxError

__all__ = [
    "Representation",
    "InputType",
    "InputSlot",
    "RankingWeights",
    "ProviderSpec",
    "CustomContent",
    "TeamPage",
    "SpecDocument",
    "Violation",
    "ResolveWarning",
    "parse_spec",
    "serialize_spec",
    "validate_spec",
    "resolve_custom_content",
    "effective_visibility",
    "normalize_name",
]


class Representation(str, Enum):
    """How a provider's result is meant to be displayed."""

    TILES = "TILES"
    LIST = "LIST"
    HIERARCHY = "HIERARCHY"
    GRAPH = "GRAPH"
    CATEGORIES = "CATEGORIES"
    EMBEDDING = "EMBEDDING"


class InputType(str, Enum):
    """What kind of value an input slot consumes."""

    TABLEID = "TABLEID"
    USERID = "USERID"
    TEXT = "TEXT"


@dataclass(frozen=True)
class InputSlot:
    input_type: InputType
    required: bool = False


@dataclass(frozen=True)
class RankingWeights:
    """Ordered (field, weight) pairs; weights are finite, may be negative."""

    entries: tuple[tuple[str, float], ...] = ()

    def as_dict(self) -> dict[str, float]:
        return dict(self.entries)


@dataclass(frozen=True)
class ProviderSpec:
    type_: str
    name: str
    representation: Representation
    description: str = ""
    inputs: tuple[InputSlot, ...] = ()
    endpoint: str | None = None
    # Open-keyed surface map; absent surfaces default to visible.
    visible: Mapping[str, bool] = field(default_factory=dict)
    ranking: RankingWeights | None = None

    @property
    def key(self) -> tuple[str, str]:
        return (self.type_, self.name)

    def required_inputs(self) -> tuple[InputType, ...]:
        return tuple(s.input_type for s in self.inputs if s.required)


@dataclass(frozen=True)
class TeamPage:
    name: str
    data: tuple[str, ...]


@dataclass(frozen=True)
class CustomContent:
    """One entry of the document's ``custom`` list, kept verbatim.

    Only the ``field`` key is interpreted; everything else (usually a
    ``content`` list) is free-form JSON an engine may or may not understand.
    """

    field: str
    entry: Mapping[str, Any]

    @property
    def content(self) -> Any:
        return self.entry.get("content")


@dataclass(frozen=True)
class SpecDocument:
    providers: tuple[ProviderSpec, ...] = ()
    global_ranking: RankingWeights | None = None
    custom: tuple[CustomContent, ...] = ()
    # Unknown top-level keys, retained verbatim for round-tripping.
    extra: Mapping[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class Violation:
    """A semantic problem found by validate_spec. Not an exception."""

    code: str
    path: str
    message: str


@dataclass(frozen=True)
class ResolveWarning:
    message: str
    team: str | None = None
    reference: str | None = None


_DOC_KEYS = frozenset({"providers", "ranking", "custom"})
_PROVIDER_KEYS = frozenset(
    {"type", "name", "description", "representation", "input", "endpoint", "visible", "ranking"}
)

_NORMALIZE_RE = re.compile(r"[\s\-]+")


def normalize_name(name: str) -> str:
    """Lowercase a display name and collapse spaces/hyphens to underscores."""
    return _NORMALIZE_RE.sub("_", name.strip().casefold())


def _reject_constant(token: str) -> float:
    raise SpecSyntaxError(f"non-finite number {token!r} is not allowed")


def _load_json(text: bytes | str) -> Any:
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SpecSyntaxError(f"document is not UTF-8: {exc}") from exc
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise SpecSyntaxError(str(exc), position=exc.pos) from exc


def _expect_str(value: Any, path: str, *, nonempty: bool = False) -> str:
    if not isinstance(value, str):
        raise SchemaError("expected a string", path)
    if nonempty and not value:
        raise SchemaError("must be non-empty", path)
    return value


def _parse_weights(value: Any, path: str) -> RankingWeights:
    if not isinstance(value, list):
        raise SchemaError("expected a list of {field, weight} objects", path)
    entries: list[tuple[str, float]] = []
    for i, raw in enumerate(value):
        epath = f"{path}[{i}]"
        if not isinstance(raw, dict):
            raise SchemaError("expected an object", epath)
        unknown = set(raw) - {"field", "weight"}
        if unknown:
            raise SchemaError(f"unknown key {sorted(unknown)[0]!r}", epath)
        if "field" not in raw or "weight" not in raw:
            raise SchemaError("needs both 'field' and 'weight'", epath)
        fname = _expect_str(raw["field"], f"{epath}.field")
        weight = raw["weight"]
        if isinstance(weight, bool) or not isinstance(weight, (int, float)):
            raise SchemaError("weight must be a number", f"{epath}.weight")
        if not math.isfinite(weight):
            raise SchemaError("weight must be finite", f"{epath}.weight")
        entries.append((fname, float(weight)))
    return RankingWeights(tuple(entries))


def _parse_input_slot(raw: Any, path: str) -> InputSlot:
    if not isinstance(raw, dict):
        raise SchemaError("expected an object", path)
    unknown = set(raw) - {"type", "required"}
    if unknown:
        raise SchemaError(f"unknown key {sorted(unknown)[0]!r}", path)
    if "type" not in raw:
        raise SchemaError("missing required key 'type'", path)
    tname = _expect_str(raw["type"], f"{path}.type")
    try:
        itype = InputType(tname)
    except ValueError:
        raise SchemaError(f"unknown input type {tname!r}", f"{path}.type") from None
    required = raw.get("required", False)
    if not isinstance(required, bool):
        raise SchemaError("expected a boolean", f"{path}.required")
    return InputSlot(itype, required)


def _parse_provider(raw: Any, path: str) -> ProviderSpec:
    if not isinstance(raw, dict):
        raise SchemaError("expected a provider object", path)

    def sub(key: str) -> str:
        return f"{path}.{key}" if path else key

    unknown = set(raw) - _PROVIDER_KEYS
    if unknown:
        raise SchemaError(f"unknown key {sorted(unknown)[0]!r}", path or "provider")
    for needed in ("type", "name", "representation"):
        if needed not in raw:
            raise SchemaError(f"missing required key {needed!r}", path or "provider")

    type_ = _expect_str(raw["type"], sub("type"), nonempty=True)
    name = _expect_str(raw["name"], sub("name"), nonempty=True)
    rep_name = _expect_str(raw["representation"], sub("representation"))
    try:
        representation = Representation(rep_name)
    except ValueError:
        raise SchemaError(
            f"unknown representation {rep_name!r}", sub("representation")
        ) from None

    description = raw.get("description", "")
    if not isinstance(description, str):
        raise SchemaError("expected a string", sub("description"))

    raw_inputs = raw.get("input", [])
    if not isinstance(raw_inputs, list):
        raise SchemaError("expected a list", sub("input"))
    inputs = tuple(
        _parse_input_slot(slot, f"{sub('input')}[{i}]") for i, slot in enumerate(raw_inputs)
    )

    endpoint = raw.get("endpoint")
    if endpoint is not None and not isinstance(endpoint, str):
        raise SchemaError("expected a string", sub("endpoint"))

    raw_visible = raw.get("visible", {})
    if not isinstance(raw_visible, dict):
        raise SchemaError("expected an object of booleans", sub("visible"))
    visible: dict[str, bool] = {}
    for key, val in raw_visible.items():
        if not isinstance(val, bool):
            raise SchemaError("expected a boolean", f"{sub('visible')}.{key}")
        visible[key] = val

    ranking = None
    if raw.get("ranking") is not None:
        ranking = _parse_weights(raw["ranking"], sub("ranking"))

    return ProviderSpec(
        type_=type_,
        name=name,
        representation=representation,
        description=description,
        inputs=inputs,
        endpoint=endpoint,
        visible=visible,
        ranking=ranking,
    )


def _parse_custom_entry(raw: Any, path: str) -> CustomContent:
    if not isinstance(raw, dict):
        raise SchemaError("expected an object", path)
    if "field" not in raw:
        raise SchemaError("missing required key 'field'", path)
    fname = _expect_str(raw["field"], f"{path}.field", nonempty=True)
    return CustomContent(field=fname, entry=raw)


def parse_spec(text: bytes | str) -> SpecDocument:
    """Parse a spec document (or a bare single-provider object) from JSON.

    Raises SpecSyntaxError for malformed JSON and SchemaError (with a path)
    for shape problems. Unknown top-level keys are retained verbatim; unknown
    keys inside a provider object are rejected.
    """
    data = _load_json(text)
    if not isinstance(data, dict):
        raise SchemaError("top level must be an object", "")

    # A document that *is* one provider object is accepted as a one-provider
    # document, so provider specs can be authored and checked standalone.
    if not (_DOC_KEYS & set(data)) and {"type", "name", "representation"} <= set(data):
        return SpecDocument(providers=(_parse_provider(data, ""),))

    raw_providers = data.get("providers", [])
    if not isinstance(raw_providers, list):
        raise SchemaError("expected a list", "providers")
    providers = tuple(
        _parse_provider(p, f"providers[{i}]") for i, p in enumerate(raw_providers)
    )

    global_ranking = None
    if data.get("ranking") is not None:
        global_ranking = _parse_weights(data["ranking"], "ranking")

    raw_custom = data.get("custom", [])
    if not isinstance(raw_custom, list):
        raise SchemaError("expected a list", "custom")
    custom = tuple(
        _parse_custom_entry(entry, f"custom[{i}]") for i, entry in enumerate(raw_custom)
    )

    extra = {k: v for k, v in data.items() if k not in _DOC_KEYS}
    return SpecDocument(
        providers=providers, global_ranking=global_ranking, custom=custom, extra=extra
    )


def _weights_json(weights: RankingWeights) -> list[dict[str, Any]]:
    return [{"field": f, "weight": w} for f, w in weights.entries]


def provider_json(spec: ProviderSpec) -> dict[str, Any]:
    """Wire-shaped dict for one provider, deterministic key order."""
    out: dict[str, Any] = {
        "type": spec.type_,
        "name": spec.name,
        "description": spec.description,
        "representation": spec.representation.value,
        "input": [
            {"type": s.input_type.value, "required": s.required} for s in spec.inputs
        ],
        "visible": dict(spec.visible),
    }
    if spec.endpoint is not None:
        out["endpoint"] = spec.endpoint
    if spec.ranking is not None:
        out["ranking"] = _weights_json(spec.ranking)
    return out


def serialize_spec(doc: SpecDocument) -> str:
    """Canonical JSON text for a document; parse(serialize(d)) == d."""
    out: dict[str, Any] = {"providers": [provider_json(p) for p in doc.providers]}
    if doc.global_ranking is not None:
        out["ranking"] = _weights_json(doc.global_ranking)
    if doc.custom:
        out["custom"] = [dict(c.entry) for c in doc.custom]
    for key, value in doc.extra.items():
        out[key] = value
    return json.dumps(out, indent=2, ensure_ascii=False) + "\n"


def _check_weights(weights: RankingWeights, path: str, out: list[Violation]) -> None:
    seen: set[str] = set()
    for i, (fname, _w) in enumerate(weights.entries):
        if not fname:
            out.append(
                Violation("empty_ranking_field", f"{path}[{i}].field", "ranking field is empty")
            )
        elif fname in seen:
            out.append(
                Violation(
                    "duplicate_ranking_field",
                    f"{path}[{i}].field",
                    f"ranking field {fname!r} appears more than once",
                )
            )
        seen.add(fname)


def validate_spec(doc: SpecDocument) -> list[Violation]:
    """Semantic checks over a parsed document. Empty list means valid."""
    out: list[Violation] = []
    seen: set[tuple[str, str]] = set()
    for i, spec in enumerate(doc.providers):
        path = f"providers[{i}]"
        if spec.key in seen:
            out.append(
                Violation(
                    "duplicate_provider_name",
                    path,
                    f"duplicate provider ({spec.type_!r}, {spec.name!r})",
                )
            )
        seen.add(spec.key)
        if spec.endpoint == "":
            out.append(Violation("empty_endpoint", f"{path}.endpoint", "endpoint is empty"))
        if spec.ranking is not None:
            _check_weights(spec.ranking, f"{path}.ranking", out)
    if doc.global_ranking is not None:
        _check_weights(doc.global_ranking, "ranking", out)
    return out


def _team_pages(content: Any) -> tuple[list[TeamPage], list[str]]:
    """Extract well-formed team pages; report malformed entries as messages."""
    pages: list[TeamPage] = []
    problems: list[str] = []
    if not isinstance(content, list):
        return pages, ["content is not a list of team pages"]
    for i, raw in enumerate(content):
        if (
            isinstance(raw, dict)
            and isinstance(raw.get("name"), str)
            and isinstance(raw.get("data"), list)
            and all(isinstance(d, str) for d in raw["data"])
        ):
            pages.append(TeamPage(name=raw["name"], data=tuple(raw["data"])))
        else:
            problems.append(f"content[{i}] is not a valid team page")
    return pages, problems


def resolve_custom_content(
    doc: SpecDocument, field_name: str = "home"
) -> tuple[dict[str, tuple[ProviderSpec, ...]], list[ResolveWarning]]:
    """Resolve team home pages to provider specs.

    Provider references resolve by exact name, first document occurrence wins.
    Unresolved references and malformed pages become warnings, never errors;
    later pages for the same team replace earlier ones.
    """
    by_name: dict[str, ProviderSpec] = {}
    for spec in doc.providers:
        by_name.setdefault(spec.name, spec)

    resolved: dict[str, tuple[ProviderSpec, ...]] = {}
    warnings: list[ResolveWarning] = []
    for entry in doc.custom:
        if entry.field != field_name:
            continue
        pages, problems = _team_pages(entry.content)
        warnings.extend(ResolveWarning(message=p) for p in problems)
        for page in pages:
            specs: list[ProviderSpec] = []
            for ref in page.data:
                spec = by_name.get(ref)
                if spec is None:
                    warnings.append(
                        ResolveWarning(
                            message=f"team {page.name!r} references unknown provider {ref!r}",
                            team=page.name,
                            reference=ref,
                        )
                    )
                else:
                    specs.append(spec)
            resolved[page.name] = tuple(specs)
    return resolved, warnings


def effective_visibility(spec: ProviderSpec, surface: str) -> bool:
    """Whether the provider shows up on a surface; absent keys default true."""
    return bool(spec.visible.get(surface, True))
