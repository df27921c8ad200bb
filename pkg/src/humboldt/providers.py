"""Provider registry, input binding, and fetching.

Specs with an endpoint are called over HTTP (POST, JSON in/out); specs
without one are wired to built-ins by normalized name. Fetch results are
validated against the declared representation and the catalog before anyone
else sees them.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import httpx

from .builtins import builtin_for, eval_builtin
from .catalog import CatalogSnapshot, DataArtifact, get_field
from .errors import (
    MissingInputError,
    ProviderUnavailableError,
    UnknownBuiltinError,
    UnknownProviderError,
)
from .payload import RepresentationPayload, parse_payload, validate_payload
from .spec import (
    InputType,
    ProviderSpec,
    SpecDocument,
    effective_visibility,
    normalize_name,
)

__all__ = [
    "InputBinding",
    "MissingInput",
    "ProviderHandle",
    "ProviderRegistry",
    "register_providers",
    "applicable_providers",
    "bind_inputs",
    "fetch",
    "DEFAULT_TIMEOUT_MS",
    "TIMEOUT_ENV",
]

DEFAULT_TIMEOUT_MS = 5000
TIMEOUT_ENV = "HUMBOLDT_PROVIDER_TIMEOUT_MS"


@dataclass(frozen=True)
class InputBinding:
    """Bound input values, keyed by input type."""

    values: dict[InputType, str] = field(default_factory=dict)

    def as_wire(self) -> dict[str, str]:
        return {itype.value: value for itype, value in self.values.items()}

    def memo_key(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted((t.value, v) for t, v in self.values.items()))


@dataclass(frozen=True)
class MissingInput:
    """Returned by bind_inputs when required slots stay unfilled."""

    missing: tuple[InputType, ...]


@dataclass(frozen=True)
class ProviderHandle:
    spec: ProviderSpec
    builtin_id: str | None = None

    @property
    def is_builtin(self) -> bool:
        return self.builtin_id is not None


class ProviderRegistry:
    """All registered providers of one deployment, in document order."""

    def __init__(self, doc: SpecDocument):
        self._handles: dict[tuple[str, str], ProviderHandle] = {}
        for spec in doc.providers:
            if spec.endpoint is None:
                builtin_id = builtin_for(spec.name)
                if builtin_id is None:
                    raise UnknownBuiltinError(spec.type_, spec.name)
                handle = ProviderHandle(spec, builtin_id)
            else:
                handle = ProviderHandle(spec)
            self._handles[spec.key] = handle

    def specs(self) -> tuple[ProviderSpec, ...]:
        return tuple(h.spec for h in self._handles.values())

    def get(self, type_: str, name: str) -> ProviderHandle | None:
        return self._handles.get((type_, name))

    def handle_for(self, spec: ProviderSpec) -> ProviderHandle:
        handle = self._handles.get(spec.key)
        if handle is None:
            raise UnknownProviderError(spec.name)
        return handle

    def resolve_alias(self, alias: str) -> ProviderHandle:
        """Match a query-language alias against provider names.

        Matching is case-insensitive with spaces/hyphens collapsed to
        underscores; ambiguity is an error listing the candidates.
        """
        wanted = normalize_name(alias)
        matches = [
            h for h in self._handles.values() if normalize_name(h.spec.name) == wanted
        ]
        if not matches:
            available = tuple(
                sorted(normalize_name(h.spec.name) for h in self._handles.values())
            )
            raise UnknownProviderError(alias, available)
        if len(matches) > 1:
            raise UnknownProviderError(
                alias, tuple(f"{h.spec.type_}/{h.spec.name}" for h in matches)
            )
        return matches[0]


def register_providers(doc: SpecDocument) -> ProviderRegistry:
    return ProviderRegistry(doc)


def _selection_owner(selection: DataArtifact | None) -> str | None:
    if selection is None:
        return None
    owner = get_field(selection, "owner")
    return owner if isinstance(owner, str) and owner else None


def _derive_text(spec: ProviderSpec, selection: DataArtifact | None) -> str | None:
    """Selection-derived TEXT value, decided by the provider's category.

    Badge-flavored providers take the selection's first badge; type-flavored
    ones take its kind. Anything else has no derivation.
    """
    if selection is None:
        return None
    category = normalize_name(spec.type_)
    if category in ("badged", "badge", "badges"):
        badge = get_field(selection, "badge")
        if isinstance(badge, str) and badge:
            return badge
        if isinstance(badge, tuple) and badge:
            return badge[0]
        return None
    if category in ("type", "kind", "type_is"):
        return selection.kind
    return None


def _is_table(selection: DataArtifact | None) -> bool:
    return selection is not None and selection.kind.casefold() == "table"


def _bindable(slot_type: InputType, spec: ProviderSpec, selection: DataArtifact | None) -> bool:
    if slot_type is InputType.TABLEID:
        return _is_table(selection)
    if slot_type is InputType.USERID:
        return _selection_owner(selection) is not None
    return _derive_text(spec, selection) is not None


def applicable_providers(
    registry: ProviderRegistry,
    surface: str,
    selection: DataArtifact | None = None,
    hidden: Iterable[tuple[str, str]] = (),
) -> list[ProviderSpec]:
    """Providers visible on a surface whose required inputs the selection
    can fill. With no selection only zero-required-input providers qualify."""
    hidden_keys = set(hidden)
    out = []
    for spec in registry.specs():
        if spec.key in hidden_keys:
            continue
        if not effective_visibility(spec, surface):
            continue
        if all(_bindable(t, spec, selection) for t in spec.required_inputs()):
            out.append(spec)
    return out


def _resolve_tableid(arg: str, snapshot: CatalogSnapshot | None) -> str:
    """Accept either an artifact id or a unique table name."""
    if snapshot is None or snapshot.get(arg) is not None:
        return arg
    wanted = arg.casefold()
    matches = [
        a.id
        for a in snapshot
        if a.kind.casefold() == "table" and a.name.casefold() == wanted
    ]
    return matches[0] if len(matches) == 1 else arg


def bind_inputs(
    spec: ProviderSpec,
    selection: DataArtifact | None = None,
    free_args: Sequence[str] = (),
    snapshot: CatalogSnapshot | None = None,
) -> InputBinding | MissingInput:
    """Fill the spec's input slots from a selection and/or free arguments.

    TABLEID comes from a table selection, else from the next free argument;
    USERID prefers an explicit argument over the selection's owner field;
    TEXT prefers an argument, falling back to a selection-derived value.
    Unfilled required slots are reported as a MissingInput value.
    """
    args = list(free_args)
    values: dict[InputType, str] = {}
    missing: list[InputType] = []
    for slot in spec.inputs:
        bound: str | None = None
        if slot.input_type is InputType.TABLEID:
            if _is_table(selection):
                bound = selection.id
            elif args:
                bound = _resolve_tableid(args.pop(0), snapshot)
        elif slot.input_type is InputType.USERID:
            if args:
                bound = args.pop(0)
            else:
                bound = _selection_owner(selection)
        else:
            if args:
                bound = args.pop(0)
            else:
                bound = _derive_text(spec, selection)
        if bound is None:
            if slot.required:
                missing.append(slot.input_type)
        else:
            values[slot.input_type] = bound
    if missing:
        return MissingInput(tuple(missing))
    return InputBinding(values)


def _timeout_seconds(timeout_ms: int | None) -> float:
    if timeout_ms is None:
        raw = os.environ.get(TIMEOUT_ENV, "")
        try:
            timeout_ms = int(raw) if raw else DEFAULT_TIMEOUT_MS
        except ValueError:
            timeout_ms = DEFAULT_TIMEOUT_MS
    return timeout_ms / 1000.0


def fetch(
    handle: ProviderHandle,
    binding: InputBinding,
    snapshot: CatalogSnapshot,
    *,
    base_url: str | None = None,
    timeout_ms: int | None = None,
) -> RepresentationPayload:
    """Run a provider and validate its payload.

    Built-ins run in process. HTTP providers get a POST to
    ``{base_url}/{endpoint}`` with ``{"input": {...}}`` and must answer 200
    with payload JSON inside the timeout (HUMBOLDT_PROVIDER_TIMEOUT_MS,
    default 5000 ms).
    """
    spec = handle.spec
    unfilled = tuple(
        t for t in spec.required_inputs() if t not in binding.values
    )
    if unfilled:
        raise MissingInputError(spec.key, unfilled)

    if handle.is_builtin:
        payload = eval_builtin(handle.builtin_id, binding, snapshot)
    else:
        if base_url is None:
            raise ProviderUnavailableError(
                f"provider {spec.name!r} needs an HTTP base URL and none is configured"
            )
        url = base_url.rstrip("/") + "/" + (spec.endpoint or "").lstrip("/")
        try:
            response = httpx.post(
                url,
                json={"input": binding.as_wire()},
                timeout=_timeout_seconds(timeout_ms),
            )
        except httpx.HTTPError as exc:
            raise ProviderUnavailableError(f"{spec.name}: {exc}") from exc
        if response.status_code != 200:
            raise ProviderUnavailableError(
                f"{spec.name}: endpoint answered HTTP {response.status_code}"
            )
        try:
            data = response.json()
        except ValueError as exc:
            raise ProviderUnavailableError(f"{spec.name}: response is not JSON") from exc
        payload = parse_payload(data)

    return validate_payload(payload, spec.representation, snapshot)
