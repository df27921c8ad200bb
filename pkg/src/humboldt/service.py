"""Discovery surfaces glued together: overviews, exploration, search,
view filtering, suggestions, and config handling.

One service instance owns a validated spec document, a provider registry,
a catalog snapshot, and a config store. Provider failures inside overview
and exploration pages are isolated per view; they never take down the page.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable

from .catalog import CatalogSnapshot, DataArtifact
from .config import AdminConfig, ConfigStore, TeamConfig, UserConfig
from .errors import (
    DiscoveryError,
    MissingInputError,
    SchemaError,
    UnauthorizedScopeError,
    UnknownArtifactError,
    UnknownProviderError,
    UnknownProviderReferenceError,
)
from .payload import RepresentationPayload, prune_payload
from .providers import (
    InputBinding,
    MissingInput,
    ProviderRegistry,
    applicable_providers,
    bind_inputs,
    fetch,
)
from .query import Suggestion, evaluate, parse_query, suggest
from .ranking import rank
from .spec import (
    InputType,
    ProviderSpec,
    SpecDocument,
    resolve_custom_content,
    validate_spec,
)

__all__ = ["ViewResult", "DiscoveryService"]

ProviderKey = tuple[str, str]

_ROLE_RANK = {"user": 0, "team-admin": 1, "admin": 2}


@dataclass(frozen=True)
class ViewResult:
    """One rendered (or failed) provider view."""

    spec: ProviderSpec
    payload: RepresentationPayload | None = None
    error: DiscoveryError | None = None


class DiscoveryService:
    def __init__(
        self,
        doc: SpecDocument,
        snapshot: CatalogSnapshot,
        *,
        state_path=None,
        provider_base: str | None = None,
        timeout_ms: int | None = None,
    ):
        violations = validate_spec(doc)
        if violations:
            summary = "; ".join(f"{v.path}: {v.message}" for v in violations)
            raise ValueError(f"spec document is invalid: {summary}")
        self.doc = doc
        self.snapshot = snapshot
        self.registry = ProviderRegistry(doc)
        self.store = ConfigStore(state_path)
        self.provider_base = provider_base
        self.timeout_ms = timeout_ms
        self._home_pages, self.custom_warnings = resolve_custom_content(doc)

    # -- provider selection ------------------------------------------------

    def _hidden_for(self, user_id: str) -> frozenset[ProviderKey]:
        user = self.store.user(user_id)
        return frozenset(user.hidden_providers) | self.store.admin().disabled_providers

    def providers_for(self, surface: str, user_id: str) -> list[ProviderSpec]:
        """Providers the caller may see on a surface (selection-agnostic)."""
        hidden = self._hidden_for(user_id)
        return [
            spec
            for spec in self.registry.specs()
            if spec.key not in hidden
            and (surface == "" or bool(spec.visible.get(surface, True)))
        ]

    def _apply_order(
        self, specs: list[ProviderSpec], order: tuple[ProviderKey, ...]
    ) -> list[ProviderSpec]:
        if not order:
            return specs
        position = {key: i for i, key in enumerate(order)}
        listed = sorted(
            (s for s in specs if s.key in position), key=lambda s: position[s.key]
        )
        rest = [s for s in specs if s.key not in position]
        return listed + rest

    def _fetch_view(
        self, spec: ProviderSpec, binding: InputBinding | MissingInput
    ) -> ViewResult:
        try:
            if isinstance(binding, MissingInput):
                raise MissingInputError(spec.key, binding.missing)
            payload = fetch(
                self.registry.handle_for(spec),
                binding,
                self.snapshot,
                base_url=self.provider_base,
                timeout_ms=self.timeout_ms,
            )
            return ViewResult(spec=spec, payload=payload)
        except DiscoveryError as exc:
            return ViewResult(spec=spec, error=exc)

    # -- surfaces ------------------------------------------------------------

    def overviews(self, user_id: str) -> list[ViewResult]:
        """The landing page: the user's team home page when one is
        configured, otherwise every discovery-visible provider that needs
        no input. Failing providers become error placeholders."""
        user = self.store.user(user_id)
        hidden = self._hidden_for(user_id)

        selected: list[ProviderSpec] = []
        if user.team:
            team_cfg = self.store.team(user.team)
            if team_cfg.home_providers:
                for key in team_cfg.home_providers:
                    handle = self.registry.get(*key)
                    if handle is not None:
                        selected.append(handle.spec)
            elif user.team in self._home_pages:
                selected = list(self._home_pages[user.team])
        if not selected:
            selected = [
                spec
                for spec in self.registry.specs()
                if bool(spec.visible.get("discovery", True))
                and not spec.required_inputs()
            ]

        selected = [s for s in selected if s.key not in hidden]
        selected = self._apply_order(selected, user.provider_order)
        return [
            self._fetch_view(spec, bind_inputs(spec, None, (), self.snapshot))
            for spec in selected
        ]

    def explore(self, artifact_id: str, user_id: str) -> list[ViewResult]:
        """Views applicable to one selected artifact, inputs bound from it."""
        selection = self.snapshot.get(artifact_id)
        if selection is None:
            raise UnknownArtifactError(artifact_id)
        hidden = self._hidden_for(user_id)
        specs = applicable_providers(self.registry, "exploration", selection, hidden)
        return [
            self._fetch_view(spec, bind_inputs(spec, selection, (), self.snapshot))
            for spec in specs
        ]

    def search(self, query_text: str, user_id: str) -> list[str]:
        """Evaluate a query over the whole catalog, ranked globally."""
        ast = parse_query(query_text)
        result = evaluate(
            ast,
            self.snapshot.ids(),
            self.snapshot,
            self.registry,
            hidden=self._hidden_for(user_id),
            base_url=self.provider_base,
            timeout_ms=self.timeout_ms,
        )
        return rank(
            [(aid, ()) for aid in result.ids], self.snapshot, self.doc.global_ranking
        )

    def filter_view(
        self,
        type_: str,
        name: str,
        query_text: str = "",
        inputs: dict[str, str] | None = None,
        user_id: str = "anonymous",
    ) -> ViewResult:
        """Fetch one provider view and narrow it by a query.

        The query's scope is the payload's own items; pruning preserves the
        representation (edges need both endpoints, orphaned subtrees drop).
        """
        hidden = self._hidden_for(user_id)
        handle = self.registry.get(type_, name)
        if handle is None or handle.spec.key in hidden:
            raise UnknownProviderError(f"{type_}/{name}")
        spec = handle.spec

        values: dict[InputType, str] = {}
        for raw_key, raw_value in (inputs or {}).items():
            try:
                values[InputType(raw_key)] = raw_value
            except ValueError:
                raise MissingInputError(spec.key, (raw_key,)) from None
        missing = tuple(t for t in spec.required_inputs() if t not in values)
        if missing:
            raise MissingInputError(spec.key, missing)

        payload = fetch(
            handle,
            InputBinding(values),
            self.snapshot,
            base_url=self.provider_base,
            timeout_ms=self.timeout_ms,
        )
        ast = parse_query(query_text or "")
        result = evaluate(
            ast,
            payload.item_ids(),
            self.snapshot,
            self.registry,
            hidden=hidden,
            base_url=self.provider_base,
            timeout_ms=self.timeout_ms,
        )
        return ViewResult(spec=spec, payload=prune_payload(payload, set(result.ids)))

    def suggest_query(
        self, partial: str, cursor: int | None, user_id: str
    ) -> list[Suggestion]:
        return suggest(
            partial,
            cursor,
            self.doc,
            self.snapshot,
            hidden=self._hidden_for(user_id),
        )

    def artifact(self, artifact_id: str) -> DataArtifact:
        found = self.snapshot.get(artifact_id)
        if found is None:
            raise UnknownArtifactError(artifact_id)
        return found

    # -- config ----------------------------------------------------------------

    def _check_refs(self, keys: Iterable[ProviderKey]) -> tuple[ProviderKey, ...]:
        checked = []
        for key in keys:
            if self.registry.get(*key) is None:
                raise UnknownProviderReferenceError(key)
            checked.append(key)
        return tuple(checked)

    @staticmethod
    def _require_role(scope: str, role: str, minimum: str) -> None:
        if _ROLE_RANK.get(role, 0) < _ROLE_RANK[minimum]:
            raise UnauthorizedScopeError(scope, role)

    def update_config(
        self,
        scope: str,
        change: dict[str, Any],
        *,
        role: str = "user",
        user_id: str = "anonymous",
        team: str | None = None,
    ) -> AdminConfig | TeamConfig | UserConfig:
        """Apply a config change; authorization precedes any validation."""
        if scope == "admin":
            self._require_role(scope, role, "admin")
            disabled = self._check_refs(
                tuple(map(tuple, change.get("disabled_providers", ())))
            )
            return self.store.set_admin(AdminConfig(disabled_providers=frozenset(disabled)))
        if scope == "team":
            self._require_role(scope, role, "team-admin")
            if not team:
                raise SchemaError("team name is required", "team")
            home = self._check_refs(tuple(map(tuple, change.get("home_providers", ()))))
            return self.store.set_team(TeamConfig(team=team, home_providers=home))
        if scope == "user":
            changes: dict[str, Any] = {}
            if "team" in change:
                changes["team"] = change["team"] or None
            if "hidden_providers" in change:
                changes["hidden_providers"] = frozenset(
                    self._check_refs(tuple(map(tuple, change["hidden_providers"])))
                )
            if "provider_order" in change:
                changes["provider_order"] = self._check_refs(
                    tuple(map(tuple, change["provider_order"]))
                )
            return self.store.update_user(user_id, **changes)
        raise SchemaError(f"unknown config scope {scope!r}", "scope")

    def get_config(
        self, scope: str, *, user_id: str = "anonymous", team: str | None = None
    ) -> AdminConfig | TeamConfig | UserConfig:
        if scope == "admin":
            return self.store.admin()
        if scope == "team":
            return self.store.team(team or "")
        return self.store.user(user_id)
