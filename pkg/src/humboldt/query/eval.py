"""Set-algebra evaluation of query ASTs.

Every node maps a scope (a set of artifact ids) to a subset of it: keywords
filter by substring match, field pills by case-insensitive equality (or
membership for text lists), provider calls intersect the provider's result
with the scope, AND/OR/NOT are intersection/union/scope-relative complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..catalog import CatalogSnapshot, DataArtifact, Timestamp, get_field, keyword_match
from ..errors import MissingInputError, UnknownProviderError
from ..providers import MissingInput, ProviderRegistry, bind_inputs, fetch
from ..spec import effective_visibility
from .syntax import (
    And,
    FieldPill,
    Group,
    Keyword,
    MatchAll,
    Not,
    Or,
    ProviderCall,
    QueryAst,
)

__all__ = ["ResultSet", "evaluate", "pill_matches", "FIELD_ALIASES"]

# Query-language spellings for metadata fields filled by the built-ins.
FIELD_ALIASES = {"owned_by": "owner", "badged_by": "badge"}


@dataclass(frozen=True)
class ResultSet:
    ids: frozenset[str]
    scope: frozenset[str]

    def __post_init__(self):
        if not self.ids <= self.scope:
            raise ValueError("result ids must be a subset of the scope")


def _value_matches(value, wanted: str) -> bool:
    if isinstance(value, bool):
        return wanted.casefold() in ("true", "false") and value is (
            wanted.casefold() == "true"
        )
    if isinstance(value, str):
        return value.casefold() == wanted.casefold()
    if isinstance(value, tuple):
        return any(item.casefold() == wanted.casefold() for item in value)
    if isinstance(value, Timestamp):
        try:
            return value.seconds == float(wanted)
        except ValueError:
            return False
    if isinstance(value, (int, float)):
        try:
            return float(value) == float(wanted)
        except ValueError:
            return False
    return False


def pill_matches(artifact: DataArtifact, field_name: str, value: str) -> bool:
    """Case-insensitive pill semantics with the query-language aliases.

    ``type``/``kind`` match the artifact kind, ``name`` its display name,
    everything else goes through metadata lookup (text lists match by
    membership). Absent fields never match.
    """
    resolved = field_name.casefold()
    resolved = FIELD_ALIASES.get(resolved, resolved)
    if resolved in ("type", "kind"):
        return artifact.kind.casefold() == value.casefold()
    if resolved == "name":
        return artifact.name.casefold() == value.casefold()
    field_value = get_field(artifact, resolved)
    if field_value is None:
        return False
    return _value_matches(field_value, value)


class _EvalContext:
    def __init__(self, snapshot, registry, hidden, base_url, timeout_ms):
        self.snapshot = snapshot
        self.registry = registry
        self.hidden = frozenset(hidden)
        self.base_url = base_url
        self.timeout_ms = timeout_ms
        self.memo: dict[tuple, frozenset[str]] = {}

    def provider_ids(self, call: ProviderCall) -> frozenset[str]:
        if self.registry is None:
            raise UnknownProviderError(call.name)
        handle = self.registry.resolve_alias(call.name)
        spec = handle.spec
        # Hidden or search-invisible providers must not leak through queries.
        if spec.key in self.hidden or not effective_visibility(spec, "search"):
            raise UnknownProviderError(call.name)
        binding = bind_inputs(spec, None, call.args, self.snapshot)
        if isinstance(binding, MissingInput):
            raise MissingInputError(spec.key, binding.missing)
        key = (spec.key, binding.memo_key())
        if key not in self.memo:
            payload = fetch(
                handle,
                binding,
                self.snapshot,
                base_url=self.base_url,
                timeout_ms=self.timeout_ms,
            )
            self.memo[key] = frozenset(payload.item_ids())
        return self.memo[key]


def _eval(node: QueryAst, scope: frozenset[str], ctx: _EvalContext) -> frozenset[str]:
    if isinstance(node, MatchAll):
        return scope
    if isinstance(node, Keyword):
        return frozenset(
            aid
            for aid in scope
            if (art := ctx.snapshot.get(aid)) is not None and keyword_match(art, node.text)
        )
    if isinstance(node, FieldPill):
        return frozenset(
            aid
            for aid in scope
            if (art := ctx.snapshot.get(aid)) is not None
            and pill_matches(art, node.field, node.value)
        )
    if isinstance(node, ProviderCall):
        return ctx.provider_ids(node) & scope
    if isinstance(node, And):
        return _eval(node.left, scope, ctx) & _eval(node.right, scope, ctx)
    if isinstance(node, Or):
        return _eval(node.left, scope, ctx) | _eval(node.right, scope, ctx)
    if isinstance(node, Not):
        return scope - _eval(node.child, scope, ctx)
    if isinstance(node, Group):
        return _eval(node.child, scope, ctx)
    raise TypeError(f"cannot evaluate {type(node).__name__}")


def evaluate(
    ast: QueryAst,
    scope: Iterable[str],
    snapshot: CatalogSnapshot,
    registry: ProviderRegistry | None = None,
    *,
    hidden: Iterable[tuple[str, str]] = (),
    base_url: str | None = None,
    timeout_ms: int | None = None,
) -> ResultSet:
    """Evaluate a query against a scope of artifact ids.

    Pure given the snapshot; provider results are memoized per call so a
    provider invoked twice with the same binding is fetched once.
    """
    scope_set = frozenset(scope)
    ctx = _EvalContext(snapshot, registry, hidden, base_url, timeout_ms)
    return ResultSet(ids=_eval(ast, scope_set, ctx), scope=scope_set)
