"""Context-sensitive query completion.

Three contexts matter: just after ':' we complete provider names, just after
'fieldname:' we complete values of that metadata field, and at the start of
a term we offer field names, provider names, and a free-text hint.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from ..catalog import CatalogSnapshot, Timestamp
from ..errors import LexError
from ..spec import SpecDocument, effective_visibility, normalize_name
from .eval import FIELD_ALIASES
from .syntax import AMP, BANG, COLON, COMMA, IDENT, LPAREN, PIPE, QUOTED, tokenize

__all__ = ["Suggestion", "suggest", "MAX_VALUE_SUGGESTIONS"]

MAX_VALUE_SUGGESTIONS = 20

_PROVIDER_PREFIX_RE = re.compile(r"(?:^|[\s(&|!,]):([A-Za-z0-9_\-]*)\Z")


@dataclass(frozen=True)
class Suggestion:
    kind: str  # "provider" | "field" | "value" | "hint"
    text: str


def _provider_names(
    doc: SpecDocument, hidden: frozenset[tuple[str, str]]
) -> list[str]:
    names = {
        normalize_name(spec.name)
        for spec in doc.providers
        if spec.key not in hidden and effective_visibility(spec, "search")
    }
    return sorted(names)


def _field_names(snapshot: CatalogSnapshot) -> list[str]:
    names = {key.casefold() for artifact in snapshot for key in artifact.fields}
    names.add("type")
    for alias, target in FIELD_ALIASES.items():
        if target in names:
            names.add(alias)
    return sorted(names)


def _render_value(value) -> list[str]:
    if isinstance(value, bool):
        return ["true" if value else "false"]
    if isinstance(value, str):
        return [value]
    if isinstance(value, tuple):
        return list(value)
    if isinstance(value, Timestamp):
        return []
    if isinstance(value, (int, float)):
        return [repr(value)]
    return []


def _field_values(snapshot: CatalogSnapshot, field_name: str) -> list[str]:
    """Distinct values of one field, alphabetical, capped."""
    resolved = FIELD_ALIASES.get(field_name.casefold(), field_name.casefold())
    values: set[str] = set()
    for artifact in snapshot:
        if resolved in ("type", "kind"):
            values.add(artifact.kind)
            continue
        if resolved == "name":
            values.add(artifact.name)
            continue
        for key, value in artifact.fields.items():
            if key.casefold() == resolved:
                values.update(_render_value(value))
    return sorted(values)


def _filtered(values: Iterable[str], prefix: str, kind: str, cap: int | None = None) -> list[Suggestion]:
    wanted = prefix.casefold()
    picked = [v for v in values if v.casefold().startswith(wanted)]
    if cap is not None:
        picked = picked[:cap]
    return [Suggestion(kind, v) for v in picked]


def suggest(
    partial: str,
    cursor: int | None = None,
    doc: SpecDocument | None = None,
    snapshot: CatalogSnapshot | None = None,
    hidden: Iterable[tuple[str, str]] = (),
) -> list[Suggestion]:
    """Complete the token at the cursor (default: end of the text).

    Never suggests providers hidden from the caller or invisible on the
    search surface. Unparseable prefixes degrade to no suggestions rather
    than errors.
    """
    doc = doc if doc is not None else SpecDocument()
    hidden_keys = frozenset(hidden)
    text = partial if cursor is None else partial[: max(0, cursor)]

    m = _PROVIDER_PREFIX_RE.search(text)
    if m:
        return _filtered(_provider_names(doc, hidden_keys), m.group(1), "provider")

    try:
        tokens = tokenize(text)
    except LexError as exc:
        # Mid-quote typing: complete values for "field: 'par..." shapes.
        if exc.position < len(text) and text[exc.position] in "'\"":
            head = text[: exc.position]
            value_prefix = text[exc.position + 1 :]
            try:
                head_tokens = tokenize(head)
            except LexError:
                return []
            if (
                len(head_tokens) >= 2
                and head_tokens[-1].kind == COLON
                and head_tokens[-2].kind == IDENT
                and snapshot is not None
            ):
                return _filtered(
                    _field_values(snapshot, head_tokens[-2].value),
                    value_prefix,
                    "value",
                    MAX_VALUE_SUGGESTIONS,
                )
        return []

    # Value position: "field:" with or without a partial value being typed.
    if snapshot is not None and len(tokens) >= 2:
        last, prev = tokens[-1], tokens[-2]
        if last.kind == COLON and prev.kind == IDENT:
            return _filtered(
                _field_values(snapshot, prev.value), "", "value", MAX_VALUE_SUGGESTIONS
            )
        if (
            len(tokens) >= 3
            and last.kind in (IDENT, QUOTED)
            and prev.kind == COLON
            and tokens[-3].kind == IDENT
            and text
            and not text[-1].isspace()
        ):
            return _filtered(
                _field_values(snapshot, tokens[-3].value),
                last.value,
                "value",
                MAX_VALUE_SUGGESTIONS,
            )

    # Term start: empty input, after an operator, or typing a bare prefix.
    prefix = ""
    if tokens:
        last = tokens[-1]
        if last.kind == IDENT and text and not text[-1].isspace():
            prefix = last.value
        elif last.kind not in (AMP, PIPE, BANG, LPAREN, COMMA, IDENT, QUOTED):
            # After ')', a quoted term, etc. adjacency allows a new term;
            # other states (e.g. a dangling ':') get nothing.
            if last.kind == COLON:
                return []

    out: list[Suggestion] = []
    fields = _field_names(snapshot) if snapshot is not None else []
    out.extend(_filtered(fields, prefix, "field"))
    out.extend(_filtered(_provider_names(doc, hidden_keys), prefix, "provider"))
    if not prefix:
        out.append(Suggestion("hint", "free-text keyword"))
    return out
