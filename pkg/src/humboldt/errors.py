"""Exception hierarchy for the discovery engine.

Validation *violations* are plain data returned by ``validate_spec``; the
classes here are for failures that abort an operation. Every class carries a
stable ``kind`` string so HTTP and CLI layers can map errors without isinstance
ladders.
"""

from __future__ import annotations


class DiscoveryError(Exception):
    """Base class for all errors raised by this package."""

    kind = "error"


class SpecSyntaxError(DiscoveryError):
    """Spec document is not well-formed JSON."""

    kind = "spec_syntax"

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class SchemaError(DiscoveryError):
    """Document is well-formed JSON but does not match the expected shape."""

    kind = "schema"

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class CatalogSyntaxError(DiscoveryError):
    """Catalog file is malformed (bad JSON or bad artifact shape)."""

    kind = "catalog_syntax"


class DuplicateIdError(DiscoveryError):
    kind = "duplicate_id"

    def __init__(self, artifact_id: str):
        super().__init__(f"duplicate artifact id {artifact_id!r}")
        self.artifact_id = artifact_id


class UnknownBuiltinError(DiscoveryError):
    """A provider without an endpoint has no built-in implementation."""

    kind = "unknown_builtin"

    def __init__(self, type_: str, name: str):
        super().__init__(
            f"provider ({type_!r}, {name!r}) has no endpoint and no built-in matches its name"
        )
        self.key = (type_, name)


class ProviderUnavailableError(DiscoveryError):
    """The provider could not be reached or did not answer usably."""

    kind = "provider_unavailable"


class MalformedPayloadError(DiscoveryError):
    """Provider answered, but the payload violates the payload rules."""

    kind = "malformed_payload"


class RepresentationMismatchError(DiscoveryError):
    def __init__(self, declared, got):
        super().__init__(
            f"provider declared {declared.value} but returned {got.value}"
        )
        self.declared = declared
        self.got = got

    kind = "representation_mismatch"


class DanglingArtifactError(DiscoveryError):
    def __init__(self, artifact_id: str):
        super().__init__(f"payload references unknown artifact {artifact_id!r}")
        self.artifact_id = artifact_id

    kind = "dangling_artifact"


class LexError(DiscoveryError):
    """Query text contains an illegal character or an unterminated quote."""

    kind = "lex"

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ParseError(DiscoveryError):
    """Query tokens do not form a valid expression."""

    kind = "parse"

    def __init__(self, message: str, position: int, expected: tuple[str, ...] = ()):
        super().__init__(f"{message} (at position {position})")
        self.position = position
        self.expected = frozenset(expected)


class UnknownProviderError(DiscoveryError):
    kind = "unknown_provider"

    def __init__(self, alias: str, candidates: tuple[str, ...] = ()):
        if candidates:
            msg = f"provider call {alias!r} is ambiguous between {', '.join(candidates)}"
        else:
            msg = f"no provider matches {alias!r}"
        super().__init__(msg)
        self.alias = alias
        self.candidates = candidates


class MissingInputError(DiscoveryError):
    kind = "missing_input"

    def __init__(self, provider_key: tuple[str, str], missing: tuple):
        names = ", ".join(getattr(m, "value", str(m)) for m in missing)
        super().__init__(f"provider {provider_key[1]!r} is missing required input(s): {names}")
        self.provider_key = provider_key
        self.missing = tuple(missing)


class UnknownArtifactError(DiscoveryError):
    kind = "unknown_artifact"

    def __init__(self, artifact_id: str):
        super().__init__(f"no artifact with id {artifact_id!r}")
        self.artifact_id = artifact_id


class UnknownProviderReferenceError(DiscoveryError):
    """A config change names a provider the registry does not know."""

    kind = "unknown_provider_reference"

    def __init__(self, reference):
        super().__init__(f"unknown provider reference {reference!r}")
        self.reference = reference


class UnauthorizedScopeError(DiscoveryError):
    kind = "unauthorized_scope"

    def __init__(self, scope: str, role: str):
        super().__init__(f"role {role!r} may not modify the {scope!r} config scope")
        self.scope = scope
        self.role = role
