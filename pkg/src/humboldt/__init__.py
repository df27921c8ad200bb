"""Metadata-driven data discovery.

Declarative provider specs drive every surface: overview pages, exploration
views for a selected artifact, and a boolean search language with weighted
ranking. Providers either run in process (the built-ins) or answer a small
HTTP protocol.
"""

from .catalog import (
    CatalogSnapshot,
    DataArtifact,
    Timestamp,
    get_field,
    keyword_match,
    load_catalog,
    serialize_catalog,
)
from .errors import DiscoveryError
from .payload import (
    Edge,
    PayloadItem,
    RepresentationPayload,
    parse_payload,
    prune_payload,
    serialize_payload,
    validate_payload,
)
from .providers import (
    InputBinding,
    MissingInput,
    ProviderRegistry,
    applicable_providers,
    bind_inputs,
    fetch,
    register_providers,
)
from .builtins import eval_builtin
from .query import (
    ResultSet,
    Suggestion,
    ast_json,
    evaluate,
    parse_query,
    print_query,
    suggest,
    tokenize,
)
from .ranking import effective_weights, rank, score_artifact
from .service import DiscoveryService, ViewResult
from .spec import (
    InputSlot,
    InputType,
    ProviderSpec,
    RankingWeights,
    Representation,
    SpecDocument,
    Violation,
    effective_visibility,
    normalize_name,
    parse_spec,
    resolve_custom_content,
    serialize_spec,
    validate_spec,
)

__version__ = "0.1.0"

__all__ = [
    "CatalogSnapshot",
    "DataArtifact",
    "Timestamp",
    "get_field",
    "keyword_match",
    "load_catalog",
    "serialize_catalog",
    "DiscoveryError",
    "Edge",
    "PayloadItem",
    "RepresentationPayload",
    "parse_payload",
    "prune_payload",
    "serialize_payload",
    "validate_payload",
    "InputBinding",
    "MissingInput",
    "ProviderRegistry",
    "applicable_providers",
    "bind_inputs",
    "fetch",
    "register_providers",
    "eval_builtin",
    "ResultSet",
    "Suggestion",
    "ast_json",
    "evaluate",
    "parse_query",
    "print_query",
    "suggest",
    "tokenize",
    "effective_weights",
    "rank",
    "score_artifact",
    "DiscoveryService",
    "ViewResult",
    "InputSlot",
    "InputType",
    "ProviderSpec",
    "RankingWeights",
    "Representation",
    "SpecDocument",
    "Violation",
    "effective_visibility",
    "normalize_name",
    "parse_spec",
    "resolve_custom_content",
    "serialize_spec",
    "validate_spec",
    "__version__",
]
