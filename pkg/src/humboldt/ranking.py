"""Weighted ranking of artifacts.

A ranking is a list of (field, weight) pairs. An artifact's value is the sum
of weight * numeric(field) over the pairs, where numbers contribute
themselves, booleans contribute 1 or 0, and text, text lists, timestamps, and
absent fields contribute 0. Negative weights are allowed (demotion).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .catalog import CatalogSnapshot, DataArtifact, Timestamp, get_field
from .errors import UnknownArtifactError
from .spec import ProviderSpec, RankingWeights

__all__ = ["effective_weights", "score_artifact", "rank"]

_EMPTY = RankingWeights(())


def effective_weights(
    spec: ProviderSpec | None, global_ranking: RankingWeights | None
) -> RankingWeights:
    """Provider weights if declared, else the global fallback, else empty."""
    if spec is not None and spec.ranking is not None:
        return spec.ranking
    if global_ranking is not None:
        return global_ranking
    return _EMPTY


def _numeric(value: object) -> float:
    # bool is checked first: it is an int subclass.
    if isinstance(value, bool):
        return 1.0 if value else 0.0
    if isinstance(value, (int, float)):
        return float(value)
    if isinstance(value, Timestamp):
        return 0.0
    return 0.0


def score_artifact(artifact: DataArtifact, weights: RankingWeights) -> float:
    """Weighted sum over the artifact's fields. Deterministic, total."""
    total = 0.0
    for field_name, weight in weights.entries:
        value = get_field(artifact, field_name)
        if value is None:
            continue
        total += weight * _numeric(value)
    return total


def rank(
    results: Iterable[tuple[str, Sequence[ProviderSpec]]],
    snapshot: CatalogSnapshot,
    global_ranking: RankingWeights | None = None,
) -> list[str]:
    """Order artifact ids by combined score descending, id ascending.

    Each entry pairs an artifact id with the providers that contributed it;
    the combined value sums score_artifact under each provider's effective
    weights. An entry with no contributing providers (the plain search path)
    is scored once under the global weights.
    """
    combined: dict[str, float] = {}
    for artifact_id, providers in results:
        artifact = snapshot.get(artifact_id)
        if artifact is None:
            raise UnknownArtifactError(artifact_id)
        if providers:
            value = sum(
                score_artifact(artifact, effective_weights(p, global_ranking))
                for p in providers
            )
        else:
            value = score_artifact(artifact, effective_weights(None, global_ranking))
        combined[artifact_id] = combined.get(artifact_id, 0.0) + value
    return sorted(combined, key=lambda aid: (-combined[aid], aid))
