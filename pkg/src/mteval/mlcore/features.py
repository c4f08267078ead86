"""Assembly of the four-feature similarity vector for a segment pair."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..phonetics import PhoneticScheme, phonetic_similarity
from ..semantics import EmbeddingProvider, semantic_similarity
from ..textsim import lexical_similarity, token_sort_ratio


@dataclass(frozen=True)
class FeatureVector:
    """Lexical, phonetic, semantic and fuzzy similarities, each in [0, 1]."""

    lexical: float
    phonetic: float
    semantic: float
    fuzzy: float

    def as_array(self) -> np.ndarray:
        return np.array([self.lexical, self.phonetic, self.semantic, self.fuzzy])


def extract_features(
    reference: str,
    hypothesis: str,
    provider: EmbeddingProvider,
    scheme: PhoneticScheme,
) -> FeatureVector:
    """Feature vector for a normalized (reference, hypothesis) pair.

    Empty-text convention: both empty yields (1,1,1,1); exactly one empty
    yields (0,0,0,0) without consulting the provider (empty texts have no
    embedding).
    """
    if not reference and not hypothesis:
        return FeatureVector(1.0, 1.0, 1.0, 1.0)
    if not reference or not hypothesis:
        return FeatureVector(0.0, 0.0, 0.0, 0.0)
    return FeatureVector(
        lexical=lexical_similarity(reference, hypothesis),
        phonetic=phonetic_similarity(reference, hypothesis, scheme),
        semantic=semantic_similarity(reference, hypothesis, provider),
        fuzzy=token_sort_ratio(reference, hypothesis),
    )


def feature_matrix(rows: list[FeatureVector]) -> np.ndarray:
    """Stack feature vectors into an (n, 4) design matrix."""
    return np.array([[f.lexical, f.phonetic, f.semantic, f.fuzzy] for f in rows])
