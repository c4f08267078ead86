"""The six segment scorers mapping a (reference, hypothesis) pair to [0, 100].

Approaches 1-3 are fixed-weight combinations of similarity features;
approaches 4-6 are supervised: two sub-models trained on human semantic and
fluency annotations, blended with fixed output weights. Published defaults:

==========  ==========================================  ====================
approach    component weights                           phonetic scheme
==========  ==========================================  ====================
1           0.7 jaccard-trigram + 0.3 phonetic          metaphone
2           0.5 lexical + 0.2 phonetic + 0.3 semantic   double metaphone
3           0.45 L + 0.15 P + 0.30 S + 0.10 F           soundex + double met.
4           0.5 / 0.5 blend of two OLS models           soundex + metaphone
5           0.6 ridge + 0.4 random forest (scaled X)    soundex + metaphone
6           0.7 ridge + 0.3 gradient boosting (scaled)  soundex + metaphone
==========  ==========================================  ====================

Scores of non-degenerate pairs are clamped into [0, 100]; an empty side
against a non-empty one always scores 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import NumericError
from ..mlcore import (
    BoostingParams,
    ForestParams,
    ScoreModel,
    extract_features,
    feature_matrix,
    gbr_fit,
    minmax_apply,
    minmax_fit,
    ols_fit,
    rf_fit,
    ridge_fit,
)
from ..phonetics import PhoneticScheme, phonetic_similarity
from ..semantics import EmbeddingProvider, semantic_similarity
from ..textsim import jaccard_trigram, lexical_similarity, token_sort_ratio

FIXED_APPROACHES = (1, 2, 3)
SUPERVISED_APPROACHES = (4, 5, 6)
ALL_APPROACHES = FIXED_APPROACHES + SUPERVISED_APPROACHES


@dataclass(frozen=True)
class ApproachConfig:
    """Weights and bindings of one approach; defaults are the published ones."""

    approach: int
    weights: tuple[float, ...] = ()
    scheme: PhoneticScheme = PhoneticScheme.SOUNDEX_METAPHONE
    blend: tuple[float, float] | None = None
    source_tag: str = ""


DEFAULT_CONFIGS: dict[int, ApproachConfig] = {
    1: ApproachConfig(1, weights=(0.7, 0.3), scheme=PhoneticScheme.METAPHONE),
    2: ApproachConfig(
        2, weights=(0.5, 0.2, 0.3), scheme=PhoneticScheme.DOUBLE_METAPHONE_PRIMARY,
        source_tag="distiluse",
    ),
    3: ApproachConfig(
        3, weights=(0.45, 0.15, 0.30, 0.10),
        scheme=PhoneticScheme.SOUNDEX_DOUBLE_METAPHONE, source_tag="labse",
    ),
    4: ApproachConfig(4, blend=(0.5, 0.5), source_tag="labse"),
    5: ApproachConfig(5, blend=(0.6, 0.4), source_tag="labse"),
    6: ApproachConfig(6, blend=(0.7, 0.3), source_tag="labse"),
}


def _clamp(score: float) -> float:
    return min(100.0, max(0.0, score))


def _degenerate(reference: str, hypothesis: str) -> float | None:
    if not reference and not hypothesis:
        return None  # both empty: fall through, features are (1,1,1,1)
    if not reference or not hypothesis:
        return 0.0
    return None


def approach1(reference: str, hypothesis: str,
              config: ApproachConfig = DEFAULT_CONFIGS[1]) -> float:
    """100 * (a * trigram Jaccard + b * phonetic similarity)."""
    if (score := _degenerate(reference, hypothesis)) is not None:
        return score
    a, b = config.weights
    j = jaccard_trigram(reference, hypothesis)
    p = phonetic_similarity(reference, hypothesis, config.scheme)
    return _clamp(100.0 * (a * j + b * p))


def approach2(reference: str, hypothesis: str, provider: EmbeddingProvider,
              config: ApproachConfig = DEFAULT_CONFIGS[2]) -> float:
    """100 * (a * lexical + b * phonetic + c * semantic)."""
    if (score := _degenerate(reference, hypothesis)) is not None:
        return score
    a, b, c = config.weights
    lex = lexical_similarity(reference, hypothesis)
    p = phonetic_similarity(reference, hypothesis, config.scheme)
    s = semantic_similarity(reference, hypothesis, provider)
    return _clamp(100.0 * (a * lex + b * p + c * s))


def approach3(reference: str, hypothesis: str, provider: EmbeddingProvider,
              config: ApproachConfig = DEFAULT_CONFIGS[3]) -> float:
    """100 * (a * lexical + b * phonetic + c * semantic + d * fuzzy)."""
    if (score := _degenerate(reference, hypothesis)) is not None:
        return score
    a, b, c, d = config.weights
    feats = extract_features(reference, hypothesis, provider, config.scheme)
    return _clamp(
        100.0 * (a * feats.lexical + b * feats.phonetic + c * feats.semantic + d * feats.fuzzy)
    )


@dataclass
class TrainingSettings:
    """Hyperparameters for the supervised approaches, all serialized into the model."""

    ridge_lambda: float = 1.0
    forest: ForestParams = field(default_factory=ForestParams)
    boosting: BoostingParams = field(default_factory=BoostingParams)
    seed: int = 0


def train_approach(
    approach: int,
    pairs: list[tuple[str, str]],
    semantic_scores,
    fluency_scores,
    provider: EmbeddingProvider,
    settings: TrainingSettings = TrainingSettings(),
    language_tag: str = "",
    config: ApproachConfig | None = None,
) -> ScoreModel:
    """Train a supervised approach on annotated dev pairs.

    Approach 4 fits two OLS models on raw features; approaches 5 and 6 fit a
    min-max scaler, a ridge model for the semantic target, and a forest /
    boosting ensemble for the fluency target, all on scaled features.
    """
    if approach not in SUPERVISED_APPROACHES:
        raise NumericError(f"approach {approach} is not trainable")
    config = config or DEFAULT_CONFIGS[approach]
    sem = np.asarray(semantic_scores, dtype=float).ravel()
    flu = np.asarray(fluency_scores, dtype=float).ravel()
    if not (len(pairs) == sem.size == flu.size):
        raise NumericError(
            f"training rows disagree: {len(pairs)} pairs, {sem.size} semantic, {flu.size} fluency"
        )
    if not (np.all(np.isfinite(sem)) and np.all(np.isfinite(flu))):
        raise NumericError("training scores must be finite")
    X = feature_matrix(
        [extract_features(r, h, provider, config.scheme) for r, h in pairs]
    )
    hyper = {"ridge_lambda": settings.ridge_lambda, "seed": settings.seed}
    if approach == 4:
        scaler = None
        semantic_model = ols_fit(X, sem, target_tag="semantic")
        fluency_model = ols_fit(X, flu, target_tag="fluency")
    else:
        scaler = minmax_fit(X)
        Xs = minmax_apply(scaler, X)
        semantic_model = ridge_fit(Xs, sem, settings.ridge_lambda, target_tag="semantic")
        if approach == 5:
            fluency_model = rf_fit(Xs, flu, settings.forest, settings.seed)
            hyper["forest"] = fluency_model.params
        else:
            fluency_model = gbr_fit(Xs, flu, settings.boosting, settings.seed)
            hyper["boosting"] = fluency_model.params
    return ScoreModel(
        approach=approach,
        scaler=scaler,
        semantic_model=semantic_model,
        fluency_model=fluency_model,
        blend=config.blend or DEFAULT_CONFIGS[approach].blend,
        scheme=config.scheme.value,
        language_tag=language_tag,
        source_tag=provider.source_tag,
        seed=settings.seed,
        hyperparams=hyper,
    )


def model_score(model: ScoreModel, reference: str, hypothesis: str,
                provider: EmbeddingProvider) -> float:
    """Score one pair with a trained model, clamped to [0, 100]."""
    if (score := _degenerate(reference, hypothesis)) is not None:
        return score
    feats = extract_features(reference, hypothesis, provider, PhoneticScheme(model.scheme))
    return _clamp(float(model.predict_raw(feats.as_array())[0]))


def fixed_score(approach: int, reference: str, hypothesis: str,
                provider: EmbeddingProvider | None = None) -> float:
    """Dispatch to one of the fixed-weight approaches (1-3)."""
    if approach == 1:
        return approach1(reference, hypothesis)
    if approach == 2:
        if provider is None:
            raise NumericError("approach 2 needs an embedding provider")
        return approach2(reference, hypothesis, provider)
    if approach == 3:
        if provider is None:
            raise NumericError("approach 3 needs an embedding provider")
        return approach3(reference, hypothesis, provider)
    raise NumericError(f"approach {approach} is not a fixed-weight approach")
