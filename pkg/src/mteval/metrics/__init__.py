"""Segment scorers: the six feature-fusion approaches and the baselines."""

from .approaches import (
    ALL_APPROACHES,
    DEFAULT_CONFIGS,
    FIXED_APPROACHES,
    SUPERVISED_APPROACHES,
    ApproachConfig,
    TrainingSettings,
    approach1,
    approach2,
    approach3,
    fixed_score,
    model_score,
    train_approach,
)
from .baselines import bleu, chrf, chrf_pp

__all__ = [
    "ALL_APPROACHES",
    "FIXED_APPROACHES",
    "SUPERVISED_APPROACHES",
    "DEFAULT_CONFIGS",
    "ApproachConfig",
    "TrainingSettings",
    "approach1",
    "approach2",
    "approach3",
    "fixed_score",
    "model_score",
    "train_approach",
    "bleu",
    "chrf",
    "chrf_pp",
]
