"""Trained approach models and their JSON persistence.

The model file is versioned JSON carrying everything needed to reproduce
predictions bit-for-bit: scaler bounds, linear coefficients, full tree
structures, hyperparameters, seed, and provenance tags. Floats round-trip
exactly (shortest-repr encoding).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from ..errors import DataError
from .linear import LinearModel, linear_predict
from .scaling import MinMaxScaler, minmax_apply
from .trees import TreeEnsemble, ensemble_predict

FORMAT_VERSION = 1
SUPERVISED_APPROACHES = (4, 5, 6)


@dataclass
class ScoreModel:
    """A trained supervised approach: two sub-models and their blend."""

    approach: int
    scaler: MinMaxScaler | None
    semantic_model: LinearModel
    fluency_model: LinearModel | TreeEnsemble
    blend: tuple[float, float]
    scheme: str
    language_tag: str = ""
    source_tag: str = ""
    seed: int = 0
    hyperparams: dict | None = None

    def __post_init__(self):
        if self.approach not in SUPERVISED_APPROACHES:
            raise DataError(f"unknown supervised approach id: {self.approach}")
        w_sem, w_flu = self.blend
        if w_sem < 0 or w_flu < 0 or not math.isclose(w_sem + w_flu, 1.0, abs_tol=1e-9):
            raise DataError(f"blend weights must be non-negative and sum to 1, got {self.blend}")

    def predict_raw(self, features: np.ndarray) -> np.ndarray:
        """Unclamped blended prediction for (n, 4) feature rows."""
        X = np.atleast_2d(np.asarray(features, dtype=float))
        if self.scaler is not None:
            X = minmax_apply(self.scaler, X)
        sem = linear_predict(self.semantic_model, X)
        if isinstance(self.fluency_model, TreeEnsemble):
            flu = ensemble_predict(self.fluency_model, X)
        else:
            flu = linear_predict(self.fluency_model, X)
        return self.blend[0] * sem + self.blend[1] * flu


def _linear_payload(model: LinearModel) -> dict:
    return {
        "type": "linear",
        "weights": [float(w) for w in model.weights],
        "intercept": float(model.intercept),
        "target_tag": model.target_tag,
    }


def _ensemble_payload(model: TreeEnsemble) -> dict:
    return {
        "type": "ensemble",
        "kind": model.kind,
        "trees": model.trees,
        "params": model.params,
        "seed": model.seed,
        "base_prediction": model.base_prediction,
    }


def save_model(model: ScoreModel, path) -> None:
    if isinstance(model.fluency_model, TreeEnsemble):
        fluency = _ensemble_payload(model.fluency_model)
    else:
        fluency = _linear_payload(model.fluency_model)
    payload = {
        "format_version": FORMAT_VERSION,
        "approach": model.approach,
        "scheme": model.scheme,
        "language_tag": model.language_tag,
        "source_tag": model.source_tag,
        "seed": model.seed,
        "blend": list(model.blend),
        "scaler": None
        if model.scaler is None
        else {
            "mins": [float(x) for x in model.scaler.mins],
            "maxs": [float(x) for x in model.scaler.maxs],
        },
        "semantic_model": _linear_payload(model.semantic_model),
        "fluency_model": fluency,
        "hyperparams": model.hyperparams or {},
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _parse_linear(payload: dict) -> LinearModel:
    return LinearModel(
        weights=np.array(payload["weights"], dtype=float),
        intercept=float(payload["intercept"]),
        target_tag=payload.get("target_tag", ""),
    )


def load_model(path) -> ScoreModel:
    try:
        with open(path, encoding="utf-8") as fh:
            payload = json.load(fh)
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: not a valid model file: {exc}") from None
    if not isinstance(payload, dict) or "format_version" not in payload:
        raise DataError(f"{path}: missing model format version")
    if payload["format_version"] != FORMAT_VERSION:
        raise DataError(
            f"{path}: unsupported model format version {payload['format_version']} "
            f"(expected {FORMAT_VERSION})"
        )
    try:
        approach = payload["approach"]
        if approach not in SUPERVISED_APPROACHES:
            raise DataError(f"{path}: unknown approach id {approach!r}")
        scaler = None
        if payload["scaler"] is not None:
            scaler = MinMaxScaler(
                mins=np.array(payload["scaler"]["mins"], dtype=float),
                maxs=np.array(payload["scaler"]["maxs"], dtype=float),
            )
        fm = payload["fluency_model"]
        if fm["type"] == "ensemble":
            fluency: LinearModel | TreeEnsemble = TreeEnsemble(
                kind=fm["kind"],
                trees=fm["trees"],
                params=fm["params"],
                seed=fm["seed"],
                base_prediction=float(fm["base_prediction"]),
            )
        elif fm["type"] == "linear":
            fluency = _parse_linear(fm)
        else:
            raise DataError(f"{path}: unknown fluency model type {fm['type']!r}")
        return ScoreModel(
            approach=approach,
            scaler=scaler,
            semantic_model=_parse_linear(payload["semantic_model"]),
            fluency_model=fluency,
            blend=tuple(payload["blend"]),
            scheme=payload["scheme"],
            language_tag=payload.get("language_tag", ""),
            source_tag=payload.get("source_tag", ""),
            seed=payload.get("seed", 0),
            hyperparams=payload.get("hyperparams") or {},
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise DataError(f"{path}: malformed model file ({exc})") from None
