"""Per-column Min-Max scaling onto [0, 1]."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NumericError


@dataclass
class MinMaxScaler:
    mins: np.ndarray
    maxs: np.ndarray


def minmax_fit(X: np.ndarray) -> MinMaxScaler:
    """Fit column minima and maxima; requires at least two rows."""
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[0] < 2:
        raise NumericError(f"min-max fit needs a 2-d matrix with >= 2 rows, got shape {X.shape}")
    return MinMaxScaler(mins=X.min(axis=0), maxs=X.max(axis=0))


def minmax_apply(scaler: MinMaxScaler, X: np.ndarray) -> np.ndarray:
    """Scale columns to [0, 1]; constant columns map to 0, outliers clamp."""
    X = np.atleast_2d(np.asarray(X, dtype=float))
    span = scaler.maxs - scaler.mins
    scaled = np.where(span > 0, (X - scaler.mins) / np.where(span > 0, span, 1.0), 0.0)
    return np.clip(scaled, 0.0, 1.0)
