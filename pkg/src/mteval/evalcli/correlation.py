"""Pearson and Spearman correlation with explicit tie handling.

Zero-variance inputs raise :class:`ZeroVarianceError` so an undefined
correlation is never silently reported as 0.
"""

from __future__ import annotations

import numpy as np

from ..errors import NumericError, ZeroVarianceError


def _validated(x, y) -> tuple[np.ndarray, np.ndarray]:
    x = np.asarray(x, dtype=float).ravel()
    y = np.asarray(y, dtype=float).ravel()
    if x.size != y.size:
        raise NumericError(f"correlation inputs differ in length: {x.size} vs {y.size}")
    if x.size < 2:
        raise NumericError(f"correlation needs at least 2 points, got {x.size}")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise NumericError("correlation inputs must be finite")
    return x, y


def pearson(x, y) -> float:
    """Sample Pearson correlation coefficient."""
    x, y = _validated(x, y)
    xc = x - x.mean()
    yc = y - y.mean()
    denom = np.sqrt(np.sum(xc * xc) * np.sum(yc * yc))
    if denom == 0.0:
        raise ZeroVarianceError("pearson correlation undefined: zero variance input")
    return float(np.sum(xc * yc) / denom)


def average_ranks(values) -> np.ndarray:
    """1-based ranks with ties assigned the mean of their rank span."""
    values = np.asarray(values, dtype=float).ravel()
    order = np.argsort(values, kind="mergesort")
    ranks = np.empty(values.size, dtype=float)
    i = 0
    while i < values.size:
        j = i
        while j + 1 < values.size and values[order[j + 1]] == values[order[i]]:
            j += 1
        ranks[order[i : j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def spearman(x, y) -> float:
    """Spearman rank correlation: Pearson correlation of average ranks."""
    x, y = _validated(x, y)
    rx = average_ranks(x)
    ry = average_ranks(y)
    if np.all(rx == rx[0]) or np.all(ry == ry[0]):
        raise ZeroVarianceError("spearman correlation undefined: constant ranks")
    return pearson(rx, ry)
