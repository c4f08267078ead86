"""Ordinary least squares and Ridge regression via the normal equations."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import NumericError


@dataclass
class LinearModel:
    weights: np.ndarray  # one coefficient per feature
    intercept: float
    target_tag: str = ""

    def __post_init__(self):
        self.weights = np.asarray(self.weights, dtype=float)
        if not (np.all(np.isfinite(self.weights)) and np.isfinite(self.intercept)):
            raise NumericError("linear model has non-finite coefficients")


def _design(X: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float).ravel()
    if X.ndim != 2 or X.shape[0] != y.size:
        raise NumericError(f"design matrix {X.shape} does not match {y.size} targets")
    return X, y


def ols_fit(X: np.ndarray, y: np.ndarray, target_tag: str = "") -> LinearModel:
    """Least-squares fit with intercept; rejects rank-deficient problems."""
    X, y = _design(X, y)
    n, p = X.shape
    if n < p + 1:
        raise NumericError(f"OLS needs at least {p + 1} rows, got {n}")
    A = np.column_stack([X, np.ones(n)])
    if np.linalg.matrix_rank(A) < p + 1:
        raise NumericError("rank-deficient design matrix; use ridge regression instead")
    coef, *_ = np.linalg.lstsq(A, y, rcond=None)
    return LinearModel(weights=coef[:p], intercept=float(coef[p]), target_tag=target_tag)


def ridge_fit(X: np.ndarray, y: np.ndarray, lam: float = 1.0, target_tag: str = "") -> LinearModel:
    """Closed-form ridge fit; the intercept is not penalized."""
    X, y = _design(X, y)
    n, p = X.shape
    if n < 2:
        raise NumericError(f"ridge fit needs at least 2 rows, got {n}")
    if lam < 0:
        raise NumericError(f"ridge penalty must be non-negative, got {lam}")
    A = np.column_stack([X, np.ones(n)])
    penalty = np.diag([lam] * p + [0.0])
    try:
        coef = np.linalg.solve(A.T @ A + penalty, A.T @ y)
    except np.linalg.LinAlgError as exc:
        raise NumericError(f"ridge normal equations are singular: {exc}") from None
    if not np.all(np.isfinite(coef)):
        raise NumericError("ridge solution overflowed")
    return LinearModel(weights=coef[:p], intercept=float(coef[p]), target_tag=target_tag)


def linear_predict(model: LinearModel, X: np.ndarray) -> np.ndarray:
    X = np.atleast_2d(np.asarray(X, dtype=float))
    return X @ model.weights + model.intercept
