"""CART regression trees plus Random Forest and Gradient Boosting ensembles.

Training is deterministic: rows are canonicalized (sorted lexicographically
by features then target) before any fitting, so results do not depend on
input row order. One seed drives all resampling; per tree, bootstrap indices
are drawn first, then per-node feature subsets in pre-order build order
(no draws happen when feature_fraction == 1). Trees are stored as nested
dicts (leaf: {"value"}, split: {"feature", "threshold", "left", "right"})
so model files can carry the full structure.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from ..errors import NumericError

MIN_TRAIN_ROWS = 10


@dataclass(frozen=True)
class ForestParams:
    n_trees: int = 100
    max_depth: int | None = 6
    min_leaf: int = 2
    bootstrap: bool = True
    subsample: float = 1.0
    feature_fraction: float = 1.0


@dataclass(frozen=True)
class BoostingParams:
    n_trees: int = 100
    max_depth: int | None = 3
    min_leaf: int = 1
    learning_rate: float = 0.1


@dataclass
class TreeEnsemble:
    kind: str  # "random_forest" | "gradient_boosting"
    trees: list[dict]
    params: dict
    seed: int
    base_prediction: float = 0.0  # used by gradient boosting only


def _best_split(X: np.ndarray, y: np.ndarray, min_leaf: int, features: np.ndarray):
    """Exhaustive SSE minimization over midpoints; first strictly-better split wins."""
    m = y.size
    best_sse = np.inf
    best = None
    for j in features:
        order = np.argsort(X[:, j], kind="mergesort")
        xs = X[order, j]
        ys = y[order]
        cum = np.cumsum(ys)
        cum2 = np.cumsum(ys * ys)
        total, total2 = cum[-1], cum2[-1]
        idx = np.arange(min_leaf - 1, m - min_leaf)
        if idx.size == 0:
            continue
        idx = idx[xs[idx] < xs[idx + 1]]
        if idx.size == 0:
            continue
        n_left = idx + 1.0
        n_right = m - n_left
        sse = (cum2[idx] - cum[idx] ** 2 / n_left) + (
            (total2 - cum2[idx]) - (total - cum[idx]) ** 2 / n_right
        )
        k = int(np.argmin(sse))
        if sse[k] < best_sse:
            best_sse = float(sse[k])
            i = int(idx[k])
            best = (j, (xs[i] + xs[i + 1]) / 2.0)
    return best


def _grow(X: np.ndarray, y: np.ndarray, depth: int, max_depth: int | None,
          min_leaf: int, feature_fraction: float, rng: np.random.Generator | None) -> dict:
    if (
        (max_depth is not None and depth >= max_depth)
        or y.size < 2 * min_leaf
        or np.all(y == y[0])
    ):
        return {"value": float(y.mean())}
    p = X.shape[1]
    if feature_fraction < 1.0 and rng is not None:
        k = max(1, round(feature_fraction * p))
        features = np.sort(rng.choice(p, size=k, replace=False))
    else:
        features = np.arange(p)
    split = _best_split(X, y, min_leaf, features)
    if split is None:
        return {"value": float(y.mean())}
    j, threshold = split
    mask = X[:, j] <= threshold
    return {
        "feature": int(j),
        "threshold": float(threshold),
        "left": _grow(X[mask], y[mask], depth + 1, max_depth, min_leaf, feature_fraction, rng),
        "right": _grow(X[~mask], y[~mask], depth + 1, max_depth, min_leaf, feature_fraction, rng),
    }


def fit_tree(X: np.ndarray, y: np.ndarray, max_depth: int | None = None,
             min_leaf: int = 1, feature_fraction: float = 1.0,
             rng: np.random.Generator | None = None) -> dict:
    """Fit a single CART regression tree and return its root node."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float).ravel()
    if X.ndim != 2 or X.shape[0] != y.size or y.size == 0:
        raise NumericError(f"tree fit got mismatched shapes {X.shape} and {y.shape}")
    return _grow(X, y, 0, max_depth, min_leaf, feature_fraction, rng)


def tree_predict(node: dict, X: np.ndarray) -> np.ndarray:
    X = np.atleast_2d(np.asarray(X, dtype=float))
    out = np.empty(X.shape[0])

    def walk(node: dict, rows: np.ndarray) -> None:
        if "value" in node:
            out[rows] = node["value"]
            return
        mask = X[rows, node["feature"]] <= node["threshold"]
        walk(node["left"], rows[mask])
        walk(node["right"], rows[~mask])

    walk(node, np.arange(X.shape[0]))
    return out


def _canonical_order(X: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.lexsort((y,) + tuple(X[:, j] for j in reversed(range(X.shape[1]))))


def _check_training_data(X, y) -> tuple[np.ndarray, np.ndarray]:
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float).ravel()
    if X.ndim != 2 or X.shape[0] != y.size:
        raise NumericError(f"training data shapes do not match: {X.shape} vs {y.size}")
    if y.size < MIN_TRAIN_ROWS:
        raise NumericError(f"ensemble training needs >= {MIN_TRAIN_ROWS} rows, got {y.size}")
    order = _canonical_order(X, y)
    return X[order], y[order]


def rf_fit(X: np.ndarray, y: np.ndarray, params: ForestParams = ForestParams(),
           seed: int = 0) -> TreeEnsemble:
    """Random Forest: CART trees on bootstrap samples, prediction = tree mean."""
    X, y = _check_training_data(X, y)
    rng = np.random.default_rng(seed)
    n = y.size
    draws = max(1, round(params.subsample * n))
    trees = []
    for _ in range(params.n_trees):
        if params.bootstrap:
            idx = rng.integers(0, n, size=draws)
        else:
            idx = np.arange(n)
        trees.append(
            fit_tree(X[idx], y[idx], params.max_depth, params.min_leaf,
                     params.feature_fraction, rng)
        )
    return TreeEnsemble(kind="random_forest", trees=trees, params=asdict(params), seed=seed)


def gbr_fit(X: np.ndarray, y: np.ndarray, params: BoostingParams = BoostingParams(),
            seed: int = 0) -> TreeEnsemble:
    """Gradient boosting on squared error: stagewise trees fit to residuals."""
    X, y = _check_training_data(X, y)
    base = float(y.mean())
    current = np.full(y.size, base)
    trees = []
    for _ in range(params.n_trees):
        residuals = y - current
        tree = fit_tree(X, residuals, params.max_depth, params.min_leaf)
        trees.append(tree)
        current = current + params.learning_rate * tree_predict(tree, X)
    return TreeEnsemble(
        kind="gradient_boosting", trees=trees, params=asdict(params),
        seed=seed, base_prediction=base,
    )


def ensemble_predict(ensemble: TreeEnsemble, X: np.ndarray, n_trees: int | None = None) -> np.ndarray:
    """Predict with the first ``n_trees`` trees (all by default).

    The staged form supports inspecting gradient-boosting training curves.
    """
    X = np.atleast_2d(np.asarray(X, dtype=float))
    trees = ensemble.trees if n_trees is None else ensemble.trees[:n_trees]
    if ensemble.kind == "random_forest":
        if not trees:
            raise NumericError("random forest has no trees")
        return np.mean([tree_predict(t, X) for t in trees], axis=0)
    if ensemble.kind == "gradient_boosting":
        lr = ensemble.params["learning_rate"]
        out = np.full(X.shape[0], ensemble.base_prediction)
        for tree in trees:
            out = out + lr * tree_predict(tree, X)
        return out
    raise NumericError(f"unknown ensemble kind: {ensemble.kind!r}")
