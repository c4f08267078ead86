"""Feature assembly, scaling, regressors, and model persistence."""

from .features import FeatureVector, extract_features, feature_matrix
from .linear import LinearModel, linear_predict, ols_fit, ridge_fit
from .model import ScoreModel, load_model, save_model
from .scaling import MinMaxScaler, minmax_apply, minmax_fit
from .trees import (
    BoostingParams,
    ForestParams,
    TreeEnsemble,
    ensemble_predict,
    fit_tree,
    gbr_fit,
    rf_fit,
    tree_predict,
)

__all__ = [
    "FeatureVector",
    "extract_features",
    "feature_matrix",
    "LinearModel",
    "linear_predict",
    "ols_fit",
    "ridge_fit",
    "MinMaxScaler",
    "minmax_apply",
    "minmax_fit",
    "ForestParams",
    "BoostingParams",
    "TreeEnsemble",
    "fit_tree",
    "tree_predict",
    "rf_fit",
    "gbr_fit",
    "ensemble_predict",
    "ScoreModel",
    "save_model",
    "load_model",
]
