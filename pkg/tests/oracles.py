"""Independent reference implementations used as test oracles.

These deliberately take different routes than the package: plain recursion
for edit distance, brute-force longest-common-substring matching for the
sequence ratio, gradient descent for the linear models, and pure-Python
summation for the correlations.
"""

from __future__ import annotations

import math

import numpy as np


def osa_distance_recursive(a: str, b: str, cache: dict | None = None) -> int:
    """Optimal-string-alignment distance straight from the recursive definition."""
    if cache is None:
        cache = {}
    key = (a, b)
    if key in cache:
        return cache[key]
    if not a:
        result = len(b)
    elif not b:
        result = len(a)
    else:
        result = min(
            osa_distance_recursive(a[:-1], b, cache) + 1,  # delete
            osa_distance_recursive(a, b[:-1], cache) + 1,  # insert
            osa_distance_recursive(a[:-1], b[:-1], cache) + (1 if a[-1] != b[-1] else 0),
        )
        if len(a) >= 2 and len(b) >= 2 and a[-1] == b[-2] and a[-2] == b[-1]:
            result = min(result, osa_distance_recursive(a[:-2], b[:-2], cache) + 1)
    cache[key] = result
    return result


def _longest_common_block(a: str, b: str) -> tuple[int, int, int]:
    """Longest common substring (i, j, length); ties prefer smallest i, then j."""
    best = (0, 0, 0)
    for i in range(len(a)):
        for j in range(len(b)):
            k = 0
            while i + k < len(a) and j + k < len(b) and a[i + k] == b[j + k]:
                k += 1
            if k > best[2]:
                best = (i, j, k)
    return best


def ratcliff_matches(a: str, b: str) -> int:
    """Total matched characters under recursive longest-common-substring matching."""
    if not a or not b:
        return 0
    i, j, k = _longest_common_block(a, b)
    if k == 0:
        return 0
    return k + ratcliff_matches(a[:i], b[:j]) + ratcliff_matches(a[i + k :], b[j + k :])


def ratcliff_ratio(a: str, b: str) -> float:
    if not a and not b:
        return 1.0
    return 2.0 * ratcliff_matches(a, b) / (len(a) + len(b))


def gd_linear_oracle(X, y, lam: float = 0.0, max_iters: int = 500_000,
                     tol: float = 1e-12) -> tuple[np.ndarray, float]:
    """Minimize ||y - Xw - b||^2 + lam ||w||^2 by plain gradient descent."""
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=float).ravel()
    n, p = X.shape
    A = np.column_stack([X, np.ones(n)])
    hessian = 2.0 * (A.T @ A + np.diag([lam] * p + [0.0]))
    step = 1.0 / np.linalg.eigvalsh(hessian).max()
    theta = np.zeros(p + 1)
    for _ in range(max_iters):
        residual = y - A @ theta
        grad = -2.0 * (A.T @ residual)
        grad[:p] += 2.0 * lam * theta[:p]
        if np.max(np.abs(grad)) < tol * n:
            break
        theta = theta - step * grad
    return theta[:p], float(theta[p])


def pearson_oracle(x, y) -> float:
    """Direct formula with pure-Python accumulation."""
    x = [float(v) for v in x]
    y = [float(v) for v in y]
    n = len(x)
    mx = math.fsum(x) / n
    my = math.fsum(y) / n
    num = math.fsum((a - mx) * (b - my) for a, b in zip(x, y))
    den = math.sqrt(
        math.fsum((a - mx) ** 2 for a in x) * math.fsum((b - my) ** 2 for b in y)
    )
    return num / den


def explicit_average_ranks(values) -> list[float]:
    """1-based average ranks by explicit grouping of sorted positions."""
    indexed = sorted(range(len(values)), key=lambda i: values[i])
    ranks = [0.0] * len(values)
    i = 0
    while i < len(indexed):
        j = i
        while j + 1 < len(indexed) and values[indexed[j + 1]] == values[indexed[i]]:
            j += 1
        mean_rank = (i + 1 + j + 1) / 2.0
        for k in range(i, j + 1):
            ranks[indexed[k]] = mean_rank
        i = j + 1
    return ranks


def spearman_oracle(x, y) -> float:
    return pearson_oracle(explicit_average_ranks(list(x)), explicit_average_ranks(list(y)))
