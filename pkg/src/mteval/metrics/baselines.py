"""Sentence-level BLEU and chrF / chrF++ baselines on the 0-100 scale.

BLEU uses n-gram orders 1-4 with clipped counts, add-one smoothing on the
precisions of orders >= 2, and the usual brevity penalty (token counts);
no smoothing is applied to unigrams, so zero unigram overlap scores 0.

chrF averages character n-gram precision and recall over orders 1-6
(whitespace stripped from the character stream) and combines them with
beta = 2; chrF++ additionally pools word unigram and bigram statistics into
the same averages. Orders where neither side has any n-grams are excluded
from the average so short identical pairs still score 100.
"""

from __future__ import annotations

import math
from collections import Counter

from ..textsim import normalize, tokenize


def _ngram_counts(items, n: int) -> Counter:
    return Counter(tuple(items[i : i + n]) for i in range(len(items) - n + 1))


def _clipped_matches(hyp: Counter, ref: Counter) -> int:
    return sum((hyp & ref).values())


def bleu(reference: str, hypothesis: str) -> float:
    """Smoothed sentence BLEU in [0, 100]."""
    ref = tokenize(normalize(reference))
    hyp = tokenize(normalize(hypothesis))
    if not ref and not hyp:
        return 100.0
    if not ref or not hyp:
        return 0.0
    log_precision_sum = 0.0
    for n in range(1, 5):
        hyp_counts = _ngram_counts(hyp, n)
        ref_counts = _ngram_counts(ref, n)
        matches = _clipped_matches(hyp_counts, ref_counts)
        total = sum(hyp_counts.values())
        if n == 1:
            if matches == 0:
                return 0.0
            precision = matches / total
        else:
            precision = (matches + 1) / (total + 1)
        log_precision_sum += math.log(precision)
    brevity = 1.0 if len(hyp) >= len(ref) else math.exp(1.0 - len(ref) / len(hyp))
    return 100.0 * brevity * math.exp(log_precision_sum / 4.0)


def _fbeta(precision: float, recall: float, beta: float) -> float:
    if precision + recall == 0.0:
        return 0.0
    b2 = beta * beta
    return (1 + b2) * precision * recall / (b2 * precision + recall)


def _pooled_pr(pools: list[tuple[list, list, int]]) -> tuple[float, float]:
    """Average precision/recall over every order with any n-grams on either side."""
    precisions = []
    recalls = []
    for ref_items, hyp_items, max_n in pools:
        for n in range(1, max_n + 1):
            ref_counts = _ngram_counts(ref_items, n)
            hyp_counts = _ngram_counts(hyp_items, n)
            if not ref_counts and not hyp_counts:
                continue
            matches = _clipped_matches(hyp_counts, ref_counts)
            precisions.append(matches / sum(hyp_counts.values()) if hyp_counts else 0.0)
            recalls.append(matches / sum(ref_counts.values()) if ref_counts else 0.0)
    if not precisions:
        return 0.0, 0.0
    return sum(precisions) / len(precisions), sum(recalls) / len(recalls)


def chrf(reference: str, hypothesis: str, max_n: int = 6, beta: float = 2.0) -> float:
    """Character n-gram F-beta score in [0, 100]."""
    ref_norm = normalize(reference)
    hyp_norm = normalize(hypothesis)
    if not ref_norm and not hyp_norm:
        return 100.0
    if not ref_norm or not hyp_norm:
        return 0.0
    ref_chars = list(ref_norm.replace(" ", ""))
    hyp_chars = list(hyp_norm.replace(" ", ""))
    precision, recall = _pooled_pr([(ref_chars, hyp_chars, max_n)])
    return 100.0 * _fbeta(precision, recall, beta)


def chrf_pp(reference: str, hypothesis: str, max_n: int = 6, word_n: int = 2,
            beta: float = 2.0) -> float:
    """chrF++: character orders 1..max_n plus word orders 1..word_n."""
    ref_norm = normalize(reference)
    hyp_norm = normalize(hypothesis)
    if not ref_norm and not hyp_norm:
        return 100.0
    if not ref_norm or not hyp_norm:
        return 0.0
    pools = [
        (list(ref_norm.replace(" ", "")), list(hyp_norm.replace(" ", "")), max_n),
        (tokenize(ref_norm), tokenize(hyp_norm), word_n),
    ]
    precision, recall = _pooled_pr(pools)
    return 100.0 * _fbeta(precision, recall, beta)
