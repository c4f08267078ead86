"""Text normalization and non-phonetic string similarity primitives.

All similarity functions expect normalized text (see :func:`normalize`) and
return values in [0, 1]. The convention for degenerate inputs is fixed across
the toolkit: two empty strings are identical and score 1.0, an empty string
against a non-empty one scores 0.0.
"""

from __future__ import annotations

import unicodedata
from difflib import SequenceMatcher


def normalize(raw: str) -> str:
    """Canonicalize raw text: NFC, lowercase, whitespace collapsed to single spaces.

    Idempotent; empty input yields the empty string.
    """
    return " ".join(unicodedata.normalize("NFC", raw).lower().split())


def tokenize(text: str) -> list[str]:
    """Split normalized text on spaces, preserving duplicates and order."""
    return text.split(" ") if text else []


def char_ngrams(text: str, n: int) -> set[str]:
    """Set of contiguous character n-grams of ``text``.

    Strings shorter than ``n`` (but non-empty) contribute the whole string as
    a single gram, so short tokens still participate in gram overlap.
    """
    if n < 1:
        raise ValueError(f"n-gram order must be >= 1, got {n}")
    if not text:
        return set()
    if len(text) < n:
        return {text}
    return {text[i : i + n] for i in range(len(text) - n + 1)}


def jaccard_trigram(reference: str, hypothesis: str) -> float:
    """Intersection-over-union of character trigram sets."""
    r_grams = char_ngrams(reference, 3)
    h_grams = char_ngrams(hypothesis, 3)
    if not r_grams and not h_grams:
        return 1.0
    union = r_grams | h_grams
    return len(r_grams & h_grams) / len(union)


def damerau_levenshtein(a: str, b: str) -> int:
    """Damerau-Levenshtein distance, optimal string alignment variant.

    Counts insertions, deletions, substitutions, and adjacent transpositions,
    with each substring edited at most once. Lengths are unicode scalar
    values.
    """
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    # rows: two_ago, one_ago, current
    two_ago = [0] * (lb + 1)
    one_ago = list(range(lb + 1))
    for i in range(1, la + 1):
        current = [i] + [0] * lb
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            best = min(
                one_ago[j] + 1,  # deletion
                current[j - 1] + 1,  # insertion
                one_ago[j - 1] + cost,  # substitution
            )
            if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
                best = min(best, two_ago[j - 2] + 1)  # transposition
            current[j] = best
        two_ago, one_ago = one_ago, current
    return one_ago[lb]


def lexical_similarity(reference: str, hypothesis: str) -> float:
    """Normalized Damerau-Levenshtein similarity: 1 - d / max(|r|, |h|)."""
    longest = max(len(reference), len(hypothesis))
    if longest == 0:
        return 1.0
    return 1.0 - damerau_levenshtein(reference, hypothesis) / longest


def sequence_ratio(a: str, b: str) -> float:
    """Ratcliff/Obershelp ratio 2M / (|a| + |b|).

    M is the total number of matched characters under recursive
    longest-common-substring matching. autojunk is disabled so long strings
    are matched exactly like short ones.
    """
    if not a and not b:
        return 1.0
    return SequenceMatcher(None, a, b, autojunk=False).ratio()


def token_sort_ratio(reference: str, hypothesis: str) -> float:
    """Sequence ratio after sorting each side's tokens, for word-order robustness."""
    r_sorted = " ".join(sorted(tokenize(reference)))
    h_sorted = " ".join(sorted(tokenize(hypothesis)))
    return sequence_ratio(r_sorted, h_sorted)
