"""Synthetic annotated datasets with controllable difficulty.

Pairs are built from a syllabic vocabulary (diacritic-rich, so the phonetic
transliteration path is exercised) and perturbed with character edits, word
swaps, drops, and substitutions of increasing intensity. Human-style scores
are then derived from the true similarity features:

- semantic: 100 * (0.45 L + 0.15 P + 0.30 S + 0.10 F) + Gaussian noise
- fluency ("linear"): the same functional form, independent noise
- fluency ("nonlinear"): a threshold-interaction target that linear models
  cannot represent, for separating the tree-based approaches from OLS

Scores are not clamped, so they can leave [0, 100] by a noise margin.
"""

from __future__ import annotations

import numpy as np

from .evalcli.dataset import AnnotatedDataset, SegmentPair
from .mlcore import extract_features
from .phonetics import PhoneticScheme
from .semantics import EmbeddingProvider, HashedNgramProvider

SEMANTIC_WEIGHTS = (0.45, 0.15, 0.30, 0.10)

_SYLLABLES = [
    "ka", "ke", "ki", "ko", "ku", "ta", "te", "ti", "to", "tu",
    "pa", "pe", "pi", "po", "pu", "ma", "me", "mi", "mo", "mu",
    "na", "ne", "ni", "no", "nu", "ra", "re", "ri", "ro", "ru",
    "ya", "yu", "yo", "wa", "we", "sa", "se", "si", "so", "su",
    "ña", "ñe", "ñi", "chá", "ché", "guá", "mbó", "ndé", "porã", "tekó",
]
_ALPHABET = "abcdefghijklmnopqrstuvwxyzáéíóúñã"


def _make_vocabulary(rng: np.random.Generator, size: int = 400) -> list[str]:
    vocab = []
    for _ in range(size):
        n_syllables = int(rng.integers(1, 4))
        word = "".join(_SYLLABLES[int(rng.integers(0, len(_SYLLABLES)))] for _ in range(n_syllables))
        vocab.append(word)
    return vocab


def _perturb_word(word: str, intensity: float, rng: np.random.Generator) -> str:
    chars = list(word)
    i = 0
    while i < len(chars):
        roll = rng.random()
        if roll < intensity * 0.12:
            chars[i] = _ALPHABET[int(rng.integers(0, len(_ALPHABET)))]
        elif roll < intensity * 0.18 and i + 1 < len(chars):
            chars[i], chars[i + 1] = chars[i + 1], chars[i]
            i += 1
        elif roll < intensity * 0.22 and len(chars) > 2:
            del chars[i]
            continue
        i += 1
    return "".join(chars) or word


def _perturb_sentence(words: list[str], vocab: list[str], intensity: float,
                      rng: np.random.Generator) -> list[str]:
    out = []
    for word in words:
        if rng.random() < intensity * 0.25:
            out.append(vocab[int(rng.integers(0, len(vocab)))])
        else:
            out.append(_perturb_word(word, intensity, rng))
    if len(out) > 2 and rng.random() < intensity * 0.5:
        i, j = rng.choice(len(out), size=2, replace=False)
        out[i], out[j] = out[j], out[i]
    if len(out) > 2 and rng.random() < intensity * 0.3:
        del out[int(rng.integers(0, len(out)))]
    return out


def _nonlinear_fluency(feats: np.ndarray) -> float:
    lex, _, sem, fuzzy = feats
    plateau = 1.0 if (sem > 0.55 and lex > 0.5) else 0.0
    return 100.0 * (0.15 + 0.60 * plateau + 0.25 * fuzzy)


def generate_dataset(
    n_rows: int,
    seed: int,
    provider: EmbeddingProvider | None = None,
    scheme: PhoneticScheme = PhoneticScheme.SOUNDEX_METAPHONE,
    fluency_target: str = "linear",
    noise_sigma: float = 2.0,
    language_tag: str = "syn",
) -> AnnotatedDataset:
    """Generate ``n_rows`` annotated pairs; fully determined by ``seed``."""
    if fluency_target not in ("linear", "nonlinear"):
        raise ValueError(f"fluency_target must be linear or nonlinear, got {fluency_target!r}")
    rng = np.random.default_rng(seed)
    provider = provider or HashedNgramProvider()
    vocab = _make_vocabulary(rng)
    weights = np.array(SEMANTIC_WEIGHTS)
    rows = []
    for index in range(n_rows):
        length = int(rng.integers(3, 9))
        ref_words = [vocab[int(rng.integers(0, len(vocab)))] for _ in range(length)]
        intensity = float(rng.random())
        hyp_words = _perturb_sentence(ref_words, vocab, intensity, rng)
        reference = " ".join(ref_words)
        hypothesis = " ".join(hyp_words)
        feats = extract_features(reference, hypothesis, provider, scheme).as_array()
        semantic = 100.0 * float(weights @ feats) + float(rng.normal(0.0, noise_sigma))
        if fluency_target == "linear":
            fluency = 100.0 * float(weights @ feats) + float(rng.normal(0.0, noise_sigma))
        else:
            fluency = _nonlinear_fluency(feats) + float(rng.normal(0.0, noise_sigma))
        source_words = [vocab[int(rng.integers(0, len(vocab)))] for _ in range(length)]
        rows.append(
            SegmentPair(
                segment_id=f"s{index:04d}",
                source=" ".join(source_words),
                reference=reference,
                hypothesis=hypothesis,
                semantic=semantic,
                fluency=fluency,
            )
        )
    return AnnotatedDataset(language_tag=language_tag, rows=rows)


def write_dataset(dataset: AnnotatedDataset, path) -> None:
    """Write a dataset in the TSV schema the loader expects."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("id\tsource\treference\thypothesis\tsemantic\tfluency\n")
        for row in dataset.rows:
            sem = "" if row.semantic is None else f"{row.semantic:.4f}"
            flu = "" if row.fluency is None else f"{row.fluency:.4f}"
            fh.write(f"{row.segment_id}\t{row.source}\t{row.reference}\t{row.hypothesis}\t{sem}\t{flu}\n")
