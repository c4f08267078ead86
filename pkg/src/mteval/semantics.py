"""Semantic similarity via pluggable sentence-embedding providers.

Three backends realize the provider contract: a precomputed store file, a
remote encoder endpoint, and a deterministic hashed character n-gram
fallback that lets the whole pipeline run without model weights or network.

Store file format (UTF-8)::

    #dim=<d> source=<tag>
    <normalized text><TAB><d space-separated decimal floats>

Remote protocol: HTTP POST of a line-delimited batch of texts; the response
body contains one vector line (space-separated floats) per input line, in
the same order.
"""

from __future__ import annotations

import hashlib
import threading
import time
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from typing import Protocol

import numpy as np

from .errors import DataError, EmbeddingMissError, RemoteEncoderError

HASH_KEY = b"hashed-ngram-v1"  # fixed seed for the fallback's bucket hash


def cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Cosine similarity of two vectors, in [-1, 1]."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise DataError(f"embedding dimension mismatch: {u.shape} vs {v.shape}")
    nu = float(np.linalg.norm(u))
    nv = float(np.linalg.norm(v))
    if nu == 0.0 or nv == 0.0:
        raise DataError("zero embedding vector (corrupt store?)")
    return float(np.dot(u, v) / (nu * nv))


class EmbeddingProvider(Protocol):
    source_tag: str

    def vector(self, text: str) -> np.ndarray: ...


def semantic_similarity(reference: str, hypothesis: str, provider: EmbeddingProvider) -> float:
    """Clamped cosine similarity of the two texts' embeddings, in [0, 1].

    Identical texts score exactly 1.0 without touching the provider;
    negative cosines clamp to 0.
    """
    if reference == hypothesis:
        return 1.0
    c = cosine(provider.vector(reference), provider.vector(hypothesis))
    return min(1.0, max(0.0, c))


# ---------------------------------------------------------------------------
# hashed n-gram fallback


def _char_gram_counts(text: str, n: int) -> dict[str, int]:
    counts: dict[str, int] = {}
    grams = [text] if len(text) < n else [text[i : i + n] for i in range(len(text) - n + 1)]
    for g in grams:
        counts[g] = counts.get(g, 0) + 1
    return counts


def hashed_ngram_embed(text: str, dim: int, n: int = 3) -> np.ndarray:
    """Deterministic unit vector: character n-gram counts hashed into ``dim`` buckets."""
    if dim < 16:
        raise ValueError(f"embedding dim must be >= 16, got {dim}")
    if n < 1:
        raise ValueError(f"n-gram order must be >= 1, got {n}")
    if not text:
        raise ValueError("cannot embed empty text")
    vec = np.zeros(dim, dtype=float)
    for gram, count in _char_gram_counts(text, n).items():
        digest = hashlib.blake2b(gram.encode("utf-8"), digest_size=8, key=HASH_KEY).digest()
        vec[int.from_bytes(digest, "big") % dim] += count
    return vec / np.linalg.norm(vec)


@dataclass
class HashedNgramProvider:
    """Offline stand-in for a sentence encoder; fully deterministic."""

    dim: int = 256
    n: int = 3
    source_tag: str = field(init=False)

    def __post_init__(self):
        self.source_tag = f"hashed-ngram(dim={self.dim},n={self.n})"

    def vector(self, text: str) -> np.ndarray:
        return hashed_ngram_embed(text, self.dim, self.n)


# ---------------------------------------------------------------------------
# precomputed store


@dataclass
class EmbeddingStore:
    """Immutable map from normalized text to a fixed-dimension vector."""

    entries: dict[str, np.ndarray] = field(default_factory=dict)
    dim: int | None = None
    source_tag: str = ""

    def add(self, text: str, vector: np.ndarray) -> None:
        vector = np.asarray(vector, dtype=float)
        if vector.ndim != 1 or vector.size == 0:
            raise DataError(f"embedding for {text!r} must be a non-empty 1-d vector")
        if not np.all(np.isfinite(vector)):
            raise DataError(f"non-finite embedding component for text {text!r}")
        if self.dim is None:
            self.dim = vector.size
        elif vector.size != self.dim:
            raise DataError(
                f"mixed embedding dims: expected {self.dim}, got {vector.size} for {text!r}"
            )
        self.entries[text] = vector

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, text: str) -> bool:
        return text in self.entries


def load_store(path) -> EmbeddingStore:
    """Parse and validate a store file; malformed records report their line number."""
    store = EmbeddingStore()
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        return store
    header = lines[0]
    if not header.startswith("#"):
        raise DataError(f"{path}:1: store header must start with '#dim=... source=...'")
    fields = header[1:].split(maxsplit=1)
    try:
        store.dim = int(fields[0].removeprefix("dim="))
    except (IndexError, ValueError):
        raise DataError(f"{path}:1: malformed store header: {header!r}") from None
    if len(fields) > 1 and fields[1].startswith("source="):
        store.source_tag = fields[1].removeprefix("source=")
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        text, sep, payload = line.partition("\t")
        if not sep:
            raise DataError(f"{path}:{lineno}: expected '<text><TAB><floats>'")
        try:
            vector = np.array([float(x) for x in payload.split()], dtype=float)
        except ValueError:
            raise DataError(f"{path}:{lineno}: unparsable embedding component") from None
        try:
            store.add(text, vector)
        except DataError as exc:
            raise DataError(f"{path}:{lineno}: {exc}") from None
    return store


def save_store(store: EmbeddingStore, path) -> None:
    """Write a store file; float components use shortest round-trip formatting."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"#dim={store.dim if store.dim is not None else 0} source={store.source_tag}\n")
        for text in sorted(store.entries):
            payload = " ".join(repr(float(x)) for x in store.entries[text])
            fh.write(f"{text}\t{payload}\n")


@dataclass
class StoreProvider:
    store: EmbeddingStore

    @property
    def source_tag(self) -> str:
        return self.store.source_tag

    def vector(self, text: str) -> np.ndarray:
        try:
            return self.store.entries[text]
        except KeyError:
            raise EmbeddingMissError(text) from None


# ---------------------------------------------------------------------------
# remote encoder client


class RemoteProvider:
    """Client for the line-delimited remote encoder protocol.

    Batches requests, retries transient failures, and caches resolved
    vectors for the lifetime of the provider. Cache updates are serialized;
    concurrent lookups are safe.
    """

    def __init__(self, endpoint: str, timeout: float = 10.0, retries: int = 2,
                 batch_size: int = 64, retry_wait: float = 0.2):
        self.endpoint = endpoint
        self.timeout = timeout
        self.retries = retries
        self.batch_size = batch_size
        self.retry_wait = retry_wait
        self.source_tag = f"remote({endpoint})"
        self._cache: dict[str, np.ndarray] = {}
        self._lock = threading.Lock()

    def vector(self, text: str) -> np.ndarray:
        with self._lock:
            if text in self._cache:
                return self._cache[text]
        self.prefetch([text])
        return self._cache[text]

    def prefetch(self, texts: list[str]) -> None:
        with self._lock:
            missing = [t for t in dict.fromkeys(texts) if t not in self._cache]
        for start in range(0, len(missing), self.batch_size):
            batch = missing[start : start + self.batch_size]
            vectors = self._post(batch)
            with self._lock:
                self._cache.update(zip(batch, vectors))

    def _post(self, batch: list[str]) -> list[np.ndarray]:
        body = "\n".join(batch).encode("utf-8")
        request = urllib.request.Request(
            self.endpoint, data=body, headers={"Content-Type": "text/plain; charset=utf-8"}
        )
        last_error: Exception | None = None
        for attempt in range(self.retries + 1):
            if attempt:
                time.sleep(self.retry_wait)
            try:
                with urllib.request.urlopen(request, timeout=self.timeout) as response:
                    payload = response.read().decode("utf-8")
                break
            except urllib.error.HTTPError as exc:
                last_error = RemoteEncoderError(
                    f"encoder endpoint returned status {exc.code}", status=exc.code
                )
            except (urllib.error.URLError, OSError) as exc:
                last_error = RemoteEncoderError(f"encoder endpoint unreachable: {exc}")
        else:
            raise last_error  # type: ignore[misc]
        lines = [ln for ln in payload.splitlines() if ln]
        if len(lines) != len(batch):
            raise RemoteEncoderError(
                f"encoder returned {len(lines)} vectors for {len(batch)} texts"
            )
        vectors = []
        for ln in lines:
            vec = np.array([float(x) for x in ln.split()], dtype=float)
            if not np.all(np.isfinite(vec)):
                raise RemoteEncoderError("encoder returned non-finite components")
            vectors.append(vec)
        return vectors
