"""Exception hierarchy shared across the toolkit.

The CLI maps these onto exit codes: usage errors exit 1, ``DataError`` exits 2,
``NumericError`` exits 3.
"""

from __future__ import annotations


class MtevalError(Exception):
    """Base class for all toolkit errors."""


class DataError(MtevalError):
    """Malformed or inconsistent input data: datasets, stores, model files."""


class EmbeddingMissError(DataError):
    """A text could not be resolved to an embedding vector."""

    def __init__(self, text: str):
        super().__init__(f"no embedding available for text: {text!r}")
        self.text = text


class RemoteEncoderError(DataError):
    """The remote encoder endpoint failed after the configured retries."""

    def __init__(self, message: str, status: int | None = None):
        super().__init__(message)
        self.status = status


class NumericError(MtevalError):
    """Numeric or training failure: rank deficiency, degenerate inputs, overflow."""


class ZeroVarianceError(NumericError):
    """A correlation is undefined because one input has zero variance."""
