from __future__ import annotations

import pytest

from mteval.semantics import HashedNgramProvider


@pytest.fixture(scope="session")
def provider():
    return HashedNgramProvider(dim=128, n=3)


@pytest.fixture
def tiny_dataset_file(tmp_path):
    """A well-formed 3-row annotated dataset on disk."""
    path = tmp_path / "tiny.tsv"
    path.write_text(
        "id\tsource\treference\thypothesis\tsemantic\tfluency\n"
        "s1\tuna fuente\thola mundo\thola mundo\t100\t95\n"
        "s2\totra fuente\tbuenos dias\tbuenas dia\t70\t60\n"
        "s3\ttercera\tgracias amigo\tadios enemigo\t30\t40\n",
        encoding="utf-8",
    )
    return path
