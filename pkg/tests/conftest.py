# ABOUTME: Shared pytest fixtures for the corpus, retrieval, evaluation and CLI tests.
# ABOUTME: Provides the three-version corpus in memory and on disk.

from pathlib import Path

import pytest

from tempret.corpus.passages import Corpus, save_corpus
from tests.factories import three_version_corpus


@pytest.fixture
def versions_corpus() -> Corpus:
    return three_version_corpus()


@pytest.fixture
def versions_dir(tmp_path: Path, versions_corpus: Corpus) -> Path:
    """Data directory holding the three-version corpus."""
    data_dir = tmp_path / "data"
    save_corpus(versions_corpus, data_dir / "corpus.jsonl")
    return data_dir
