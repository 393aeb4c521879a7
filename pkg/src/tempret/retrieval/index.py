# ABOUTME: The passage index: one encoded vector and one epoch day per corpus passage.
# ABOUTME: Builds, serializes and reloads indexes, verifying encoder and corpus on load.

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

import numpy as np
import numpy.typing as npt

from tempret.corpus.dates import epoch_day
from tempret.corpus.passages import Corpus, corpus_hash
from tempret.embedding.encoder import Encoder
from tempret.errors import FingerprintMismatch, SchemaError

# Type alias for progress callbacks: (message: str) -> None
ProgressCallback = Callable[[str], None]

INDEX_FORMAT_VERSION = 1


@dataclass(frozen=True)
class Index:
    """Encoded corpus aligned by position. Arrays are read-only."""

    corpus: Corpus
    vectors: npt.NDArray[np.float64]
    dates: npt.NDArray[np.int64]
    encoder_fingerprint: str
    corpus_hash: str
    # Rank of each passage id in lexicographic order, used for tie-breaking.
    id_ranks: npt.NDArray[np.int64] = field(repr=False)

    def __len__(self) -> int:
        return len(self.corpus)

    @property
    def dimension(self) -> int:
        return int(self.vectors.shape[1])


def _assemble(
    corpus: Corpus,
    vectors: npt.NDArray[np.float64],
    dates: npt.NDArray[np.int64],
    fingerprint: str,
    digest: str,
) -> Index:
    ids = [p.id for p in corpus]
    id_ranks = np.empty(len(ids), dtype=np.int64)
    id_ranks[np.argsort(np.array(ids, dtype=object), kind="stable")] = np.arange(len(ids))
    for array in (vectors, dates, id_ranks):
        array.setflags(write=False)
    return Index(
        corpus=corpus,
        vectors=vectors,
        dates=dates,
        encoder_fingerprint=fingerprint,
        corpus_hash=digest,
        id_ranks=id_ranks,
    )


def build_index(
    corpus: Corpus, encoder: Encoder, on_progress: Optional[ProgressCallback] = None
) -> Index:
    """Encode every passage and convert every passage date to an epoch day.

    Args:
        corpus: Validated corpus
        encoder: Encoder used for passages (and later for queries)
        on_progress: Optional callback for progress updates

    Returns:
        Index aligned with corpus positions
    """
    if on_progress:
        on_progress(f"Encoding {len(corpus)} passages with {encoder.fingerprint}")
    texts = [p.text for p in corpus]
    vectors = encoder.encode_batch(texts) if texts else np.zeros((0, encoder.dimension))
    dates = np.array([epoch_day(p.date) for p in corpus], dtype=np.int64)
    return _assemble(
        corpus, np.ascontiguousarray(vectors, dtype=np.float64), dates,
        encoder.fingerprint, corpus_hash(corpus),
    )


def save_index(index: Index, path: Path) -> None:
    """Write an index as a stream of three .npy arrays: header, dates, vectors.

    The header is UTF-8 JSON stored as a uint8 array. Identical indexes give
    byte-identical files.
    """
    header = {
        "format_version": INDEX_FORMAT_VERSION,
        "encoder_fingerprint": index.encoder_fingerprint,
        "corpus_hash": index.corpus_hash,
        "dimension": index.dimension,
        "size": len(index),
    }
    header_bytes = np.frombuffer(
        json.dumps(header, sort_keys=True).encode("utf-8"), dtype=np.uint8
    )
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as f:
        np.save(f, header_bytes, allow_pickle=False)
        np.save(f, np.asarray(index.dates, dtype="<i8"), allow_pickle=False)
        np.save(f, np.asarray(index.vectors, dtype="<f8"), allow_pickle=False)


def load_index(path: Path, corpus: Corpus, encoder: Encoder) -> Index:
    """Read an index written by save_index and check it matches corpus and encoder.

    Raises:
        FileNotFoundError: If the file doesn't exist
        SchemaError: If the file is not a readable index
        FingerprintMismatch: If the encoder or corpus differ from the ones it was built with
    """
    with open(path, "rb") as f:
        try:
            header = json.loads(np.load(f, allow_pickle=False).tobytes().decode("utf-8"))
            dates = np.load(f, allow_pickle=False)
            vectors = np.load(f, allow_pickle=False)
        except (ValueError, EOFError, UnicodeDecodeError) as e:
            raise SchemaError(f"not a tempret index file: {path}") from e

    if not isinstance(header, dict):
        raise SchemaError(f"index header is not a JSON object: {path}")
    if header.get("format_version") != INDEX_FORMAT_VERSION:
        raise SchemaError(f"unsupported index format: {header.get('format_version')}")
    fingerprint, stored_hash = header.get("encoder_fingerprint"), header.get("corpus_hash")
    if not isinstance(fingerprint, str) or not isinstance(stored_hash, str):
        raise SchemaError("index header lacks encoder_fingerprint or corpus_hash")
    if fingerprint != encoder.fingerprint:
        raise FingerprintMismatch(
            f"index built with {fingerprint}, current encoder is {encoder.fingerprint}"
        )
    digest = corpus_hash(corpus)
    if stored_hash != digest:
        raise FingerprintMismatch("index was built from a different corpus")
    if vectors.shape != (len(corpus), encoder.dimension) or dates.shape != (len(corpus),):
        raise SchemaError("index arrays do not match the corpus size or encoder dimension")

    return _assemble(
        corpus,
        np.ascontiguousarray(vectors, dtype=np.float64),
        np.ascontiguousarray(dates, dtype=np.int64),
        fingerprint,
        digest,
    )
