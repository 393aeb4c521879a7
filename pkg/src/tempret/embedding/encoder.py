# ABOUTME: Abstract text encoder interface with a deterministic signed feature-hashing encoder.
# ABOUTME: Also defines the semantic relevance score (dot product) and the encoder factory.

import hashlib
import re
from abc import ABC, abstractmethod
from functools import lru_cache
from typing import Sequence

import numpy as np
import numpy.typing as npt

from tempret.config import EncoderConfig
from tempret.errors import DimensionMismatch

EmbeddingVector = npt.NDArray[np.float64]

_TOKEN = re.compile(r"[^\W_]+")


def tokenize(text: str) -> list[str]:
    """Lowercase and split on anything that is not a letter or digit."""
    return _TOKEN.findall(text.lower())


def features(text: str) -> list[str]:
    """Word unigrams plus boundary-marked character trigrams of every token.

    Trigrams are taken over ``<token>`` so short tokens still yield one, and
    unigram and trigram features never share a name.
    """
    result: list[str] = []
    for token in tokenize(text):
        result.append(f"w:{token}")
        padded = f"<{token}>"
        result.extend(f"c:{padded[i:i + 3]}" for i in range(len(padded) - 2))
    return result


class Encoder(ABC):
    """Abstract base class for text encoders."""

    @property
    @abstractmethod
    def dimension(self) -> int:
        """Length of every vector this encoder produces."""

    @property
    @abstractmethod
    def fingerprint(self) -> str:
        """String identifying the encoder and its parameters."""

    @abstractmethod
    def encode(self, text: str) -> EmbeddingVector:
        """Encode text into a fixed-dimension vector.

        Args:
            text: The text to encode.

        Returns:
            Vector of length ``dimension``; equal text gives an equal vector.
        """

    def encode_batch(self, texts: Sequence[str]) -> npt.NDArray[np.float64]:
        """Encode several texts into an (n, dimension) matrix, row i for texts[i]."""
        matrix = np.zeros((len(texts), self.dimension), dtype=np.float64)
        for i, text in enumerate(texts):
            matrix[i] = self.encode(text)
        return matrix


class HashingEncoder(Encoder):
    """Signed feature-hashing encoder over word unigrams and character trigrams."""

    def __init__(self, dimension: int = 1024, seed: int = 20240101) -> None:
        """Initialize the encoder.

        Args:
            dimension: Number of hash buckets (vector length).
            seed: Salt mixed into every feature hash.
        """
        if dimension < 1:
            raise ValueError("dimension must be positive")
        self._dimension = dimension
        self.seed = seed
        self._slot = lru_cache(maxsize=1 << 18)(self._hash_feature)

    @property
    def dimension(self) -> int:
        return self._dimension

    @property
    def fingerprint(self) -> str:
        return f"hashing-ngram-v1:dim={self._dimension}:seed={self.seed}"

    def _hash_feature(self, feature: str) -> tuple[int, float]:
        digest = hashlib.md5(f"{self.seed}:{feature}".encode("utf-8")).digest()
        bucket = int.from_bytes(digest[:8], "little") % self._dimension
        sign = 1.0 if digest[8] & 1 else -1.0
        return bucket, sign

    def encode(self, text: str) -> EmbeddingVector:
        vector = np.zeros(self._dimension, dtype=np.float64)
        feats = features(text)
        if not feats:
            return vector
        slots = [self._slot(feature) for feature in feats]
        buckets = np.fromiter((b for b, _ in slots), dtype=np.int64, count=len(slots))
        signs = np.fromiter((s for _, s in slots), dtype=np.float64, count=len(slots))
        np.add.at(vector, buckets, signs)
        norm = np.linalg.norm(vector)
        if norm > 0:
            vector /= norm
        return vector


def semantic_score(q: EmbeddingVector, d: EmbeddingVector) -> float:
    """Dot product of two encoder representations.

    Raises:
        DimensionMismatch: If the vectors differ in length
    """
    if q.shape != d.shape:
        raise DimensionMismatch(f"cannot compare vectors of shape {q.shape} and {d.shape}")
    return float(np.dot(q, d))


def get_encoder(config: EncoderConfig) -> Encoder:
    """Factory function to create an encoder from config.

    Args:
        config: Encoder configuration.

    Returns:
        Appropriate Encoder instance.

    Raises:
        ValueError: If the encoder kind is unsupported.
    """
    if config.kind == "hashing":
        return HashingEncoder(dimension=config.dimension, seed=config.seed)
    raise ValueError(f"Unsupported encoder: {config.kind}")
