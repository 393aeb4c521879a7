# ABOUTME: Temporal retrieval pipeline: over-retrieve by semantic score, mask future passages,
# ABOUTME: add the normalized proximity score and rerank; also the semantic-only baseline.

from dataclasses import dataclass
from typing import Any, Final, Optional, Sequence

import numpy as np
import numpy.typing as npt

from tempret.config import RetrievalConfig
from tempret.corpus.dates import CivilDate, epoch_day
from tempret.embedding.encoder import EmbeddingVector, Encoder
from tempret.errors import DimensionMismatch, EmptyPopulation
from tempret.retrieval.index import Index
from tempret.retrieval.temporal import (
    ScoreStats,
    compute_stats,
    normalize_temporal,
    raw_temporal_scores,
    unmasked_temporal_scores,
)


class _Masked:
    """Marker for a passage excluded from ranking."""

    _instance: Optional["_Masked"] = None

    def __new__(cls) -> "_Masked":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "MASKED"

    def __bool__(self) -> bool:
        return False


MASKED: Final = _Masked()

# (temporal stats, semantic stats) supplied from outside the candidate set.
StatsPair = tuple[ScoreStats, ScoreStats]


@dataclass(frozen=True)
class ScoredPassage:
    """One ranked result."""

    passage_id: str
    date: CivilDate
    semantic: float
    temporal_normalized: Optional[float]
    combined: float
    rank: int

    def to_dict(self) -> dict[str, Any]:
        """JSON-ready mapping with the date as YYYY-MM-DD."""
        return {
            "rank": self.rank,
            "passage_id": self.passage_id,
            "date": self.date.format(),
            "semantic": self.semantic,
            "temporal_normalized": self.temporal_normalized,
            "combined": self.combined,
        }


def time_suffixed(question: str, query_ts: CivilDate) -> str:
    """Question text with the query year appended, as it is encoded."""
    return f"{question} {query_ts.year}"


def encode_query(
    question: str, query_ts: CivilDate, cfg: RetrievalConfig, encoder: Encoder
) -> EmbeddingVector:
    text = time_suffixed(question, query_ts) if cfg.time_suffix else question
    return encoder.encode(text)


def _semantic_scores(index: Index, q_vec: EmbeddingVector) -> npt.NDArray[np.float64]:
    if q_vec.shape != (index.dimension,):
        raise DimensionMismatch(
            f"query vector has shape {q_vec.shape}, index dimension is {index.dimension}"
        )
    return index.vectors @ q_vec


def _order(
    scores: npt.NDArray[np.float64], dates: npt.NDArray[np.int64], id_ranks: npt.NDArray[np.int64]
) -> npt.NDArray[np.intp]:
    # lexsort keys run from least to most significant.
    return np.lexsort((id_ranks, -dates, -scores))


def candidate_set(index: Index, q_vec: EmbeddingVector, n: int) -> list[tuple[int, float]]:
    """The min(n, |corpus|) best passages by semantic score, as (position, score).

    Ties are ordered by later date first, then by passage id.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if len(index) == 0:
        return []
    scores = _semantic_scores(index, q_vec)
    order = _order(scores, index.dates, index.id_ranks)[:n]
    return [(int(i), float(scores[i])) for i in order]


def temp_ret_score(
    semantic: float, tau_normalized: float, qt: int, dt: int, mask_future: bool
) -> float | _Masked:
    """Combined score of one passage, or MASKED if it postdates the query."""
    if mask_future and qt < dt:
        return MASKED
    return semantic + tau_normalized


def _proximity(
    qt: int, dts: npt.NDArray[np.int64], cfg: RetrievalConfig
) -> npt.NDArray[np.float64]:
    if cfg.mask_future:
        return raw_temporal_scores(qt, dts, cfg.temporal)
    return unmasked_temporal_scores(qt, dts, cfg.temporal)


def global_stats(
    index: Index,
    queries: Sequence[tuple[str, CivilDate]],
    cfg: RetrievalConfig,
    encoder: Encoder,
) -> Optional[StatsPair]:
    """Statistics over every non-masked (query, passage) pair.

    Returns None when no pair survives masking.
    """
    taus: list[npt.NDArray[np.float64]] = []
    sems: list[npt.NDArray[np.float64]] = []
    for question, query_ts in queries:
        if len(index) == 0:
            break
        qt = epoch_day(query_ts)
        scores = _semantic_scores(index, encode_query(question, query_ts, cfg, encoder))
        keep = index.dates <= qt if cfg.mask_future else np.ones(len(index), dtype=bool)
        taus.append(_proximity(qt, index.dates[keep], cfg))
        sems.append(scores[keep])
    try:
        return (
            compute_stats(np.concatenate(taus) if taus else []),
            compute_stats(np.concatenate(sems) if sems else []),
        )
    except EmptyPopulation:
        return None


def retrieve(
    index: Index,
    query_text: str,
    query_ts: CivilDate,
    cfg: RetrievalConfig,
    encoder: Encoder,
    stats: Optional[StatsPair] = None,
    depth: Optional[int] = None,
) -> list[ScoredPassage]:
    """Rank passages for a timestamped question.

    In temporal mode, future candidates are dropped before statistics are
    taken, so they never shift the normalization. Fewer results come back
    when fewer candidates survive.

    Args:
        index: Passage index
        query_text: Question text (the year is appended when cfg.time_suffix is set)
        query_ts: Query timestamp
        cfg: Retrieval configuration
        encoder: Encoder matching the index fingerprint
        stats: Fixed (temporal, semantic) statistics; computed when omitted
        depth: Results to return in place of cfg.top_k. The candidate pool
            stays cfg.candidate_count, so the leading ranks do not change.

    Returns:
        Up to depth (default top_k) ScoredPassage objects ranked from 1
    """
    limit = cfg.top_k if depth is None else depth
    q_vec = encode_query(query_text, query_ts, cfg, encoder)
    candidates = candidate_set(index, q_vec, cfg.candidate_count)
    if not candidates:
        return []

    positions = np.array([p for p, _ in candidates], dtype=np.intp)
    sems = np.array([s for _, s in candidates], dtype=np.float64)

    if cfg.mode == "semantic_only":
        return [
            _scored(index, int(pos), sem, None, sem, rank)
            for rank, (pos, sem) in enumerate(zip(positions[:limit], sems), start=1)
        ]

    qt = epoch_day(query_ts)
    dts = index.dates[positions]
    if cfg.mask_future:
        keep = dts <= qt
        positions, sems, dts = positions[keep], sems[keep], dts[keep]
    if positions.size == 0:
        return []

    tau_raw = _proximity(qt, dts, cfg)
    if stats is None and cfg.stats_scope == "global":
        stats = global_stats(index, [(query_text, query_ts)], cfg, encoder)
    if stats is None:
        tau_stats, sem_stats = compute_stats(tau_raw), compute_stats(sems)
    else:
        tau_stats, sem_stats = stats
    tau_norm = normalize_temporal(tau_raw, tau_stats, sem_stats)

    # Future candidates are already gone, so no score comes back MASKED.
    combined = np.fromiter(
        (
            temp_ret_score(float(s), float(t), qt, int(d), cfg.mask_future)
            for s, t, d in zip(sems, tau_norm, dts)
        ),
        dtype=np.float64,
        count=positions.size,
    )
    order = _order(combined, dts, index.id_ranks[positions])[:limit]
    return [
        _scored(index, int(positions[i]), float(sems[i]), float(tau_norm[i]),
                float(combined[i]), rank)
        for rank, i in enumerate(order, start=1)
    ]


def _scored(
    index: Index,
    position: int,
    semantic: float,
    tau_normalized: Optional[float],
    combined: float,
    rank: int,
) -> ScoredPassage:
    passage = index.corpus.passages[position]
    return ScoredPassage(
        passage_id=passage.id,
        date=passage.date,
        semantic=float(semantic),
        temporal_normalized=tau_normalized,
        combined=float(combined),
        rank=rank,
    )
