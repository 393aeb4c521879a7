# ABOUTME: Reciprocal time-proximity score and its rescaling onto the semantic score range.
# ABOUTME: Pure functions over values; population statistics use the population (N) std.

from dataclasses import dataclass
from typing import Sequence

import numpy as np
import numpy.typing as npt

from tempret.config import TemporalConfig
from tempret.errors import EmptyPopulation, FutureDocument


@dataclass(frozen=True)
class ScoreStats:
    """Mean and population standard deviation of one score population."""

    mean: float
    std: float

    def __post_init__(self) -> None:
        if not self.std >= 0:
            raise ValueError(f"std must be non-negative, got {self.std}")


def raw_temporal_score(qt: int, dt: int, cfg: TemporalConfig) -> float:
    """alpha_scale / max(qt - dt, min_delta_days).

    Raises:
        FutureDocument: If the document is dated after the query
    """
    if qt < dt:
        raise FutureDocument(f"document day {dt} is after query day {qt}")
    return cfg.alpha_scale / max(qt - dt, cfg.min_delta_days)


def raw_temporal_scores(
    qt: int, dts: npt.NDArray[np.int64], cfg: TemporalConfig
) -> npt.NDArray[np.float64]:
    """Vectorized raw_temporal_score over many document days."""
    dts = np.asarray(dts, dtype=np.int64)
    if dts.size and int(dts.max()) > qt:
        raise FutureDocument(f"document day {int(dts.max())} is after query day {qt}")
    return cfg.alpha_scale / np.maximum(qt - dts, cfg.min_delta_days).astype(np.float64)


def unmasked_temporal_scores(
    qt: int, dts: npt.NDArray[np.int64], cfg: TemporalConfig
) -> npt.NDArray[np.float64]:
    """Reciprocal proximity over the absolute day difference.

    Used only when future masking is switched off, so documents dated after
    the query still get a finite score.
    """
    distance = np.abs(qt - np.asarray(dts, dtype=np.int64))
    return cfg.alpha_scale / np.maximum(distance, cfg.min_delta_days).astype(np.float64)


def compute_stats(values: Sequence[float] | npt.NDArray[np.float64]) -> ScoreStats:
    """Arithmetic mean and population standard deviation.

    A constant population gets std exactly 0 so rounding noise in the mean
    cannot fake a spread.

    Raises:
        EmptyPopulation: If values is empty
        ValueError: If any value is not finite
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.size == 0:
        raise EmptyPopulation("cannot compute statistics of an empty population")
    if not np.all(np.isfinite(arr)):
        raise ValueError("score population contains non-finite values")
    if np.all(arr == arr.flat[0]):
        return ScoreStats(mean=float(arr.flat[0]), std=0.0)
    return ScoreStats(mean=float(arr.mean()), std=float(arr.std()))


def normalize_temporal(
    tau_raw: Sequence[float] | npt.NDArray[np.float64],
    tau_stats: ScoreStats,
    sem_stats: ScoreStats,
) -> npt.NDArray[np.float64]:
    """Z-score raw temporal scores and rescale them to the semantic mean and std.

    If either std is zero every output equals the semantic mean.
    """
    tau = np.asarray(tau_raw, dtype=np.float64)
    if tau_stats.std == 0 or sem_stats.std == 0:
        return np.full(tau.shape, sem_stats.mean, dtype=np.float64)
    return (tau - tau_stats.mean) / tau_stats.std * sem_stats.std + sem_stats.mean
