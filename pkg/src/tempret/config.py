# ABOUTME: Configuration loading and validation using Pydantic models.
# ABOUTME: Holds every numeric default for encoding, retrieval, generation and run paths.

from pathlib import Path
from typing import Any, Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from tempret.corpus.dates import days_in_month
from tempret.corpus.templates import QUERY_TYPES, QueryType

# Fixed so index builds are bit-stable across runs and machines.
DEFAULT_HASH_SEED = 20240101

GRAND_SLAMS = ["Australian Open", "Roland Garros", "Wimbledon", "US Open"]
DEFAULT_CATEGORIES = ["men's singles", "women's singles"]

# Upper bound on passages per row: the final plus every earlier round of a 128 draw.
MAX_PASSAGES_PER_ROW = 127


class Settings(BaseSettings):
    """Environment-provided defaults."""

    model_config = SettingsConfigDict(env_prefix="TEMPRET_")

    data_dir: Path = Field(default=Path("data"), description="Default data directory")


class EncoderConfig(BaseModel):
    """Text encoder configuration."""

    model_config = ConfigDict(extra="forbid")

    kind: Literal["hashing"] = Field(default="hashing", description="Encoder implementation")
    dimension: int = Field(default=1024, ge=1, description="Embedding dimension D")
    seed: int = Field(default=DEFAULT_HASH_SEED, description="Feature hash seed")


class TemporalConfig(BaseModel):
    """Temporal proximity score configuration."""

    model_config = ConfigDict(extra="forbid")

    alpha_scale: float = Field(default=1.0, gt=0, description="Numerator of the reciprocal score")
    min_delta_days: int = Field(
        default=1, ge=1, description="Smallest day difference used as denominator"
    )


class RetrievalConfig(BaseModel):
    """Retrieval pipeline configuration."""

    model_config = ConfigDict(extra="forbid")

    top_k: int = Field(default=5, ge=1, description="Number of passages returned")
    over_retrieve_factor: int = Field(
        default=5, ge=1, description="Candidates fetched by semantic score = factor x top_k"
    )
    mask_future: bool = Field(default=True, description="Drop passages dated after the query")
    mode: Literal["semantic_only", "temporal"] = Field(default="temporal")
    stats_scope: Literal["query", "global"] = Field(
        default="query", description="Population for normalization statistics"
    )
    time_suffix: bool = Field(
        default=True, description="Append the query year to the encoded question"
    )
    temporal: TemporalConfig = Field(default_factory=TemporalConfig)

    @property
    def candidate_count(self) -> int:
        """Number of passages over-retrieved before reranking."""
        return self.top_k * self.over_retrieve_factor


class GenSpec(BaseModel):
    """Synthetic dataset generation parameters."""

    model_config = ConfigDict(extra="forbid")

    tournaments: list[str] = Field(default_factory=lambda: list(GRAND_SLAMS), min_length=1)
    categories: list[str] = Field(default_factory=lambda: list(DEFAULT_CATEGORIES), min_length=1)
    year_range: tuple[int, int] = Field(default=(1978, 2018), description="Training era, inclusive")
    test_year: int = Field(default=2019, description="Event year the paired test sets ask about")
    seed: int = Field(default=7)
    query_types: list[QueryType] = Field(default_factory=lambda: list(QUERY_TYPES), min_length=1)
    passages_per_row: int = Field(default=1, ge=1, le=MAX_PASSAGES_PER_ROW)
    passage_template: str = Field(default="t0")
    tpq_size: int = Field(default=128, ge=0, description="Queries per test set; 0 keeps all")
    fewshot_sizes: list[int] = Field(default_factory=lambda: [32, 64, 128])
    final_windows: dict[str, tuple[int, int, int]] = Field(
        default_factory=dict,
        description="Per-tournament (month, first day, last day) of the final",
    )

    @model_validator(mode="after")
    def validate_ranges(self) -> "GenSpec":
        """Check year ordering and uniqueness of list entries."""
        start, end = self.year_range
        if start > end:
            raise ValueError(f"year_range start {start} is after end {end}")
        if start < 1 or max(end, self.test_year) > 9998:
            raise ValueError("years must lie between 1 and 9998")
        for name, values in (
            ("tournaments", self.tournaments),
            ("categories", self.categories),
            ("query_types", self.query_types),
            ("fewshot_sizes", self.fewshot_sizes),
        ):
            if len(set(values)) != len(values):
                raise ValueError(f"{name} contains duplicates")
        if any(size < 1 for size in self.fewshot_sizes):
            raise ValueError("fewshot_sizes must be positive")
        for tournament, (month, first, last) in self.final_windows.items():
            # February stops at 28 so the window is valid in every year.
            if not 1 <= month <= 12 or not 1 <= first <= last <= days_in_month(2001, month):
                raise ValueError(f"final window for {tournament!r} is not a calendar range")
        return self

    def check_separation(self) -> None:
        """Full datasets need the test year strictly after the training era.

        Raises:
            ValueError: If test_year falls inside or before year_range
        """
        if self.test_year <= self.year_range[1]:
            raise ValueError(
                f"test_year {self.test_year} must follow the training era "
                f"{self.year_range[0]}:{self.year_range[1]}"
            )


class RunConfig(BaseModel):
    """Root configuration: every knob plus the file paths of a run."""

    model_config = ConfigDict(extra="forbid")

    data_dir: Path = Field(default_factory=lambda: Settings().data_dir)
    corpus: Optional[Path] = Field(default=None, description="Corpus JSON-lines file")
    index: Optional[Path] = Field(default=None, description="Serialized index file")
    queries: list[Path] = Field(default_factory=list, description="Query JSON-lines files")
    predictions: list[Path] = Field(
        default_factory=list, description="Prediction files, aligned with queries"
    )
    report: Optional[Path] = Field(default=None, description="Evaluation report JSON")
    workers: int = Field(default=1, ge=1, description="Evaluation worker threads")
    encoder: EncoderConfig = Field(default_factory=EncoderConfig)
    retrieval: RetrievalConfig = Field(default_factory=RetrievalConfig)
    gen: GenSpec = Field(default_factory=GenSpec)

    @model_validator(mode="after")
    def predictions_align(self) -> "RunConfig":
        """Predictions, when given, pair one-to-one with query files."""
        if self.predictions and len(self.predictions) != len(self.queries):
            raise ValueError("predictions must be given once per queries file")
        return self

    @property
    def corpus_path(self) -> Path:
        return self.corpus or self.data_dir / "corpus.jsonl"

    @property
    def index_path(self) -> Path:
        return self.index or self.data_dir / "index.npy"

    @property
    def query_paths(self) -> list[Path]:
        return self.queries or [self.data_dir / "tpq_early.jsonl", self.data_dir / "tpq_late.jsonl"]

    @property
    def report_path(self) -> Path:
        return self.report or self.data_dir / "report.json"


def load_config(config_path: Path) -> RunConfig:
    """
    Load and validate configuration from a JSON or YAML file.

    JSON is read through the YAML parser, so either format works.

    Args:
        config_path: Path to the configuration file

    Returns:
        Validated RunConfig object

    Raises:
        FileNotFoundError: If config file doesn't exist
        ValueError: If the file is unparsable, empty or fails validation
    """
    if not config_path.exists():
        raise FileNotFoundError(f"Config file not found: {config_path}")

    try:
        with open(config_path, "r", encoding="utf-8") as f:
            config_data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ValueError(f"Invalid config file: {e}")

    if config_data is None:
        raise ValueError("Config file is empty")
    if not isinstance(config_data, dict):
        raise ValueError("Config file must contain a mapping")

    try:
        return RunConfig(**config_data)
    except Exception as e:
        raise ValueError(f"Config validation failed: {e}")


def _merge(base: dict[str, Any], overrides: dict[str, Any]) -> dict[str, Any]:
    merged = dict(base)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def apply_overrides(config: RunConfig, overrides: dict[str, Any]) -> RunConfig:
    """Return a validated copy of config with nested override values applied.

    Raises:
        ValueError: If the result fails validation
    """
    try:
        return RunConfig.model_validate(_merge(config.model_dump(), overrides))
    except Exception as e:
        raise ValueError(f"Config validation failed: {e}")
