# ABOUTME: Runs a retriever configuration over a query set and aggregates recall and exact match.
# ABOUTME: Also builds the versioned report document and the recall comparison table.

from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from typing import Any, Callable, Literal, Optional, Sequence

from pydantic import BaseModel, ConfigDict, Field
from rich.table import Table

from tempret.config import RetrievalConfig, RunConfig
from tempret.embedding.encoder import Encoder
from tempret.errors import EmptyQuerySet, UnknownGoldPassage
from tempret.evaluation.metrics import exact_match, gold_rank, recall_at_k
from tempret.evaluation.queries import Query
from tempret.retrieval.index import Index
from tempret.retrieval.retriever import StatsPair, global_stats, retrieve

# Type alias for progress callbacks: (message: str) -> None
ProgressCallback = Callable[[str], None]

REPORT_SCHEMA_VERSION = 1

# Deepest cutoff reported; retrieval always ranks at least this far.
RECALL_DEPTH = 5


class QueryTrace(BaseModel):
    """Where the gold passage landed for one query."""

    model_config = ConfigDict(frozen=True)

    query_id: str
    gold_rank: Optional[int] = None
    top_ids: list[str] = Field(default_factory=list)


class EvalReport(BaseModel):
    """Aggregated metrics of one retriever mode over one query set."""

    model_config = ConfigDict(frozen=True)

    mode: Literal["semantic_only", "temporal"]
    query_set: str = ""
    num_queries: int
    recall_at_1: float = Field(..., ge=0, le=1)
    recall_at_5: float = Field(..., ge=0, le=1)
    exact_match: Optional[float] = None
    per_query: list[QueryTrace] = Field(default_factory=list)


def run_eval(
    index: Index,
    queries: Sequence[Query],
    cfg: RetrievalConfig,
    encoder: Encoder,
    predictions: Optional[dict[str, str]] = None,
    *,
    query_set: str = "",
    workers: int = 1,
    on_progress: Optional[ProgressCallback] = None,
) -> EvalReport:
    """Evaluate one retriever mode over a query set.

    Per-query retrieval runs on a thread pool when workers > 1; traces keep
    the input query order either way. Each query is ranked to at least
    RECALL_DEPTH results from the same candidate pool, so recall@5 is
    measured even when cfg.top_k is smaller. Traces keep the first top_k ids.
    Exact match is averaged over the queries that have a prediction and is
    None when there are none.

    Raises:
        EmptyQuerySet: If queries is empty
        UnknownGoldPassage: If a query's gold passage is not in the index
    """
    if not queries:
        raise EmptyQuerySet("cannot evaluate an empty query set")
    for query in queries:
        if query.gold_passage_id not in index.corpus:
            raise UnknownGoldPassage(query.id, query.gold_passage_id)

    stats: Optional[StatsPair] = None
    if cfg.mode == "temporal" and cfg.stats_scope == "global":
        if on_progress:
            on_progress(f"Computing global score statistics over {len(queries)} queries")
        stats = global_stats(index, [(q.question, q.timestamp) for q in queries], cfg, encoder)

    depth = max(cfg.top_k, RECALL_DEPTH)

    def evaluate(query: Query) -> tuple[QueryTrace, int, int]:
        results = retrieve(
            index, query.question, query.timestamp, cfg, encoder, stats=stats, depth=depth
        )
        trace = QueryTrace(
            query_id=query.id,
            gold_rank=gold_rank(results, query.gold_passage_id),
            top_ids=[r.passage_id for r in results[: cfg.top_k]],
        )
        return (
            trace,
            recall_at_k(results, query.gold_passage_id, 1),
            recall_at_k(results, query.gold_passage_id, RECALL_DEPTH),
        )

    if on_progress:
        on_progress(f"Retrieving {len(queries)} queries in {cfg.mode} mode")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(evaluate, queries))
    else:
        outcomes = [evaluate(q) for q in queries]

    traces = [trace for trace, _, _ in outcomes]
    hits_1 = sum(hit for _, hit, _ in outcomes)
    hits_5 = sum(hit for _, _, hit in outcomes)

    em: Optional[float] = None
    if predictions:
        scored = [
            exact_match(predictions[q.id], q.answer) for q in queries if q.id in predictions
        ]
        if scored:
            em = sum(scored) / len(scored)

    return EvalReport(
        mode=cfg.mode,
        query_set=query_set,
        num_queries=len(queries),
        recall_at_1=hits_1 / len(queries),
        recall_at_5=hits_5 / len(queries),
        exact_match=em,
        per_query=traces,
    )


def report_document(
    config: RunConfig, reports: Sequence[EvalReport], with_clock: bool = True
) -> dict[str, Any]:
    """The JSON report: schema version, optional generation time, config and reports."""
    document: dict[str, Any] = {"schema_version": REPORT_SCHEMA_VERSION}
    if with_clock:
        document["generated_at"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    document["config"] = config.model_dump(mode="json")
    document["reports"] = [r.model_dump(mode="json") for r in reports]
    return document


def render_recall_table(reports: Sequence[EvalReport]) -> Table:
    """Recall table with one row per mode and a column group per query set."""
    query_sets = list(dict.fromkeys(r.query_set for r in reports))
    modes = list(dict.fromkeys(r.mode for r in reports))
    by_key = {(r.mode, r.query_set): r for r in reports}
    show_em = any(r.exact_match is not None for r in reports)

    table = Table(title="Retrieval recall")
    table.add_column("Mode", style="bold")
    for name in query_sets:
        label = name or "queries"
        table.add_column(f"{label} R@1", justify="right")
        table.add_column(f"{label} R@5", justify="right")
        if show_em:
            table.add_column(f"{label} EM", justify="right")

    for mode in modes:
        cells = [mode]
        for name in query_sets:
            report = by_key.get((mode, name))
            if report is None:
                cells.extend(["-", "-"] + (["-"] if show_em else []))
                continue
            cells.append(f"{report.recall_at_1:.2f}")
            cells.append(f"{report.recall_at_5:.2f}")
            if show_em:
                em = report.exact_match
                cells.append("-" if em is None else f"{em:.2f}")
        table.add_row(*cells)
    return table
