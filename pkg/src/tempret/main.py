# ABOUTME: Main CLI entry point for tempret using Typer.
# ABOUTME: Provides commands: gen, index, search, eval. Exit 0 ok, 1 runtime or I/O, 2 usage.

import json
import sys
from enum import Enum
from pathlib import Path
from typing import Any, List, Optional

import typer
from rich.console import Console

from tempret.config import RunConfig, apply_overrides, load_config
from tempret.corpus.dates import CivilDate, parse_date
from tempret.errors import TempretError
from tempret.evaluation.harness import render_recall_table
from tempret.orchestrator import Orchestrator

app = typer.Typer(
    name="tempret",
    help="Time-aware passage retrieval with a semantic-only baseline and recall evaluation",
    no_args_is_help=True,
)
console = Console()
err_console = Console(stderr=True)


class Mode(str, Enum):
    semantic_only = "semantic_only"
    temporal = "temporal"


class StatsScope(str, Enum):
    query = "query"
    globally = "global"


def parse_year_range(value: Optional[str]) -> Optional[tuple[int, int]]:
    """Parse START:END into an inclusive year pair."""
    if value is None:
        return None
    start, sep, end = value.partition(":")
    if not sep or not start.strip().isdigit() or not end.strip().isdigit():
        raise typer.BadParameter(f"expected START:END, got {value!r}")
    first, last = int(start), int(end)
    if first > last:
        raise typer.BadParameter(f"range start {first} is after end {last}")
    return first, last


def parse_timestamp(value: Optional[str]) -> Optional[CivilDate]:
    if value is None:
        return None
    try:
        return parse_date(value)
    except ValueError as e:
        raise typer.BadParameter(str(e))


def _drop_none(values: dict[str, Any]) -> dict[str, Any]:
    cleaned: dict[str, Any] = {}
    for key, value in values.items():
        if isinstance(value, dict):
            value = _drop_none(value)
            if not value:
                continue
        if value is not None:
            cleaned[key] = value
    return cleaned


def get_orchestrator(config_path: Optional[Path], overrides: dict[str, Any]) -> Orchestrator:
    """Load config, apply flag overrides and create orchestrator instance.

    Args:
        config_path: Optional path to a JSON or YAML configuration file
        overrides: Nested flag values; None entries leave the config untouched

    Returns:
        Orchestrator instance

    Raises:
        typer.BadParameter: If a flag value makes the configuration invalid
        SystemExit: If the config file cannot be loaded
    """
    try:
        config = load_config(config_path) if config_path else RunConfig()
    except Exception as e:
        err_console.print(f"[red]Failed to load config: {e}[/red]")
        sys.exit(1)
    try:
        return Orchestrator(apply_overrides(config, _drop_none(overrides)))
    except ValueError as e:
        raise typer.BadParameter(str(e))


def _fail(action: str, error: Exception) -> None:
    err_console.print(f"[red]{action} failed: {error}[/red]")
    sys.exit(1)


ConfigOption = typer.Option(None, "--config", "-c", help="Path to a JSON or YAML config file")


@app.command()
def gen(
    config: Optional[Path] = ConfigOption,
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Output directory"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Generator seed"),
    year_range: Optional[str] = typer.Option(
        None, "--year-range", help="Training era START:END", callback=parse_year_range
    ),
    test_year: Optional[int] = typer.Option(None, "--test-year", help="Year of the test events"),
    tournament: Optional[List[str]] = typer.Option(
        None, "--tournament", help="Tournament name (repeatable)"
    ),
    category: Optional[List[str]] = typer.Option(
        None, "--category", help="Event category (repeatable)"
    ),
    passages_per_row: Optional[int] = typer.Option(
        None, "--passages-per-row", min=1, help="Passages rendered per event row"
    ),
    tpq_size: Optional[int] = typer.Option(
        None, "--tpq-size", min=0, help="Queries per test set (0 keeps all)"
    ),
    events: Optional[Path] = typer.Option(
        None, "--events", help="Use this event table CSV instead of generating one"
    ),
) -> None:
    """Generate the synthetic corpus, paired test sets and few-shot splits."""
    orchestrator = get_orchestrator(
        config,
        {
            "data_dir": out,
            "gen": {
                "seed": seed,
                "year_range": year_range,
                "test_year": test_year,
                "tournaments": tournament or None,
                "categories": category or None,
                "passages_per_row": passages_per_row,
                "tpq_size": tpq_size,
            },
        },
    )
    try:
        orchestrator.config.gen.check_separation()
    except ValueError as e:
        raise typer.BadParameter(str(e))
    try:
        orchestrator.gen(events=events)
    except (TempretError, OSError) as e:
        _fail("Generation", e)


@app.command()
def index(
    config: Optional[Path] = ConfigOption,
    data_dir: Optional[Path] = typer.Option(None, "--data-dir", help="Data directory"),
    corpus: Optional[Path] = typer.Option(None, "--corpus", help="Corpus JSON-lines file"),
    index_path: Optional[Path] = typer.Option(None, "--index", help="Index file to write"),
    dimension: Optional[int] = typer.Option(None, "--dimension", min=1, help="Embedding size"),
) -> None:
    """Encode the corpus and write the index file."""
    orchestrator = get_orchestrator(
        config,
        {
            "data_dir": data_dir,
            "corpus": corpus,
            "index": index_path,
            "encoder": {"dimension": dimension},
        },
    )
    try:
        orchestrator.index()
    except (TempretError, OSError) as e:
        _fail("Indexing", e)


def _retrieval_overrides(
    mode: Optional[Mode],
    top_k: Optional[int],
    alpha: Optional[float],
    over_retrieve_factor: Optional[int],
    no_mask_future: bool,
    stats_scope: Optional[StatsScope],
) -> dict[str, Any]:
    return {
        "mode": mode.value if mode else None,
        "top_k": top_k,
        "over_retrieve_factor": over_retrieve_factor,
        "mask_future": False if no_mask_future else None,
        "stats_scope": stats_scope.value if stats_scope else None,
        "temporal": {"alpha_scale": alpha},
    }


@app.command()
def search(
    question: str = typer.Option(..., "--question", "-q", help="Question text"),
    timestamp: str = typer.Option(..., "--timestamp", "-t", help="Query date YYYY-MM-DD"),
    config: Optional[Path] = ConfigOption,
    data_dir: Optional[Path] = typer.Option(None, "--data-dir", help="Data directory"),
    corpus: Optional[Path] = typer.Option(None, "--corpus", help="Corpus JSON-lines file"),
    index_path: Optional[Path] = typer.Option(None, "--index", help="Index file"),
    mode: Optional[Mode] = typer.Option(None, "--mode", help="Retriever mode"),
    top_k: Optional[int] = typer.Option(None, "--top-k", "-k", min=1),
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Temporal score scale"),
    over_retrieve_factor: Optional[int] = typer.Option(None, "--over-retrieve-factor", min=1),
    no_mask_future: bool = typer.Option(
        False, "--no-mask-future", help="Keep passages dated after the query"
    ),
    stats_scope: Optional[StatsScope] = typer.Option(None, "--stats-scope"),
) -> None:
    """Print the top-k passages for one timestamped question as JSON."""
    query_ts = parse_timestamp(timestamp)
    orchestrator = get_orchestrator(
        config,
        {
            "data_dir": data_dir,
            "corpus": corpus,
            "index": index_path,
            "retrieval": _retrieval_overrides(
                mode, top_k, alpha, over_retrieve_factor, no_mask_future, stats_scope
            ),
        },
    )
    try:
        results = orchestrator.search(question, query_ts)
    except (TempretError, OSError) as e:
        _fail("Search", e)
    typer.echo(json.dumps([r.to_dict() for r in results], indent=2, ensure_ascii=False))


@app.command(name="eval")
def evaluate(
    config: Optional[Path] = ConfigOption,
    data_dir: Optional[Path] = typer.Option(None, "--data-dir", help="Data directory"),
    corpus: Optional[Path] = typer.Option(None, "--corpus", help="Corpus JSON-lines file"),
    index_path: Optional[Path] = typer.Option(None, "--index", help="Index file"),
    queries: Optional[List[Path]] = typer.Option(
        None, "--queries", help="Query JSON-lines file (repeatable)"
    ),
    predictions: Optional[List[Path]] = typer.Option(
        None, "--predictions", help="Predictions file aligned with --queries (repeatable)"
    ),
    report: Optional[Path] = typer.Option(None, "--report", help="Report JSON path"),
    compare: bool = typer.Option(
        False, "--compare", help="Run semantic_only and temporal on the same index"
    ),
    mode: Optional[Mode] = typer.Option(None, "--mode", help="Retriever mode"),
    top_k: Optional[int] = typer.Option(None, "--top-k", "-k", min=1),
    alpha: Optional[float] = typer.Option(None, "--alpha", help="Temporal score scale"),
    over_retrieve_factor: Optional[int] = typer.Option(None, "--over-retrieve-factor", min=1),
    no_mask_future: bool = typer.Option(
        False, "--no-mask-future", help="Keep passages dated after the query"
    ),
    stats_scope: Optional[StatsScope] = typer.Option(None, "--stats-scope"),
    workers: Optional[int] = typer.Option(None, "--workers", "-w", min=1),
    no_clock: bool = typer.Option(False, "--no-clock", help="Omit the generation time"),
) -> None:
    """Evaluate recall (and exact match) and write the report."""
    orchestrator = get_orchestrator(
        config,
        {
            "data_dir": data_dir,
            "corpus": corpus,
            "index": index_path,
            "queries": queries or None,
            "predictions": predictions or None,
            "report": report,
            "workers": workers,
            "retrieval": _retrieval_overrides(
                mode, top_k, alpha, over_retrieve_factor, no_mask_future, stats_scope
            ),
        },
    )
    try:
        reports, report_path = orchestrator.evaluate(compare=compare, with_clock=not no_clock)
    except (TempretError, OSError) as e:
        _fail("Evaluation", e)
    console.print(render_recall_table(reports))
    typer.echo(str(report_path))


if __name__ == "__main__":
    app()
