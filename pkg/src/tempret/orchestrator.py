# ABOUTME: Orchestrates dataset generation, indexing, single searches and evaluation runs.
# ABOUTME: Coordinates datagen, the retrieval index and the evaluation harness from one RunConfig.

from pathlib import Path
from typing import Any, Callable, Optional

from rich.console import Console

from tempret.config import RunConfig
from tempret.corpus.dates import CivilDate
from tempret.corpus.passages import load_corpus, load_event_table
from tempret.datagen.generator import generate_dataset
from tempret.embedding.encoder import Encoder, get_encoder
from tempret.evaluation.harness import EvalReport, report_document, run_eval
from tempret.evaluation.queries import load_predictions, load_queries
from tempret.retrieval.index import Index, build_index, load_index, save_index
from tempret.retrieval.retriever import ScoredPassage, retrieve
from tempret.utils import write_json

# Type alias for progress callbacks: (message: str) -> None
ProgressCallback = Callable[[str], None]

console = Console(stderr=True)


class Orchestrator:
    """Runs each pipeline stage against the paths and knobs of a RunConfig."""

    def __init__(self, config: RunConfig) -> None:
        """Initialize orchestrator with configuration.

        Args:
            config: Validated run configuration
        """
        self.config = config
        self._encoder: Optional[Encoder] = None

    @property
    def encoder(self) -> Encoder:
        if self._encoder is None:
            self._encoder = get_encoder(self.config.encoder)
        return self._encoder

    def gen(
        self,
        out_dir: Optional[Path] = None,
        events: Optional[Path] = None,
        on_progress: Optional[ProgressCallback] = None,
    ) -> dict[str, Any]:
        """Generate the synthetic dataset.

        Args:
            out_dir: Output directory (defaults to the configured data directory)
            events: Existing event table CSV to use instead of a generated one
            on_progress: Optional callback for progress updates

        Returns:
            The dataset manifest
        """
        out_dir = out_dir or self.config.data_dir
        console.print(f"[bold blue]Generating dataset in {out_dir}...[/bold blue]")

        rows = None
        if events is not None:
            rows = load_event_table(events)
            console.print(f"  [dim]Loaded {len(rows)} event rows from {events}[/dim]")

        manifest = generate_dataset(self.config.gen, out_dir, rows=rows, on_progress=on_progress)
        console.print(
            f"[green]Wrote {manifest['num_passages']} passages and "
            f"{len(manifest['files'])} files to {out_dir}[/green]"
        )
        return manifest

    def index(self, on_progress: Optional[ProgressCallback] = None) -> Index:
        """Encode the corpus and write the index file."""
        corpus_path = self.config.corpus_path
        console.print(f"[bold blue]Indexing {corpus_path}...[/bold blue]")
        corpus = load_corpus(corpus_path)
        if len(corpus) == 0:
            console.print("[yellow]Corpus is empty; writing an empty index[/yellow]")
        index = build_index(corpus, self.encoder, on_progress=on_progress)
        save_index(index, self.config.index_path)
        console.print(
            f"[green]Indexed {len(index)} passages to {self.config.index_path}[/green]"
        )
        return index

    def load_index(self) -> Index:
        """Load the corpus and its index, checking they belong together."""
        corpus = load_corpus(self.config.corpus_path)
        return load_index(self.config.index_path, corpus, self.encoder)

    def search(self, question: str, timestamp: CivilDate) -> list[ScoredPassage]:
        """Retrieve top-k passages for one timestamped question."""
        index = self.load_index()
        return retrieve(index, question, timestamp, self.config.retrieval, self.encoder)

    def evaluate(
        self,
        compare: bool = False,
        with_clock: bool = True,
        on_progress: Optional[ProgressCallback] = None,
    ) -> tuple[list[EvalReport], Path]:
        """Evaluate every configured query set and write the report.

        Args:
            compare: Run semantic_only and temporal back to back instead of the configured mode
            with_clock: Include the generation time in the report
            on_progress: Optional callback for progress updates

        Returns:
            The reports, in (query set, mode) order, and the report path
        """
        index = self.load_index()
        retrieval = self.config.retrieval
        modes = ["semantic_only", "temporal"] if compare else [retrieval.mode]

        query_paths = self.config.query_paths
        prediction_paths: list[Optional[Path]] = list(self.config.predictions) or [None] * len(
            query_paths
        )

        reports: list[EvalReport] = []
        for query_path, prediction_path in zip(query_paths, prediction_paths):
            queries = load_queries(query_path)
            predictions = load_predictions(prediction_path) if prediction_path else None
            if predictions is not None:
                unknown = set(predictions) - {q.id for q in queries}
                if unknown:
                    console.print(
                        f"[yellow]{len(unknown)} predictions in {prediction_path} "
                        f"match no query[/yellow]"
                    )
            name = query_path.stem
            for mode in modes:
                console.print(
                    f"[bold blue]Evaluating {name} ({len(queries)} queries, {mode})...[/bold blue]"
                )
                report = run_eval(
                    index,
                    queries,
                    retrieval.model_copy(update={"mode": mode}),
                    self.encoder,
                    predictions,
                    query_set=name,
                    workers=self.config.workers,
                    on_progress=on_progress,
                )
                console.print(
                    f"  [dim]R@1 {report.recall_at_1:.3f}  R@5 {report.recall_at_5:.3f}[/dim]"
                )
                reports.append(report)

        report_path = self.config.report_path
        write_json(report_path, report_document(self.config, reports, with_clock=with_clock))
        console.print(f"[green]Report written to {report_path}[/green]")
        return reports, report_path
