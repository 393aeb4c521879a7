# ABOUTME: Seeded synthetic tennis-final tables, passages, paired test sets and few-shot splits.
# ABOUTME: Every output is a pure function of the GenSpec, so repeated runs are byte-identical.

import hashlib
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

import numpy as np

from tempret.config import GenSpec
from tempret.corpus.dates import CivilDate, epoch_day
from tempret.corpus.passages import Corpus, EventRow, Passage, save_corpus, save_event_table
from tempret.corpus.templates import (
    QueryType,
    TemplateSet,
    load_templates,
    passage_id,
    render_answer,
    render_match,
    render_question,
    row_to_passage,
)
from tempret.datagen.names import FIRST_NAMES, LAST_NAMES, ROUNDS, WINNING_SETS
from tempret.errors import InsufficientRows, MixedYears
from tempret.evaluation.queries import Query, save_queries
from tempret.utils import sha256_file, write_json

# Type alias for progress callbacks: (message: str) -> None
ProgressCallback = Callable[[str], None]

# Final windows as (month, first day, last day).
SLAM_CALENDAR: dict[str, tuple[int, int, int]] = {
    "Australian Open": (1, 25, 31),
    "Roland Garros": (6, 1, 10),
    "Wimbledon": (7, 1, 14),
    "US Open": (9, 5, 14),
}


@dataclass(frozen=True)
class QuerySetPair:
    """The same questions asked at the end of the event year and on the next new year's day."""

    tpq_early: list[Query]
    tpq_late: list[Query]


def _stable_int(*parts: object) -> int:
    key = "|".join(str(p) for p in parts).encode("utf-8")
    return int.from_bytes(hashlib.sha256(key).digest()[:8], "little")


def _rng(seed: int, *parts: object) -> np.random.Generator:
    # Seeding per item keeps a row's content independent of the rest of the table.
    return np.random.default_rng([seed & 0xFFFFFFFF, _stable_int(*parts)])


def final_window(
    tournament: str, overrides: Optional[dict[str, tuple[int, int, int]]] = None
) -> tuple[int, int, int]:
    """(month, first day, last day) in which a tournament's final is played.

    Windows in overrides win over the slam calendar and the hashed default.
    """
    if overrides and tournament in overrides:
        return overrides[tournament]
    if tournament in SLAM_CALENDAR:
        return SLAM_CALENDAR[tournament]
    h = _stable_int("calendar", tournament)
    month = 2 + h % 10
    first = 14 + (h >> 8) % 8
    return month, first, first + 6


def _player(rng: np.random.Generator) -> str:
    first = FIRST_NAMES[rng.integers(len(FIRST_NAMES))]
    return f"{first} {LAST_NAMES[rng.integers(len(LAST_NAMES))]}"


def _two_players(rng: np.random.Generator) -> tuple[str, str]:
    first = _player(rng)
    second = _player(rng)
    while second == first:
        second = _player(rng)
    return first, second


def _match_score(rng: np.random.Generator, best_of: int) -> str:
    to_win = best_of // 2 + 1
    lost = int(rng.integers(to_win))
    # The winner always takes the last set.
    order = ["w"] * (to_win - 1) + ["l"] * lost
    order = [order[i] for i in rng.permutation(len(order))] + ["w"]
    sets = []
    for outcome in order:
        won = WINNING_SETS[rng.integers(len(WINNING_SETS))]
        sets.append(won if outcome == "w" else "-".join(reversed(won.split("-"))))
    return " ".join(sets)


def _best_of(category: str) -> int:
    return 5 if category.lower().startswith("men's singles") else 3


def gen_event_table(spec: GenSpec) -> list[EventRow]:
    """One synthetic final per (year, tournament, category) in spec.year_range.

    Rows are ordered by year, then tournament and category in spec order.
    """
    rows: list[EventRow] = []
    start, end = spec.year_range
    for year in range(start, end + 1):
        for tournament in spec.tournaments:
            month, first, last = final_window(tournament, spec.final_windows)
            for category in spec.categories:
                rng = _rng(spec.seed, "row", tournament, category, year)
                winner, runner_up = _two_players(rng)
                rows.append(
                    EventRow(
                        tournament=tournament,
                        category=category,
                        year=year,
                        winner=winner,
                        runner_up=runner_up,
                        score=_match_score(rng, _best_of(category)),
                        final_date=CivilDate(year, month, int(rng.integers(first, last + 1))),
                    )
                )
    return rows


def _round_of(j: int) -> tuple[str, int]:
    """Round name and days before the final for the j-th earlier match (1-based)."""
    remaining = j
    for name, matches, days_before in ROUNDS:
        if remaining <= matches:
            return name, days_before
        remaining -= matches
    raise ValueError(f"a single draw has no match number {j}")


def expand_row(
    row: EventRow,
    template_id: str,
    passages_per_row: int,
    rng: np.random.Generator,
    templates: Optional[TemplateSet] = None,
) -> list[Passage]:
    """The row's final-report passage followed by earlier-round match passages.

    Earlier rounds are dated before the final and get ids ``<final id>-r<j>``.
    The winner and runner-up play the two semifinals.
    """
    templates = templates or load_templates()
    final = row_to_passage(row, template_id, templates)
    passages = [final]
    round_templates = sorted(templates.rounds)
    final_day = epoch_day(row.final_date)
    for j in range(1, passages_per_row):
        round_name, days_before = _round_of(j)
        if j == 1:
            player, opponent = row.winner, _player(rng)
        elif j == 2:
            player, opponent = row.runner_up, _player(rng)
        else:
            player, opponent = _two_players(rng)
        passages.append(
            render_match(
                row,
                round_templates[j % len(round_templates)],
                match_id=f"{final.id}-r{j}",
                round_name=round_name,
                player=player,
                opponent=opponent,
                score=_match_score(rng, _best_of(row.category)),
                date=CivilDate.from_epoch_day(final_day - days_before),
                templates=templates,
            )
        )
    return passages


def build_corpus(
    rows: Sequence[EventRow], spec: GenSpec, templates: Optional[TemplateSet] = None
) -> Corpus:
    """Expand every row into passages, in row order."""
    templates = templates or load_templates()
    passages: list[Passage] = []
    for row in rows:
        rng = _rng(spec.seed, "rounds", row.tournament, row.category, row.year)
        passages.extend(
            expand_row(row, spec.passage_template, spec.passages_per_row, rng, templates)
        )
    return Corpus(passages)


def _query(
    row: EventRow,
    query_type: QueryType,
    index: int,
    timestamp: CivilDate,
    spec: GenSpec,
    templates: TemplateSet,
) -> Query:
    gold = passage_id(row, spec.passage_template)
    return Query(
        id=f"{gold}-{query_type}-q{index}",
        question=render_question(row, query_type, index, templates),
        timestamp=timestamp,
        answer=render_answer(row, query_type, templates),
        gold_passage_id=gold,
    )


def gen_tpq_pair(
    rows: Sequence[EventRow], spec: GenSpec, templates: Optional[TemplateSet] = None
) -> QuerySetPair:
    """Paired test sets over rows from a single year Y.

    Early queries are stamped Y-12-31 and late ones (Y+1)-01-01. Queries run
    template by template, row by row and type by type, so truncating to
    spec.tpq_size keeps the query types balanced.

    Raises:
        MixedYears: If the rows span more than one year
    """
    templates = templates or load_templates()
    years = sorted({row.year for row in rows})
    if len(years) > 1:
        raise MixedYears(f"test rows span several years: {years}")
    if not rows:
        return QuerySetPair(tpq_early=[], tpq_late=[])

    year = years[0]
    early_ts, late_ts = CivilDate(year, 12, 31), CivilDate(year + 1, 1, 1)
    depth = max(len(templates.questions[qt]) for qt in spec.query_types)
    early: list[Query] = []
    for index in range(depth):
        for row in rows:
            for query_type in spec.query_types:
                if index < len(templates.questions[query_type]):
                    early.append(_query(row, query_type, index, early_ts, spec, templates))
    if spec.tpq_size:
        early = early[: spec.tpq_size]
    late = [q.model_copy(update={"timestamp": late_ts}) for q in early]
    return QuerySetPair(tpq_early=early, tpq_late=late)


def gen_fewshot_splits(
    rows: Sequence[EventRow],
    sizes: Sequence[int],
    seed: int,
    spec: Optional[GenSpec] = None,
    templates: Optional[TemplateSet] = None,
) -> list[list[Query]]:
    """Disjoint training splits, balanced across query types and tournaments.

    Each (row, query type) pair yields one candidate with a question template
    drawn by the seeded generator, so no event is asked the same kind of
    question twice across splits. Candidates are grouped into
    (query type, tournament) strata. Each stratum is shuffled with the seeded
    generator, then strata are visited round-robin in sorted order to form one
    stream, which is cut into consecutive splits. Timestamps are drawn
    uniformly from the final date to December 31 of the event year.

    Raises:
        InsufficientRows: If there are fewer candidates than the splits need
    """
    spec = spec or GenSpec()
    templates = templates or load_templates()
    query_types: Sequence[QueryType] = spec.query_types

    rng = np.random.default_rng(seed)
    strata: dict[tuple[str, str], list[tuple[EventRow, QueryType, int]]] = {}
    for row in rows:
        for query_type in query_types:
            index = int(rng.integers(len(templates.questions[query_type])))
            strata.setdefault((query_type, row.tournament), []).append((row, query_type, index))

    needed = sum(sizes)
    available = sum(len(members) for members in strata.values())
    if available < needed:
        raise InsufficientRows(f"splits need {needed} queries, rows provide only {available}")

    queues = []
    for key in sorted(strata):
        members = strata[key]
        queues.append([members[i] for i in rng.permutation(len(members))])

    stream: list[tuple[EventRow, QueryType, int]] = []
    depth = 0
    while len(stream) < needed:
        for queue in queues:
            if depth < len(queue):
                stream.append(queue[depth])
        depth += 1

    queries: list[Query] = []
    for row, query_type, index in stream[:needed]:
        low = epoch_day(row.final_date)
        high = epoch_day(CivilDate(row.year, 12, 31))
        timestamp = CivilDate.from_epoch_day(int(rng.integers(low, high + 1)))
        queries.append(_query(row, query_type, index, timestamp, spec, templates))

    splits: list[list[Query]] = []
    offset = 0
    for size in sizes:
        splits.append(queries[offset:offset + size])
        offset += size
    return splits


def generate_dataset(
    spec: GenSpec,
    out_dir: Path,
    rows: Optional[Sequence[EventRow]] = None,
    on_progress: Optional[ProgressCallback] = None,
) -> dict[str, Any]:
    """Write the full dataset for a GenSpec and return its manifest.

    Files: events.csv, corpus.jsonl, tpq_early.jsonl, tpq_late.jsonl,
    fewshot_<size>.jsonl per split, and manifest.json with the spec and the
    sha256 of every other file.

    Args:
        spec: Generation parameters
        out_dir: Output directory (created if missing)
        rows: Event table to use instead of generating one
        on_progress: Optional callback for progress updates

    Raises:
        ValueError: If the test year does not follow the training era
        InsufficientRows: If the training era is too small for the few-shot splits
    """
    spec.check_separation()
    templates = load_templates()

    if rows is None:
        test_spec = spec.model_copy(update={"year_range": (spec.test_year, spec.test_year)})
        rows = gen_event_table(spec) + gen_event_table(test_spec)
    start, end = spec.year_range
    train_rows = [row for row in rows if start <= row.year <= end]
    test_rows = [row for row in rows if row.year == spec.test_year]
    if on_progress:
        on_progress(f"{len(train_rows)} training rows, {len(test_rows)} test rows")

    corpus = build_corpus(rows, spec, templates)
    if on_progress:
        on_progress(f"Rendered {len(corpus)} passages")
    pair = gen_tpq_pair(test_rows, spec, templates)
    splits = gen_fewshot_splits(train_rows, spec.fewshot_sizes, spec.seed, spec, templates)

    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    events_path = out_dir / "events.csv"
    save_event_table(rows, events_path)
    written.append(events_path)

    corpus_path = out_dir / "corpus.jsonl"
    save_corpus(corpus, corpus_path)
    written.append(corpus_path)

    for name, queries in (("tpq_early", pair.tpq_early), ("tpq_late", pair.tpq_late)):
        path = out_dir / f"{name}.jsonl"
        save_queries(queries, path)
        written.append(path)

    for size, split in zip(spec.fewshot_sizes, splits):
        path = out_dir / f"fewshot_{size}.jsonl"
        save_queries(split, path)
        written.append(path)

    manifest: dict[str, Any] = {
        "spec": spec.model_dump(mode="json"),
        "templates_version": templates.version,
        "num_passages": len(corpus),
        "num_rows": len(rows),
        "files": {path.name: sha256_file(path) for path in written},
    }
    write_json(out_dir / "manifest.json", manifest)
    return manifest
