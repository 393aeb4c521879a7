# ABOUTME: Passage, event-row and corpus models plus JSON-lines / CSV readers and writers.
# ABOUTME: A Corpus is validated on construction and immutable afterwards.

import csv
import json
from pathlib import Path
from typing import Iterator, Sequence

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from tempret.corpus.dates import DateField
from tempret.errors import CorpusParseError, DuplicateId, SchemaError
from tempret.utils import dumps_line, read_text_lines, sha256_bytes

EVENT_TABLE_HEADER = [
    "tournament", "category", "year", "winner", "runner_up", "score", "final_date"
]


class Passage(BaseModel):
    """A timestamped text unit of the document index."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    id: str = Field(..., min_length=1)
    text: str
    date: DateField

    @field_validator("text")
    @classmethod
    def text_not_blank(cls, value: str) -> str:
        if not value.strip():
            raise ValueError("text is empty after trimming whitespace")
        return value


class EventRow(BaseModel):
    """One final of one tournament category in one year."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    tournament: str = Field(..., min_length=1)
    category: str = Field(..., min_length=1)
    year: int
    winner: str = Field(..., min_length=1)
    runner_up: str = Field(..., min_length=1)
    score: str = Field(..., min_length=1)
    final_date: DateField

    @model_validator(mode="after")
    def final_date_in_year(self) -> "EventRow":
        """The final must take place in the row's own year."""
        if self.final_date.year != self.year:
            raise ValueError(
                f"final_date {self.final_date} does not fall in year {self.year}"
            )
        return self


class Corpus:
    """Ordered, id-unique collection of passages."""

    def __init__(self, passages: Sequence[Passage] = ()) -> None:
        """Build a corpus, preserving passage order.

        Raises:
            DuplicateId: If two passages share an id
        """
        self.passages: tuple[Passage, ...] = tuple(passages)
        by_id: dict[str, int] = {}
        for position, passage in enumerate(self.passages):
            if passage.id in by_id:
                raise DuplicateId(passage.id)
            by_id[passage.id] = position
        self.by_id = by_id

    def __len__(self) -> int:
        return len(self.passages)

    def __iter__(self) -> Iterator[Passage]:
        return iter(self.passages)

    def __contains__(self, passage_id: object) -> bool:
        return passage_id in self.by_id

    def get(self, passage_id: str) -> Passage:
        """Look up a passage by id (KeyError if absent)."""
        return self.passages[self.by_id[passage_id]]

    def to_jsonl(self) -> str:
        """Canonical JSON-lines rendering of the corpus."""
        return "".join(dumps_line(p.model_dump(mode="json")) + "\n" for p in self.passages)


def corpus_hash(corpus: Corpus) -> str:
    """sha256 of the corpus's canonical JSON-lines bytes."""
    return sha256_bytes(corpus.to_jsonl().encode("utf-8"))


def load_corpus(path: Path) -> Corpus:
    """Load and validate a JSON-lines corpus file.

    Blank lines are skipped; line numbers in errors count them.

    Raises:
        FileNotFoundError: If the file doesn't exist
        CorpusParseError: If a line is not valid UTF-8 or not a valid passage object
        DuplicateId: If a passage id repeats
    """
    passages: list[Passage] = []
    seen: set[str] = set()
    for line_number, line in enumerate(read_text_lines(path), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            raise CorpusParseError(line_number, f"invalid JSON: {e.msg}") from e
        if not isinstance(record, dict):
            raise CorpusParseError(line_number, "expected a JSON object")
        try:
            passage = Passage.model_validate(record)
        except ValidationError as e:
            raise CorpusParseError(line_number, _first_error(e)) from e
        if passage.id in seen:
            raise DuplicateId(passage.id)
        seen.add(passage.id)
        passages.append(passage)
    return Corpus(passages)


def save_corpus(corpus: Corpus, path: Path) -> None:
    """Write a corpus as canonical JSON-lines."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(corpus.to_jsonl())


def load_event_table(path: Path) -> list[EventRow]:
    """Read an event table CSV with the fixed header.

    Raises:
        SchemaError: If the header differs from the expected columns
        CorpusParseError: If a line is not valid UTF-8 or a row fails validation
    """
    rows: list[EventRow] = []
    reader = csv.reader(read_text_lines(path))
    header = next(reader, None)
    if header != EVENT_TABLE_HEADER:
        raise SchemaError(
            f"event table header must be {','.join(EVENT_TABLE_HEADER)}, got {header}"
        )
    for values in reader:
        if not values:
            continue
        if len(values) != len(EVENT_TABLE_HEADER):
            raise CorpusParseError(reader.line_num, f"expected 7 columns, got {len(values)}")
        try:
            rows.append(EventRow.model_validate(dict(zip(EVENT_TABLE_HEADER, values))))
        except ValidationError as e:
            raise CorpusParseError(reader.line_num, _first_error(e)) from e
    return rows


def save_event_table(rows: Sequence[EventRow], path: Path) -> None:
    """Write event rows as CSV with the fixed header."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(EVENT_TABLE_HEADER)
        for row in rows:
            writer.writerow(
                [row.tournament, row.category, row.year, row.winner, row.runner_up,
                 row.score, row.final_date.format()]
            )


def _first_error(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"]) or "record"
    return f"{location}: {first['msg']}"
