# ABOUTME: Timestamped query model plus JSON-lines readers and writers for queries and predictions.
# ABOUTME: Query files are produced by datagen and consumed by the evaluation harness.

import json
from pathlib import Path
from typing import Sequence

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from tempret.corpus.dates import DateField
from tempret.errors import CorpusParseError, SchemaError
from tempret.utils import read_text_lines, write_jsonl


class Query(BaseModel):
    """A question posed at a point in time, with its gold answer and passage."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    id: str = Field(..., min_length=1)
    question: str = Field(..., min_length=1)
    timestamp: DateField
    answer: str
    gold_passage_id: str = Field(..., min_length=1)


class Prediction(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)

    id: str = Field(..., min_length=1)
    prediction: str


def _read_records(path: Path) -> list[tuple[int, dict]]:
    records: list[tuple[int, dict]] = []
    for line_number, line in enumerate(read_text_lines(path), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            raise CorpusParseError(line_number, f"invalid JSON: {e.msg}") from e
        if not isinstance(record, dict):
            raise CorpusParseError(line_number, "expected a JSON object")
        records.append((line_number, record))
    return records


def load_queries(path: Path) -> list[Query]:
    """Load a query JSON-lines file, preserving line order.

    Raises:
        FileNotFoundError: If the file doesn't exist
        CorpusParseError: If a line is not a valid query
        SchemaError: If two queries share an id
    """
    queries: list[Query] = []
    seen: set[str] = set()
    for line_number, record in _read_records(path):
        try:
            query = Query.model_validate(record)
        except ValidationError as e:
            raise CorpusParseError(line_number, str(e.errors()[0]["msg"])) from e
        if query.id in seen:
            raise SchemaError(f"duplicate query id: {query.id}")
        seen.add(query.id)
        queries.append(query)
    return queries


def save_queries(queries: Sequence[Query], path: Path) -> None:
    write_jsonl(path, (q.model_dump(mode="json") for q in queries))


def load_predictions(path: Path) -> dict[str, str]:
    """Load a predictions file into a query id -> predicted answer mapping.

    Raises:
        FileNotFoundError: If the file doesn't exist
        CorpusParseError: If a line is not a valid prediction
    """
    predictions: dict[str, str] = {}
    for line_number, record in _read_records(path):
        try:
            prediction = Prediction.model_validate(record)
        except ValidationError as e:
            raise CorpusParseError(line_number, str(e.errors()[0]["msg"])) from e
        predictions[prediction.id] = prediction.prediction
    return predictions
