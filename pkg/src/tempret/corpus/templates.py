# ABOUTME: Loads the versioned text-template fixture and renders rows into passages and questions.
# ABOUTME: row_to_passage is a pure function of (row, template id).

from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Literal, Optional

import yaml
from pydantic import BaseModel, ConfigDict, field_validator

from tempret.corpus.dates import CivilDate, spelled_date
from tempret.corpus.passages import EventRow, Passage
from tempret.errors import UnknownTemplate
from tempret.utils import slugify

QueryType = Literal["winner", "runner_up", "finalists", "score"]
QUERY_TYPES: tuple[QueryType, ...] = ("winner", "runner_up", "finalists", "score")


class TemplateSet(BaseModel):
    """Parsed template fixture."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    version: int
    passages: dict[str, str]
    rounds: dict[str, str]
    questions: dict[QueryType, list[str]]
    answers: dict[QueryType, str]

    @field_validator("passages", "rounds")
    @classmethod
    def at_least_two(cls, value: dict[str, str]) -> dict[str, str]:
        if len(value) < 2:
            raise ValueError("at least two templates are required")
        return value

    @field_validator("questions")
    @classmethod
    def two_per_query_type(cls, value: dict[QueryType, list[str]]) -> dict[QueryType, list[str]]:
        for query_type in QUERY_TYPES:
            if len(value.get(query_type, [])) < 2:
                raise ValueError(f"query type {query_type} needs at least two question templates")
        return value


@lru_cache(maxsize=8)
def _load(path: Optional[Path]) -> TemplateSet:
    if path is None:
        text = resources.files("tempret.corpus").joinpath("templates.yaml").read_text("utf-8")
    else:
        text = path.read_text("utf-8")
    return TemplateSet.model_validate(yaml.safe_load(text))


def load_templates(path: Optional[Path] = None) -> TemplateSet:
    """Load a template fixture, defaulting to the packaged one."""
    return _load(path)


def passage_id(row: EventRow, template_id: str) -> str:
    """Deterministic id for a row's final-report passage."""
    return f"{slugify(row.tournament)}-{slugify(row.category)}-{row.year}-{template_id}"


def _fields(row: EventRow) -> dict[str, str]:
    return {
        "tournament": row.tournament,
        "category": row.category,
        "year": str(row.year),
        "winner": row.winner,
        "runner_up": row.runner_up,
        "score": row.score,
        "date": row.final_date.format(),
        "date_long": spelled_date(row.final_date),
    }


def row_to_passage(
    row: EventRow, template_id: str, templates: Optional[TemplateSet] = None
) -> Passage:
    """Render an event row as a natural-language passage dated on the final.

    Raises:
        UnknownTemplate: If template_id is not a registered passage template
    """
    templates = templates or load_templates()
    if template_id not in templates.passages:
        raise UnknownTemplate(f"unknown passage template: {template_id}")
    text = templates.passages[template_id].format(**_fields(row))
    return Passage(id=passage_id(row, template_id), text=text, date=row.final_date)


def render_match(
    row: EventRow,
    template_id: str,
    *,
    match_id: str,
    round_name: str,
    player: str,
    opponent: str,
    score: str,
    date: CivilDate,
    templates: Optional[TemplateSet] = None,
) -> Passage:
    """Render an earlier-round match of a row's tournament as a passage.

    Raises:
        UnknownTemplate: If template_id is not a registered round template
    """
    templates = templates or load_templates()
    if template_id not in templates.rounds:
        raise UnknownTemplate(f"unknown round template: {template_id}")
    text = templates.rounds[template_id].format(
        round=round_name,
        year=row.year,
        tournament=row.tournament,
        category=row.category,
        player=player,
        opponent=opponent,
        score=score,
        date=date.format(),
        date_long=spelled_date(date),
    )
    return Passage(id=match_id, text=text, date=date)


def render_question(
    row: EventRow, query_type: QueryType, index: int, templates: Optional[TemplateSet] = None
) -> str:
    """Question text for a row; index selects among the query type's templates."""
    templates = templates or load_templates()
    options = templates.questions[query_type]
    return options[index % len(options)].format(**_fields(row))


def render_answer(
    row: EventRow, query_type: QueryType, templates: Optional[TemplateSet] = None
) -> str:
    """Gold answer string for a row and query type."""
    templates = templates or load_templates()
    return templates.answers[query_type].format(**_fields(row))
