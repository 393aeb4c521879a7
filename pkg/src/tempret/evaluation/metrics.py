# ABOUTME: Per-query retrieval and answer metrics: recall@k, gold rank and exact match.
# ABOUTME: Answer normalization lowercases, strips punctuation and articles, and collapses spaces.

import re
import string
from typing import Optional, Sequence

from tempret.retrieval.retriever import ScoredPassage

_ARTICLES = re.compile(r"\b(a|an|the)\b")
_PUNCTUATION = str.maketrans("", "", string.punctuation)


def gold_rank(results: Sequence[ScoredPassage], gold_id: str) -> Optional[int]:
    """1-based position of the gold passage, or None when it was not returned."""
    for position, result in enumerate(results, start=1):
        if result.passage_id == gold_id:
            return position
    return None


def recall_at_k(results: Sequence[ScoredPassage], gold_id: str, k: int) -> int:
    """1 if gold_id is among the first k results, else 0."""
    if k < 1:
        raise ValueError("k must be at least 1")
    rank = gold_rank(results[:k], gold_id)
    return 0 if rank is None else 1


def normalize_answer(s: str) -> str:
    s = s.lower().translate(_PUNCTUATION)
    s = _ARTICLES.sub(" ", s)
    return " ".join(s.split())


def exact_match(predicted: str, gold: str) -> int:
    """1 if both answers are equal after normalize_answer, else 0."""
    return int(normalize_answer(predicted) == normalize_answer(gold))
