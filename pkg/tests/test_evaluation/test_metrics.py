# ABOUTME: Tests for recall@k, gold rank and exact-match answer scoring.
# ABOUTME: Covers the normalization rules: case, punctuation, articles and whitespace.

import pytest

from tempret.corpus.dates import CivilDate
from tempret.evaluation.metrics import exact_match, gold_rank, normalize_answer, recall_at_k
from tempret.retrieval.retriever import ScoredPassage


def results(*ids: str) -> list[ScoredPassage]:
    return [
        ScoredPassage(
            passage_id=pid,
            date=CivilDate(2019, 1, 1),
            semantic=0.0,
            temporal_normalized=None,
            combined=0.0,
            rank=rank,
        )
        for rank, pid in enumerate(ids, start=1)
    ]


class TestRecallAtK:
    def test_gold_first(self) -> None:
        """Gold at rank 1 counts for k = 1."""
        assert recall_at_k(results("g", "x"), "g", 1) == 1

    def test_gold_third(self) -> None:
        """Gold at rank 3 misses k = 1 but hits k = 5."""
        ranked = results("a", "b", "g", "c")
        assert recall_at_k(ranked, "g", 1) == 0
        assert recall_at_k(ranked, "g", 5) == 1

    def test_empty(self) -> None:
        """No results never recall."""
        for k in (1, 5, 100):
            assert recall_at_k([], "g", k) == 0

    def test_invalid_k(self) -> None:
        """k must be positive."""
        with pytest.raises(ValueError):
            recall_at_k(results("g"), "g", 0)

    def test_gold_rank(self) -> None:
        """gold_rank is 1-based or None."""
        assert gold_rank(results("a", "g"), "g") == 2
        assert gold_rank(results("a"), "g") is None


class TestExactMatch:
    def test_case_and_whitespace(self) -> None:
        """Case and repeated spaces are ignored."""
        assert exact_match("Rafael Nadal", "rafael  nadal") == 1

    def test_different_tokens(self) -> None:
        """A partial name does not match."""
        assert exact_match("Nadal", "Rafael Nadal") == 0

    def test_articles(self) -> None:
        """Leading articles are dropped."""
        assert exact_match("the US Open", "US Open") == 1
        assert exact_match("an apple", "A apple") == 1

    def test_punctuation(self) -> None:
        """Punctuation is stripped."""
        assert exact_match("Ada Lindahl.", "ada lindahl") == 1

    def test_article_inside_word_kept(self) -> None:
        """Only whole-word articles are removed."""
        assert normalize_answer("Theodore Anand") == "theodore anand"

    @pytest.mark.parametrize("text", ["The  Champion!", "a b c", "  ", "6-3 7-5", "Ana's title"])
    def test_idempotent(self, text: str) -> None:
        """A normalized answer matches its source and normalizes to itself."""
        assert exact_match(normalize_answer(text), text) == 1
        assert normalize_answer(normalize_answer(text)) == normalize_answer(text)

    def test_symmetric(self) -> None:
        """Argument order does not matter."""
        pairs = [("The Open", "open"), ("x", "y"), ("A-B", "ab")]
        for a, b in pairs:
            assert exact_match(a, b) == exact_match(b, a)
