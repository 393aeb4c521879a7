# ABOUTME: Exception hierarchy shared by every tempret module.
# ABOUTME: Input and validation failures also subclass ValueError so callers can catch either.


class TempretError(Exception):
    """Base class for all tempret errors."""


class MalformedDate(TempretError, ValueError):
    """Date string is not in YYYY-MM-DD shape."""


class InvalidDate(TempretError, ValueError):
    """Date string has the right shape but names no calendar day."""


class UnknownTemplate(TempretError, ValueError):
    """Template id is not registered in the template fixture."""


class CorpusParseError(TempretError, ValueError):
    """A corpus or query file line could not be parsed."""

    def __init__(self, line_number: int, message: str) -> None:
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class DuplicateId(TempretError, ValueError):
    """Two passages share the same id."""

    def __init__(self, passage_id: str) -> None:
        super().__init__(f"duplicate passage id: {passage_id}")
        self.passage_id = passage_id


class DimensionMismatch(TempretError, ValueError):
    """Two vectors of different dimension were compared."""


class FutureDocument(TempretError, ValueError):
    """A temporal score was requested for a document dated after the query."""


class EmptyPopulation(TempretError, ValueError):
    """Statistics were requested over an empty score population."""


class UnknownGoldPassage(TempretError, ValueError):
    """A query names a gold passage that is not in the corpus."""

    def __init__(self, query_id: str, passage_id: str) -> None:
        super().__init__(f"query {query_id}: gold passage {passage_id} not in corpus")
        self.query_id = query_id


class EmptyQuerySet(TempretError, ValueError):
    """An evaluation was requested over zero queries."""


class MixedYears(TempretError, ValueError):
    """Test-set rows do not all share the same event year."""


class InsufficientRows(TempretError, ValueError):
    """Not enough event rows to fill the requested query splits."""


class FingerprintMismatch(TempretError, ValueError):
    """A serialized index was built with a different encoder or corpus."""


class SchemaError(TempretError, ValueError):
    """A data file does not match the expected schema."""
