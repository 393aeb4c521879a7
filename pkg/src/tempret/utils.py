# ABOUTME: Shared utility functions used across the tempret codebase.
# ABOUTME: Includes id slugs, deterministic JSON-lines writing, UTF-8 line reading and file hashing.

import hashlib
import json
import re
from pathlib import Path
from typing import Any, Iterable, Iterator

from tempret.errors import CorpusParseError


def slugify(text: str) -> str:
    """Convert text to an id-safe slug.

    Removes punctuation, converts to lowercase and joins words with hyphens.
    Unlike a filename slug the result is never truncated, so ids built from it
    stay unique.

    Args:
        text: Input text to slugify

    Returns:
        Slugified string safe for use in passage and query ids

    Examples:
        >>> slugify("US Open")
        'us-open'
        >>> slugify("women's singles")
        'womens-singles'
    """
    if not text:
        return ""

    # Remove special characters, keep alphanumeric and spaces
    text = re.sub(r"[^\w\s-]", "", text.lower())
    # Replace spaces and multiple hyphens with single hyphen
    return re.sub(r"[-\s_]+", "-", text).strip("-")


def dumps_line(record: dict[str, Any]) -> str:
    """Serialize one record as a canonical JSON line (no trailing newline)."""
    return json.dumps(record, ensure_ascii=False, separators=(",", ":"))


def write_jsonl(path: Path, records: Iterable[dict[str, Any]]) -> None:
    """Write records as UTF-8 JSON-lines with LF endings.

    Output bytes depend only on the records, so repeated runs produce
    byte-identical files.
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        for record in records:
            f.write(dumps_line(record))
            f.write("\n")


def read_text_lines(path: Path) -> Iterator[str]:
    """Yield the lines of a UTF-8 text file, line endings included.

    Raises:
        FileNotFoundError: If the file doesn't exist
        CorpusParseError: If a line is not valid UTF-8
    """
    with open(path, "rb") as f:
        for line_number, raw in enumerate(f, start=1):
            try:
                yield raw.decode("utf-8")
            except UnicodeDecodeError as e:
                raise CorpusParseError(line_number, "invalid UTF-8") from e


def write_json(path: Path, document: dict[str, Any]) -> None:
    """Write a single JSON document with stable formatting."""
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(document, f, indent=2, ensure_ascii=False)
        f.write("\n")


def sha256_bytes(data: bytes) -> str:
    """Hex sha256 digest of a byte string."""
    return hashlib.sha256(data).hexdigest()


def sha256_file(path: Path) -> str:
    """Hex sha256 digest of a file's contents."""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()
