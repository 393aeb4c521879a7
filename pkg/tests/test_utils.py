# ABOUTME: Tests for shared helpers: id slugs, JSON-lines writing and file hashing.
# ABOUTME: Output of these helpers feeds ids and manifests, so it must be stable.

import hashlib
from pathlib import Path

from tempret.utils import sha256_file, slugify, write_json, write_jsonl


class TestSlugify:
    def test_examples(self) -> None:
        """Tournament and category names become hyphenated lowercase slugs."""
        assert slugify("US Open") == "us-open"
        assert slugify("women's singles") == "womens-singles"
        assert slugify("Roland  Garros") == "roland-garros"

    def test_empty(self) -> None:
        """Empty text gives an empty slug."""
        assert slugify("") == ""

    def test_not_truncated(self) -> None:
        """Long names keep every word."""
        name = " ".join(["Open"] * 40)
        assert slugify(name).count("open") == 40


class TestWriters:
    def test_jsonl_is_canonical(self, tmp_path: Path) -> None:
        """Records are written compactly with LF endings and raw UTF-8."""
        path = tmp_path / "out" / "records.jsonl"
        write_jsonl(path, [{"id": "a", "text": "Malmö"}, {"id": "b"}])
        assert path.read_bytes() == '{"id":"a","text":"Malmö"}\n{"id":"b"}\n'.encode("utf-8")

    def test_json_ends_with_newline(self, tmp_path: Path) -> None:
        """JSON documents are indented and newline-terminated."""
        path = tmp_path / "doc.json"
        write_json(path, {"a": 1})
        assert path.read_text() == '{\n  "a": 1\n}\n'

    def test_sha256_file(self, tmp_path: Path) -> None:
        """File hashes match hashlib on the raw bytes."""
        path = tmp_path / "blob"
        path.write_bytes(b"x" * 100_000)
        assert sha256_file(path) == hashlib.sha256(b"x" * 100_000).hexdigest()
