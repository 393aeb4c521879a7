# ABOUTME: Tests for the main CLI module including command execution and exit codes.
# ABOUTME: Exit 0 on success, 1 on runtime or I/O failure, 2 on bad usage.

import json
from pathlib import Path

import pytest
import typer
import yaml
from typer.testing import CliRunner

from tempret.corpus.dates import CivilDate
from tempret.evaluation.queries import Query, save_queries
from tempret.main import app, parse_timestamp, parse_year_range

runner = CliRunner()

GEN_FLAGS = [
    "--year-range", "1960:2018",
    "--tournament", "US Open",
    "--category", "women's singles",
]


class TestParsers:
    def test_year_range(self) -> None:
        """START:END parses into an inclusive pair."""
        assert parse_year_range("1978:2018") == (1978, 2018)
        assert parse_year_range(None) is None

    @pytest.mark.parametrize("value", ["2019:2018", "2019", "a:b", "2019-2020"])
    def test_bad_year_range(self, value: str) -> None:
        """Malformed or reversed ranges are usage errors."""
        with pytest.raises(typer.BadParameter):
            parse_year_range(value)

    def test_timestamp(self) -> None:
        """Timestamps parse as calendar dates."""
        assert parse_timestamp("2019-12-31") == CivilDate(2019, 12, 31)
        with pytest.raises(typer.BadParameter):
            parse_timestamp("2019-02-30")


class TestGenCommand:
    def test_gen_writes_dataset(self, tmp_path: Path) -> None:
        """gen writes the dataset files and exits 0."""
        out = tmp_path / "data"
        result = runner.invoke(app, ["gen", "--out", str(out), *GEN_FLAGS])
        assert result.exit_code == 0, result.output
        for name in ("events.csv", "corpus.jsonl", "tpq_early.jsonl", "manifest.json"):
            assert (out / name).exists()

    def test_gen_is_reproducible(self, tmp_path: Path) -> None:
        """Two runs with the same flags write byte-identical manifests."""
        for name in ("a", "b"):
            result = runner.invoke(app, ["gen", "--out", str(tmp_path / name), *GEN_FLAGS])
            assert result.exit_code == 0, result.output
        first = (tmp_path / "a" / "manifest.json").read_bytes()
        assert first == (tmp_path / "b" / "manifest.json").read_bytes()

    def test_reversed_year_range(self, tmp_path: Path) -> None:
        """A reversed year range is a usage error."""
        result = runner.invoke(app, ["gen", "--out", str(tmp_path), "--year-range", "2019:2018"])
        assert result.exit_code == 2

    def test_test_year_inside_era(self, tmp_path: Path) -> None:
        """A test year inside the training era is a usage error."""
        result = runner.invoke(
            app, ["gen", "--out", str(tmp_path), "--year-range", "2000:2019", "--test-year", "2019"]
        )
        assert result.exit_code == 2

    def test_too_few_rows(self, tmp_path: Path) -> None:
        """A training era too small for the few-shot splits fails at runtime."""
        result = runner.invoke(
            app,
            [
                "gen", "--out", str(tmp_path),
                "--year-range", "2017:2018",
                "--tournament", "US Open",
                "--category", "women's singles",
            ],
        )
        assert result.exit_code == 1

    def test_bad_config_file(self, tmp_path: Path) -> None:
        """An invalid config file exits 1."""
        config = tmp_path / "config.yaml"
        config.write_text(yaml.dump({"retrieval": {"top_k": "many"}}))
        result = runner.invoke(app, ["gen", "--config", str(config)])
        assert result.exit_code == 1


class TestSearchCommand:
    def test_search_prints_ranked_json(self, versions_dir: Path) -> None:
        """search prints the ranked passages as JSON."""
        result = runner.invoke(app, ["index", "--data-dir", str(versions_dir)])
        assert result.exit_code == 0, result.output

        result = runner.invoke(
            app,
            [
                "search",
                "--question", "Who won the Harbour Open final?",
                "--timestamp", "2019-07-01",
                "--data-dir", str(versions_dir),
            ],
        )
        assert result.exit_code == 0, result.output
        results = json.loads(result.stdout)
        assert results[0]["passage_id"] == "open-2019"
        assert results[0]["rank"] == 1
        assert "open-2020" not in [r["passage_id"] for r in results]
        assert set(results[0]) == {
            "rank", "passage_id", "date", "semantic", "temporal_normalized", "combined"
        }

    def test_semantic_only_mode(self, versions_dir: Path) -> None:
        """The baseline mode returns future passages with no temporal score."""
        runner.invoke(app, ["index", "--data-dir", str(versions_dir)])
        result = runner.invoke(
            app,
            [
                "search", "-q", "Harbour Open final", "-t", "2019-07-01",
                "--data-dir", str(versions_dir), "--mode", "semantic_only",
            ],
        )
        assert result.exit_code == 0, result.output
        results = json.loads(result.stdout)
        assert len(results) == 3
        assert all(r["temporal_normalized"] is None for r in results)

    def test_invalid_timestamp(self, versions_dir: Path) -> None:
        """An impossible date is a usage error."""
        result = runner.invoke(
            app, ["search", "-q", "x", "-t", "2019-02-30", "--data-dir", str(versions_dir)]
        )
        assert result.exit_code == 2

    def test_invalid_top_k(self, versions_dir: Path) -> None:
        """top_k below one is a usage error."""
        result = runner.invoke(
            app,
            ["search", "-q", "x", "-t", "2019-01-01", "--data-dir", str(versions_dir), "-k", "0"],
        )
        assert result.exit_code == 2

    def test_missing_index(self, versions_dir: Path) -> None:
        """Searching before indexing exits 1."""
        result = runner.invoke(
            app, ["search", "-q", "x", "-t", "2019-01-01", "--data-dir", str(versions_dir)]
        )
        assert result.exit_code == 1

    def test_index_from_other_encoder(self, versions_dir: Path) -> None:
        """An index built with another dimension is rejected."""
        runner.invoke(app, ["index", "--data-dir", str(versions_dir), "--dimension", "64"])
        result = runner.invoke(
            app, ["search", "-q", "x", "-t", "2019-01-01", "--data-dir", str(versions_dir)]
        )
        assert result.exit_code == 1


class TestEvalCommand:
    def test_eval_compare(self, versions_dir: Path) -> None:
        """eval --compare writes a report with both modes."""
        queries = versions_dir / "harbour.jsonl"
        save_queries(
            [
                Query(
                    id="q1",
                    question="Who won the Harbour Open final?",
                    timestamp="2019-07-01",
                    answer="Ada Lindahl",
                    gold_passage_id="open-2019",
                )
            ],
            queries,
        )
        runner.invoke(app, ["index", "--data-dir", str(versions_dir)])
        result = runner.invoke(
            app,
            [
                "eval", "--data-dir", str(versions_dir),
                "--queries", str(queries), "--compare", "--no-clock",
            ],
        )
        assert result.exit_code == 0, result.output
        document = json.loads((versions_dir / "report.json").read_text())
        assert [r["mode"] for r in document["reports"]] == ["semantic_only", "temporal"]
        assert document["reports"][1]["recall_at_1"] == 1.0
        assert "Retrieval recall" in result.output

    def test_index_non_utf8_corpus(self, versions_dir: Path) -> None:
        """A corpus with bytes that are not UTF-8 exits 1 and names the line."""
        corpus = versions_dir / "corpus.jsonl"
        corpus.write_bytes(corpus.read_bytes() + b'{"id": "\xff"}\n')
        result = runner.invoke(app, ["index", "--data-dir", str(versions_dir)])
        assert result.exit_code == 1
        assert "invalid UTF-8" in result.output

    def test_eval_missing_queries(self, versions_dir: Path) -> None:
        """A missing query file exits 1."""
        runner.invoke(app, ["index", "--data-dir", str(versions_dir)])
        result = runner.invoke(
            app,
            ["eval", "--data-dir", str(versions_dir), "--queries", str(versions_dir / "none")],
        )
        assert result.exit_code == 1
