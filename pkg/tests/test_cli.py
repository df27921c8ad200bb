"""Command line entry points."""

from __future__ import annotations

import json

import pytest
from click.testing import CliRunner

from conftest import DEMO_DIR
from humboldt.cli import main

SPEC = str(DEMO_DIR / "spec.json")
CATALOG = str(DEMO_DIR / "catalog.json")


@pytest.fixture()
def runner():
    return CliRunner()


class TestValidate:
    def test_clean_spec(self, runner):
        result = runner.invoke(main, ["validate", SPEC])
        assert result.exit_code == 0
        assert "ok" in result.output

    def test_violations_exit_one(self, runner, tmp_path, joinable_provider_text):
        raw = json.loads(joinable_provider_text)
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"providers": [raw, raw]}), encoding="utf-8")
        result = runner.invoke(main, ["validate", str(bad)])
        assert result.exit_code == 1
        assert "duplicate_provider_name" in result.output

    def test_schema_error_exits_one(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"providers": [{"name": "X"}]}', encoding="utf-8")
        result = runner.invoke(main, ["validate", str(bad)])
        assert result.exit_code == 1

    def test_missing_file(self, runner):
        result = runner.invoke(main, ["validate", "/nonexistent/spec.json"])
        assert result.exit_code != 0


class TestQuery:
    def test_ranked_ids_one_per_line(self, runner):
        result = runner.invoke(
            main, ["query", "--spec", SPEC, "--catalog", CATALOG, "type: table"]
        )
        assert result.exit_code == 0
        assert result.output.splitlines() == [
            "AIRLINES_id", "FLIGHTS_id", "CARRIERS_id", "PAYROLL_id"
        ]

    def test_provider_call(self, runner):
        result = runner.invoke(
            main,
            ["query", "--spec", SPEC, "--catalog", CATALOG, ":recent_documents() & bit"],
        )
        assert result.output.splitlines() == ["wb_delays_id"]

    def test_no_matches_prints_nothing(self, runner):
        result = runner.invoke(
            main, ["query", "--spec", SPEC, "--catalog", CATALOG, "zzz_nothing"]
        )
        assert result.exit_code == 0
        assert result.output == ""

    def test_parse_error_exits_two_with_position(self, runner):
        result = runner.invoke(
            main, ["query", "--spec", SPEC, "--catalog", CATALOG, "type:"]
        )
        assert result.exit_code == 2
        assert "position 5" in result.output

    def test_unknown_provider_exits_one(self, runner):
        result = runner.invoke(
            main, ["query", "--spec", SPEC, "--catalog", CATALOG, ":galaxy()"]
        )
        assert result.exit_code == 1


class TestServe:
    def test_help_lists_options(self, runner):
        result = runner.invoke(main, ["serve", "--help"])
        assert result.exit_code == 0
        for option in ("--spec", "--catalog", "--state", "--port", "--host"):
            assert option in result.output
