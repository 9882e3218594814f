"""Command-line interface behaviour, driven through the click test runner."""
from __future__ import annotations

import json
import unittest.mock
from pathlib import Path

import pytest
from click.testing import CliRunner

from conftest import MockTransport, html_response

import kgmm.cli as cli
from kgmm.service.store import EventStore

FIXTURES = Path(__file__).parent / "fixtures"

ASSESS_ARGS = [
    "assess", str(FIXTURES / "level3.nt"),
    "--config", str(FIXTURES / "level3_config.yaml"),
    "--reviews", str(FIXTURES / "level3_reviews.yaml"),
    "--target", "kg-fixture",
]


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def fixture_transport():
    transport = MockTransport({"http://kg.example.org/": html_response(elapsed=0.5)})
    with unittest.mock.patch.object(cli, "RequestsTransport", lambda: transport):
        yield transport


class TestAssess:
    def test_json_report(self, runner, fixture_transport):
        result = runner.invoke(cli.main, ASSESS_ARGS + ["--format", "json"])
        assert result.exit_code == 0, result.output
        report = json.loads(result.output)
        assert report["achieved_level"] == 3
        assert report["target"] == "kg-fixture"

    def test_human_report(self, runner, fixture_transport):
        result = runner.invoke(cli.main, ASSESS_ARGS)
        assert result.exit_code == 0, result.output
        assert "Achieved maturity level: 3/5" in result.output
        assert "blocked by Trackability" in result.output

    def test_markdown_report(self, runner, fixture_transport):
        result = runner.invoke(cli.main, ASSESS_ARGS + ["--format", "markdown"])
        assert result.exit_code == 0, result.output
        assert "**Achieved maturity level: 3/5**" in result.output
        assert "| Trackability | 0.000 | no | Assessed |" in result.output

    def test_min_level_gate(self, runner, fixture_transport):
        assert runner.invoke(cli.main, ASSESS_ARGS + ["--min-level", "3"]).exit_code == 0
        assert runner.invoke(cli.main, ASSESS_ARGS + ["--min-level", "4"]).exit_code == 1

    def test_missing_graph_exits_2(self, runner):
        result = runner.invoke(cli.main, ["assess", "/does/not/exist.nt", "--offline"])
        assert result.exit_code == 2
        assert "cannot read graph" in result.output

    def test_unparseable_graph_exits_2(self, runner, tmp_path):
        bad = tmp_path / "bad.nt"
        bad.write_text("not rdf at all\n")
        result = runner.invoke(cli.main, ["assess", str(bad), "--offline"])
        assert result.exit_code == 2
        assert "cannot parse graph" in result.output

    def test_bad_config_exits_2(self, runner, tmp_path):
        cfg = tmp_path / "cfg.yaml"
        cfg.write_text("thresholds: {NotAMeasure: 0.5}\n")
        result = runner.invoke(
            cli.main,
            ["assess", str(FIXTURES / "level3.nt"), "--config", str(cfg), "--offline"],
        )
        assert result.exit_code == 2

    def test_reviews_and_data_dir_conflict(self, runner, tmp_path):
        result = runner.invoke(
            cli.main,
            ASSESS_ARGS + ["--data-dir", str(tmp_path)],
        )
        assert result.exit_code == 2
        assert "mutually exclusive" in result.output

    def test_output_file(self, runner, fixture_transport, tmp_path):
        out = tmp_path / "report.json"
        result = runner.invoke(
            cli.main, ASSESS_ARGS + ["--format", "json", "--output", str(out)]
        )
        assert result.exit_code == 0
        assert json.loads(out.read_text())["achieved_level"] == 3

    def test_offline_without_reviews(self, runner):
        result = runner.invoke(
            cli.main,
            ["assess", str(FIXTURES / "level3.nt"),
             "--config", str(FIXTURES / "level3_config.yaml"),
             "--offline", "--format", "json"],
        )
        assert result.exit_code == 0, result.output
        report = json.loads(result.output)
        assert report["measures"]["Responsiveness"]["status"] == "Insufficient"

    def test_all_formats_agree_on_level(self, runner, fixture_transport):
        json_out = runner.invoke(cli.main, ASSESS_ARGS + ["--format", "json"]).output
        human_out = runner.invoke(cli.main, ASSESS_ARGS).output
        md_out = runner.invoke(cli.main, ASSESS_ARGS + ["--format", "markdown"]).output
        level = json.loads(json_out)["achieved_level"]
        assert f"Achieved maturity level: {level}/5" in human_out
        assert f"Achieved maturity level: {level}/5" in md_out


class TestCatalog:
    def test_markdown_rows(self, runner):
        result = runner.invoke(cli.main, ["catalog"])
        assert result.exit_code == 0
        assert "| Conciseness | Succinctness | 3 | *** | [H,M] |" in result.output

    def test_json_has_20_records(self, runner):
        result = runner.invoke(cli.main, ["catalog", "--format", "json"])
        assert len(json.loads(result.output)) == 20

    def test_human_groups_by_level(self, runner):
        result = runner.invoke(cli.main, ["catalog", "--format", "human"])
        assert result.exit_code == 0
        for level in range(1, 6):
            assert f"Level {level} (" in result.output


def _bootstrap(runner, data_dir) -> dict:
    """An author with a target plus one reviewer; returns their credentials."""
    out = {}
    for name in ("author", "reviewer"):
        result = runner.invoke(
            cli.main, ["account", "create", name, "--data-dir", str(data_dir)]
        )
        assert result.exit_code == 0, result.output
        out[name] = json.loads(result.output)
    result = runner.invoke(
        cli.main,
        ["target", "create", "My KG", "--data-dir", str(data_dir),
         "--token", out["author"]["token"], "--id", "t1",
         "--source", str(FIXTURES / "level3.nt")],
    )
    assert result.exit_code == 0, result.output
    return out


class TestReviewFlow:
    def test_submit_and_feedback(self, runner, tmp_path):
        creds = _bootstrap(runner, tmp_path)
        result = runner.invoke(
            cli.main,
            ["review", "submit", "--data-dir", str(tmp_path),
             "--token", creds["reviewer"]["token"], "--target", "t1",
             "--answer", "q-trustworthiness=yes", "--answer", "q-linkability=no",
             "--link", "http://www.wikidata.org/entity/Q42"],
        )
        assert result.exit_code == 0, result.output
        assert json.loads(result.output)["target"] == "t1"

        feedback = runner.invoke(
            cli.main, ["review", "feedback", "--data-dir", str(tmp_path), "--target", "t1"]
        )
        body = json.loads(feedback.output)
        assert body["review_count"] == 1
        assert body["suggested_links"][0]["iri"] == "http://www.wikidata.org/entity/Q42"

    def test_self_review_rejected(self, runner, tmp_path):
        creds = _bootstrap(runner, tmp_path)
        result = runner.invoke(
            cli.main,
            ["review", "submit", "--data-dir", str(tmp_path),
             "--token", creds["author"]["token"], "--target", "t1",
             "--answer", "q-trustworthiness=yes"],
        )
        assert result.exit_code == 2

    def test_bad_answer_syntax(self, runner, tmp_path):
        creds = _bootstrap(runner, tmp_path)
        result = runner.invoke(
            cli.main,
            ["review", "submit", "--data-dir", str(tmp_path),
             "--token", creds["reviewer"]["token"], "--target", "t1",
             "--answer", "q-trustworthiness=maybe"],
        )
        assert result.exit_code == 2

    def test_invalid_token(self, runner, tmp_path):
        _bootstrap(runner, tmp_path)
        result = runner.invoke(
            cli.main,
            ["review", "submit", "--data-dir", str(tmp_path),
             "--token", "bogus", "--target", "t1",
             "--answer", "q-trustworthiness=yes"],
        )
        assert result.exit_code == 2

    def test_assess_reads_data_dir_reviews(self, runner, tmp_path, fixture_transport):
        creds = _bootstrap(runner, tmp_path)
        answers = [
            arg for qid in (
                "q-linkability", "q-representation", "q-instance-completeness",
                "q-property-completeness", "q-correctness", "q-trustworthiness",
                "q-semantic-accuracy", "q-easiness",
            ) for arg in ("--answer", f"{qid}=yes")
        ]
        for i in range(3):
            who = json.loads(runner.invoke(
                cli.main, ["account", "create", f"r{i}", "--data-dir", str(tmp_path)]
            ).output)
            result = runner.invoke(
                cli.main,
                ["review", "submit", "--data-dir", str(tmp_path),
                 "--token", who["token"], "--target", "t1"] + answers,
            )
            assert result.exit_code == 0, result.output
        result = runner.invoke(
            cli.main,
            ["assess", str(FIXTURES / "level3.nt"),
             "--config", str(FIXTURES / "level3_config.yaml"),
             "--data-dir", str(tmp_path), "--target", "t1", "--format", "json"],
        )
        assert result.exit_code == 0, result.output
        report = json.loads(result.output)
        assert report["achieved_level"] == 3
        assert report["reviews"] == {"count": 3, "required": 3}

    def test_unknown_target_in_data_dir(self, runner, tmp_path):
        _bootstrap(runner, tmp_path)
        result = runner.invoke(
            cli.main,
            ["assess", str(FIXTURES / "level3.nt"), "--data-dir", str(tmp_path),
             "--target", "nope", "--offline"],
        )
        assert result.exit_code == 2


class TestPolicyAndAccounts:
    def test_policy_roundtrip(self, runner, tmp_path):
        result = runner.invoke(
            cli.main, ["policy", "set", "botany", "5", "--data-dir", str(tmp_path)]
        )
        assert result.exit_code == 0, result.output
        got = runner.invoke(
            cli.main, ["policy", "get", "botany", "--data-dir", str(tmp_path)]
        )
        assert json.loads(got.output) == {"field": "botany", "min_reviews": 5}

    def test_policy_rejects_zero(self, runner, tmp_path):
        result = runner.invoke(
            cli.main, ["policy", "set", "botany", "0", "--data-dir", str(tmp_path)]
        )
        assert result.exit_code == 2

    def test_account_list_hides_tokens(self, runner, tmp_path):
        created = json.loads(runner.invoke(
            cli.main, ["account", "create", "alice", "--data-dir", str(tmp_path)]
        ).output)
        assert created["token"]
        listing = runner.invoke(cli.main, ["account", "list", "--data-dir", str(tmp_path)])
        accounts = json.loads(listing.output)
        assert [a["name"] for a in accounts] == ["alice"]
        assert all("token" not in a and "token_hash" not in a for a in accounts)

    def test_target_list(self, runner, tmp_path):
        _bootstrap(runner, tmp_path)
        listing = runner.invoke(cli.main, ["target", "list", "--data-dir", str(tmp_path)])
        targets = json.loads(listing.output)
        assert [t["id"] for t in targets] == ["t1"]


class TestEquivalence:
    def test_cli_matches_library_event_store(self, runner, tmp_path, fixture_transport):
        """The same reviews reach the same aggregate whether submitted through
        the CLI or written through the store API directly."""
        creds = _bootstrap(runner, tmp_path)
        result = runner.invoke(
            cli.main,
            ["review", "submit", "--data-dir", str(tmp_path),
             "--token", creds["reviewer"]["token"], "--target", "t1",
             "--answer", "q-trustworthiness=yes"],
        )
        assert result.exit_code == 0, result.output
        store = EventStore(tmp_path)
        reviews = store.reviews.reviews_for("t1")
        assert len(reviews) == 1
        assert reviews[0].answers == {"q-trustworthiness": True}
