"""Command-line interface.

Exit codes: 0 on success, 1 when a ``--min-level`` gate is not reached,
2 on unusable input (bad graph, bad configuration, bad arguments).
"""
from __future__ import annotations

import dataclasses
import json
import sys
from pathlib import Path
from typing import Any, Optional

import click
import yaml

from . import __version__, assessment
from .catalog import LEVEL_NAMES, Curation, catalog as measure_catalog
from .config import AssessmentConfig, ConfigError, load_config
from .probes import RequestsTransport
from .rdf import ParseError, load_graph
from .review import (
    Review,
    ReviewError,
    ReviewStore,
    aggregate,
    feedback_report,
    human_signal,
)
from .service.store import EventStore

USAGE_ERROR = 2
GATE_FAILED = 1


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(USAGE_ERROR)


def _load_config(config_path: Optional[str]) -> AssessmentConfig:
    if not config_path:
        return AssessmentConfig()
    try:
        return load_config(config_path)
    except (OSError, ConfigError, yaml.YAMLError) as exc:
        _fail(f"cannot load configuration: {exc}")
        raise AssertionError  # unreachable


def _load_graph_file(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        _fail(f"cannot read graph: {exc}")
    try:
        return load_graph(text)
    except ParseError as exc:
        _fail(f"cannot parse graph: {exc}")


def _reviews_from_file(path: str, target: str, cfg: AssessmentConfig) -> ReviewStore:
    """Builds a throwaway review store from a YAML/JSON list of reviews."""
    try:
        data = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    except (OSError, yaml.YAMLError) as exc:
        _fail(f"cannot read reviews: {exc}")
    if not isinstance(data, list):
        _fail("reviews file must hold a list of reviews")
    store = ReviewStore()
    store.add_target(target)
    try:
        for i, entry in enumerate(data):
            reviewer = entry.get("reviewer", f"reviewer-{i}")
            store.register_account(reviewer)
            store.submit_review(
                Review(
                    reviewer=reviewer,
                    target=target,
                    answers={k: bool(v) for k, v in entry.get("answers", {}).items()},
                    suggested_links=tuple(entry.get("suggested_links", ())),
                    submitted_at=entry.get("submitted_at", ""),
                ),
                cfg.questions,
            )
    except (AttributeError, TypeError, ReviewError) as exc:
        _fail(f"bad reviews file: {exc}")
    return store


def _format_human(report: dict) -> str:
    lines = [
        f"Target: {report['target']}",
        f"Achieved maturity level: {report['achieved_level']}/5",
        "",
    ]
    for lvl in report["levels"]:
        verdict = "pass" if lvl["passed"] else "FAIL"
        lines.append(f"Level {lvl['level']} ({lvl['name']}): {verdict}")
        for m in lvl["blocking"]:
            r = report["measures"][m]
            lines.append(f"  blocked by {m}: score {r['score']:.3f}, status {r['status']}")
    reviews = report["reviews"]
    lines.append("")
    lines.append(f"Reviews: {reviews['count']} of {reviews['required']} required")
    if report["recommended_actions"]:
        lines.append("")
        lines.append("Recommended actions:")
        for action in report["recommended_actions"]:
            lines.append(f"  [{action['measure']}] {action['guidance']}")
            if action["evidence"]:
                lines.append(f"    evidence: {action['evidence']}")
    if report["recommended_links"]:
        lines.append("")
        lines.append("Reviewer-suggested links:")
        for link in report["recommended_links"]:
            lines.append(f"  {link['iri']} (suggested by {link['suggested_by']})")
    return "\n".join(lines)


def _format_markdown(report: dict) -> str:
    lines = [
        f"# Maturity report: {report['target']}",
        "",
        f"**Achieved maturity level: {report['achieved_level']}/5**",
        "",
        "| Level | Name | Passed | Blocking |",
        "| --- | --- | --- | --- |",
    ]
    for lvl in report["levels"]:
        blocking = ", ".join(lvl["blocking"]) or "-"
        lines.append(
            f"| {lvl['level']} | {lvl['name']} | {'yes' if lvl['passed'] else 'no'} | {blocking} |"
        )
    lines += [
        "",
        "| Measure | Score | Passed | Status |",
        "| --- | --- | --- | --- |",
    ]
    for name, r in report["measures"].items():
        lines.append(
            f"| {name} | {r['score']:.3f} | {'yes' if r['passed'] else 'no'} | {r['status']} |"
        )
    return "\n".join(lines)


@click.group()
@click.version_option(__version__, prog_name="kgmm")
def main() -> None:
    """Graded maturity assessment for curated knowledge graphs."""


@main.command()
@click.argument("graph_path", type=click.Path())
@click.option("--config", "config_path", type=click.Path(), help="YAML assessment configuration.")
@click.option(
    "--format", "fmt", type=click.Choice(["human", "json", "markdown"]), default="human",
    show_default=True,
)
@click.option("--min-level", type=click.IntRange(0, 5), default=None,
              help="Exit 1 unless this level is reached.")
@click.option("--endpoint", default=None, help="Query endpoint to probe.")
@click.option("--seed", type=int, default=None, help="Sampling seed override.")
@click.option("--offline", is_flag=True, help="Skip all network probes.")
@click.option("--target", default="local", show_default=True, help="Target identifier for the report.")
@click.option("--reviews", "reviews_path", type=click.Path(), default=None,
              help="YAML/JSON file with a list of reviews.")
@click.option("--data-dir", type=click.Path(), default=None,
              help="Read reviews for --target from this service data directory.")
@click.option("--output", type=click.Path(), default=None, help="Write the report here instead of stdout.")
def assess(
    graph_path: str,
    config_path: Optional[str],
    fmt: str,
    min_level: Optional[int],
    endpoint: Optional[str],
    seed: Optional[int],
    offline: bool,
    target: str,
    reviews_path: Optional[str],
    data_dir: Optional[str],
    output: Optional[str],
) -> None:
    """Assess a graph file and print the maturity report."""
    cfg = _load_config(config_path)
    overrides: dict[str, Any] = {}
    if endpoint is not None:
        overrides["sparql_endpoint"] = endpoint
    if seed is not None:
        overrides["rng_seed"] = seed
    if offline:
        overrides["offline"] = True
    if overrides:
        try:
            cfg = dataclasses.replace(cfg, **overrides)
        except ConfigError as exc:
            _fail(str(exc))
    graph = _load_graph_file(graph_path)

    store: Optional[ReviewStore] = None
    if reviews_path and data_dir:
        _fail("--reviews and --data-dir are mutually exclusive")
    if reviews_path:
        store = _reviews_from_file(reviews_path, target, cfg)
    elif data_dir:
        store = EventStore(data_dir).reviews
        if target not in store.targets:
            _fail(f"unknown target {target!r} in {data_dir}")

    signal = None
    review_count = 0
    reviews_required = 0
    recommended_links: Optional[list[dict]] = None
    reviews_enabled = store is not None
    if store is not None:
        policy = store.policy_for_target(target)
        agg = aggregate(store.reviews_for(target), policy, cfg.questions, target)
        signal = human_signal(agg, cfg.questions)
        review_count = agg.review_count
        reviews_required = policy.min_reviews
        recommended_links = feedback_report(store, target, cfg.questions)["suggested_links"]

    transport = None if cfg.offline else RequestsTransport()
    outcome = assessment.assess(
        graph,
        cfg,
        target=target,
        transport=transport,
        signal=signal,
        reviews_enabled=reviews_enabled,
        review_count=review_count,
        reviews_required=reviews_required,
        recommended_links=recommended_links,
    )
    report = outcome.report
    if fmt == "json":
        rendered = json.dumps(report, indent=2, sort_keys=True)
    elif fmt == "markdown":
        rendered = _format_markdown(report)
    else:
        rendered = _format_human(report)
    if output:
        Path(output).write_text(rendered + "\n", encoding="utf-8")
    else:
        click.echo(rendered)
    if min_level is not None and report["achieved_level"] < min_level:
        sys.exit(GATE_FAILED)


@main.command("catalog")
@click.option(
    "--format", "fmt", type=click.Choice(["markdown", "json", "human"]), default="markdown",
    show_default=True,
)
def catalog_cmd(fmt: str) -> None:
    """Print the measure catalog."""
    defs = measure_catalog()
    if fmt == "human":
        lines = []
        for level in range(1, 6):
            lines.append(f"Level {level} ({LEVEL_NAMES[level]}):")
            for d in defs:
                if d.level == level:
                    lines.append(f"  {d.id.value} ({d.dimension.value}, {d.priority.label})")
        click.echo("\n".join(lines))
        return
    if fmt == "json":
        rows = [
            {
                "id": d.id.value,
                "dimension": d.dimension.value,
                "level": d.level,
                "priority": d.priority.label,
                "modes": sorted(m.value for m in d.modes),
                "description": d.description,
            }
            for d in defs
        ]
        click.echo(json.dumps(rows, indent=2))
        return
    lines = [
        "| Measure | Dimension | Level | Priority | Curation |",
        "| --- | --- | --- | --- | --- |",
    ]
    order = {Curation.HUMAN: 0, Curation.MACHINE: 1}
    for d in defs:
        tags = ",".join(m.value for m in sorted(d.modes, key=lambda m: order[m]))
        lines.append(
            f"| {d.id.value} | {d.dimension.value} | {d.level} | {d.priority.stars} | [{tags}] |"
        )
    click.echo("\n".join(lines))


def _open_store(data_dir: str) -> EventStore:
    return EventStore(data_dir)


def _authenticated(store: EventStore, token: str) -> dict:
    account = store.authenticate(token)
    if account is None:
        _fail("invalid token")
    return account


@main.group()
def review() -> None:
    """Submit and inspect peer reviews."""


@review.command("submit")
@click.option("--data-dir", required=True, type=click.Path())
@click.option("--token", required=True, help="Reviewer bearer token.")
@click.option("--target", "target_id", required=True)
@click.option("--answer", "answers", multiple=True, metavar="QUESTION=yes|no",
              help="Repeatable binary answer.")
@click.option("--link", "links", multiple=True, help="Repeatable suggested external link.")
def review_submit(data_dir: str, token: str, target_id: str, answers: tuple[str, ...],
                  links: tuple[str, ...]) -> None:
    store = _open_store(data_dir)
    account = _authenticated(store, token)
    parsed: dict[str, bool] = {}
    for item in answers:
        if "=" not in item:
            _fail(f"bad --answer {item!r}, expected QUESTION=yes|no")
        qid, _, raw = item.partition("=")
        value = raw.strip().lower()
        if value not in ("yes", "no", "true", "false"):
            _fail(f"bad answer value {raw!r} for {qid}")
        parsed[qid.strip()] = value in ("yes", "true")
    cfg = AssessmentConfig()
    try:
        review_id = store.submit_review(
            Review(reviewer=account["id"], target=target_id, answers=parsed,
                   suggested_links=links),
            cfg.questions,
        )
    except ReviewError as exc:
        _fail(str(exc))
    click.echo(json.dumps({"id": review_id, "target": target_id}))


@review.command("feedback")
@click.option("--data-dir", required=True, type=click.Path())
@click.option("--target", "target_id", required=True)
def review_feedback(data_dir: str, target_id: str) -> None:
    """Print the aggregated feedback report as JSON."""
    store = _open_store(data_dir)
    cfg = AssessmentConfig()
    try:
        report = feedback_report(store.reviews, target_id, cfg.questions)
    except ReviewError as exc:
        _fail(str(exc))
    click.echo(json.dumps(report, indent=2, sort_keys=True))


@main.group()
def policy() -> None:
    """Per-field review quorum policies."""


@policy.command("set")
@click.argument("field_name")
@click.argument("min_reviews", type=int)
@click.option("--data-dir", required=True, type=click.Path())
def policy_set(field_name: str, min_reviews: int, data_dir: str) -> None:
    store = _open_store(data_dir)
    try:
        p = store.set_policy(field_name, min_reviews)
    except ReviewError as exc:
        _fail(str(exc))
    click.echo(json.dumps({"field": p.field, "min_reviews": p.min_reviews}))


@policy.command("get")
@click.argument("field_name")
@click.option("--data-dir", required=True, type=click.Path())
def policy_get(field_name: str, data_dir: str) -> None:
    store = _open_store(data_dir)
    p = store.reviews.policy_for(field_name)
    click.echo(json.dumps({"field": p.field, "min_reviews": p.min_reviews}))


@main.group()
def target() -> None:
    """Assessment targets stored in a service data directory."""


@target.command("create")
@click.argument("title")
@click.option("--data-dir", required=True, type=click.Path())
@click.option("--token", required=True, help="Author bearer token.")
@click.option("--field", "field_name", default="default", show_default=True)
@click.option("--source", default="", help="Graph file path or endpoint URL.")
@click.option("--id", "target_id", default=None, help="Explicit target identifier.")
def target_create(title: str, data_dir: str, token: str, field_name: str, source: str,
                  target_id: Optional[str]) -> None:
    store = _open_store(data_dir)
    author = _authenticated(store, token)
    tid = store.create_target(
        title=title, field=field_name, source=source, author=author["id"],
        target_id=target_id,
    )
    click.echo(json.dumps({"id": tid}))


@target.command("list")
@click.option("--data-dir", required=True, type=click.Path())
def target_list(data_dir: str) -> None:
    store = _open_store(data_dir)
    targets = sorted(store.reviews.targets.values(), key=lambda t: t["id"])
    click.echo(json.dumps(targets, indent=2))


@main.group()
def account() -> None:
    """Reviewer and curator accounts."""


@account.command("create")
@click.argument("name")
@click.option("--role", default="reviewer", show_default=True)
@click.option("--data-dir", required=True, type=click.Path())
def account_create(name: str, role: str, data_dir: str) -> None:
    store = _open_store(data_dir)
    account_id, token = store.create_account(name, role)
    # the token is only printed once; the store keeps just its hash
    click.echo(json.dumps({"id": account_id, "token": token}))


@account.command("list")
@click.option("--data-dir", required=True, type=click.Path())
def account_list(data_dir: str) -> None:
    store = _open_store(data_dir)
    click.echo(json.dumps(store.list_accounts(), indent=2))


@main.command()
@click.option("--data-dir", required=True, type=click.Path())
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(data_dir: str, config_path: Optional[str], host: str, port: int) -> None:
    """Run the REST service."""
    import uvicorn

    from .service import create_app

    cfg = _load_config(config_path)
    app = create_app(data_dir, base_config=cfg)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
