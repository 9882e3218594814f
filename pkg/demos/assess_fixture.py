"""Walk-through: assess the bundled fixture graph and read the report.

The fixture describes a small curated graph that satisfies everything up to
maturity level 3 and is blocked at level 4. All probes run against a scripted
transport, so the demo works with no network at all.

Run with: python3 demos/assess_fixture.py
"""
from __future__ import annotations

from pathlib import Path

import yaml

from kgmm.assessment import assess
from kgmm.config import load_config
from kgmm.probes import TransportResponse
from kgmm.rdf import load_graph
from kgmm.review import Review, ReviewStore, aggregate, feedback_report, human_signal

FIXTURES = Path(__file__).parent.parent / "tests" / "fixtures"


class ScriptedTransport:
    """Answers every URL with a fast empty HTML page; enough to show that the
    exploration interface responds within the two-second budget."""

    def request(self, method: str, url: str, headers: dict, timeout: float) -> TransportResponse:
        return TransportResponse(
            status=200,
            headers={"Content-Type": "text/html"},
            body=b"<html></html>",
            elapsed=0.2,
        )


def build_review_store(cfg, target: str) -> ReviewStore:
    store = ReviewStore()
    store.add_target(target)
    for entry in yaml.safe_load((FIXTURES / "level3_reviews.yaml").read_text()):
        store.register_account(entry["reviewer"])
        store.submit_review(
            Review(
                reviewer=entry["reviewer"],
                target=target,
                answers=entry["answers"],
                suggested_links=tuple(entry.get("suggested_links", ())),
                submitted_at=entry["submitted_at"],
            ),
            cfg.questions,
        )
    return store


def main() -> None:
    target = "demo-kg"
    cfg = load_config(FIXTURES / "level3_config.yaml")
    graph = load_graph((FIXTURES / "level3.nt").read_text())
    print(f"Loaded {len(graph)} triples.")

    store = build_review_store(cfg, target)
    policy = store.policy_for_target(target)
    agg = aggregate(store.reviews_for(target), policy, cfg.questions, target)
    signal = human_signal(agg, cfg.questions)
    links = feedback_report(store, target, cfg.questions)["suggested_links"]
    print(f"Collected {agg.review_count} reviews (quorum {policy.min_reviews}).")

    outcome = assess(
        graph,
        cfg,
        target=target,
        transport=ScriptedTransport(),
        signal=signal,
        reviews_enabled=True,
        review_count=agg.review_count,
        reviews_required=policy.min_reviews,
        recommended_links=links,
    )
    report = outcome.report

    print(f"\nAchieved maturity level: {report['achieved_level']}/5\n")
    for lvl in report["levels"]:
        verdict = "pass" if lvl["passed"] else "FAIL"
        blocking = f"  (blocked by {', '.join(lvl['blocking'])})" if lvl["blocking"] else ""
        print(f"  Level {lvl['level']} {lvl['name']}: {verdict}{blocking}")

    print("\nWhat to fix next:")
    for action in report["recommended_actions"]:
        print(f"  [{action['measure']}] {action['guidance']}")

    print("\nLinks suggested by reviewers:")
    for link in report["recommended_links"]:
        print(f"  {link['iri']} (suggested by {link['suggested_by']} reviewer(s))")


if __name__ == "__main__":
    main()
