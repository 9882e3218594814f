"""Walk-through: the peer-review lifecycle behind the human-curated measures.

Shows how binary reviewer answers turn into a per-measure signal once the
review quorum is met, why an unmet quorum makes the human-sourced measures
Insufficient, and how resubmission replaces a reviewer's earlier review.

Run with: python3 demos/review_workflow.py
"""
from __future__ import annotations

from kgmm.config import AssessmentConfig
from kgmm.review import Review, ReviewStore, aggregate, feedback_report, human_signal


def show_signal(store: ReviewStore, cfg: AssessmentConfig, target: str) -> None:
    policy = store.policy_for_target(target)
    agg = aggregate(store.reviews_for(target), policy, cfg.questions, target)
    print(f"  reviews: {agg.review_count}/{policy.min_reviews}, quorum met: {agg.quorum_met}")
    signal = human_signal(agg, cfg.questions)
    if not signal.scores:
        print("  no per-measure signal yet; human-sourced measures stay Insufficient")
        return
    for measure, score in sorted(signal.scores.items(), key=lambda kv: kv[0].value):
        print(f"  {measure.value}: {score:.2f}")


def main() -> None:
    cfg = AssessmentConfig()
    store = ReviewStore()
    store.add_target("demo-kg", field_name="computer-science")
    for reviewer in ("ada", "grace", "edsger"):
        store.register_account(reviewer)

    all_yes = {q.id: True for q in cfg.questions}

    print("Two reviews in, quorum of three not reached:")
    for i, reviewer in enumerate(("ada", "grace")):
        store.submit_review(
            Review(reviewer=reviewer, target="demo-kg", answers=all_yes,
                   submitted_at=f"2026-08-0{i + 1}T10:00:00+00:00"),
            cfg.questions,
        )
    show_signal(store, cfg, "demo-kg")

    print("\nThird review arrives, but edsger disagrees on trustworthiness:")
    answers = dict(all_yes)
    answers["q-trustworthiness"] = False
    store.submit_review(
        Review(reviewer="edsger", target="demo-kg", answers=answers,
               suggested_links=("http://www.wikidata.org/entity/Q42",),
               submitted_at="2026-08-03T10:00:00+00:00"),
        cfg.questions,
    )
    show_signal(store, cfg, "demo-kg")

    print("\nEdsger reconsiders and resubmits; the old review is replaced:")
    store.submit_review(
        Review(reviewer="edsger", target="demo-kg", answers=all_yes,
               submitted_at="2026-08-04T10:00:00+00:00"),
        cfg.questions,
    )
    show_signal(store, cfg, "demo-kg")

    print("\nAggregated feedback for the author:")
    report = feedback_report(store, "demo-kg", cfg.questions)
    for row in report["questions"]:
        print(f"  {row['text']}: {row['agree']} agree / {row['total']} answered")
    for link in report["suggested_links"]:
        print(f"  suggested link: {link['iri']}")


if __name__ == "__main__":
    main()
