"""Crowd review ingestion, quorum policy and aggregation.

Reviews are binary answer sheets from registered reviewers. The community of
a field decides how many reviews a target needs before the crowd's voice
counts; below that quorum no human signal is emitted at all.
"""
from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from datetime import datetime, timezone
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .catalog import MeasureId
from .config import QuestionDef

DEFAULT_MIN_REVIEWS = 3


class ReviewError(ValueError):
    pass


class UnknownTargetError(ReviewError):
    pass


class UnregisteredReviewerError(ReviewError):
    pass


class SelfReviewError(ReviewError):
    pass


@dataclass(frozen=True)
class ReviewPolicy:
    field: str
    min_reviews: int = DEFAULT_MIN_REVIEWS
    agreement_threshold: float = 0.5

    def __post_init__(self) -> None:
        if self.min_reviews < 1:
            raise ReviewError("min_reviews must be >= 1")
        if not 0.0 <= self.agreement_threshold <= 1.0:
            raise ReviewError("agreement_threshold outside [0,1]")


@dataclass(frozen=True)
class Review:
    reviewer: str
    target: str
    answers: Mapping[str, bool]
    suggested_links: tuple[str, ...] = ()
    submitted_at: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "answers", dict(self.answers))
        object.__setattr__(self, "suggested_links", tuple(self.suggested_links))
        if not self.submitted_at:
            object.__setattr__(
                self, "submitted_at", datetime.now(timezone.utc).isoformat()
            )


@dataclass(frozen=True)
class QuestionTally:
    question_id: str
    agree: int
    total: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.agree, self.total)


@dataclass(frozen=True)
class ReviewAggregate:
    target: str
    review_count: int
    quorum_met: bool
    min_reviews: int
    tallies: tuple[QuestionTally, ...]

    def tally(self, question_id: str) -> Optional[QuestionTally]:
        for t in self.tallies:
            if t.question_id == question_id:
                return t
        return None


@dataclass(frozen=True)
class HumanSignal:
    """Per-measure review scores; populated only when quorum is met."""

    scores: Mapping[MeasureId, float] = field(default_factory=dict)

    def get(self, measure: MeasureId) -> Optional[float]:
        return self.scores.get(measure)


class ReviewStore:
    """In-memory review/policy/account store. The service module persists the
    same state through its event log and rebuilds one of these on start."""

    def __init__(self) -> None:
        self.accounts: dict[str, dict] = {}
        self.targets: dict[str, dict] = {}
        self.policies: dict[str, ReviewPolicy] = {}
        # (reviewer, target) -> Review; resubmission replaces
        self.reviews: dict[tuple[str, str], Review] = {}

    # -- registration -------------------------------------------------------

    def register_account(self, account_id: str, name: str = "", role: str = "reviewer") -> None:
        self.accounts[account_id] = {"id": account_id, "name": name or account_id, "role": role}

    def add_target(self, target_id: str, field_name: str = "default", author: str = "") -> None:
        self.targets[target_id] = {"id": target_id, "field": field_name or "default", "author": author}

    # -- policies -----------------------------------------------------------

    def set_min_reviews(self, field_name: str, n: int) -> ReviewPolicy:
        policy = ReviewPolicy(field=field_name, min_reviews=n)
        self.policies[field_name] = policy
        return policy

    def policy_for(self, field_name: str) -> ReviewPolicy:
        return self.policies.get(field_name, ReviewPolicy(field=field_name))

    def policy_for_target(self, target_id: str) -> ReviewPolicy:
        target = self.targets.get(target_id)
        field_name = target["field"] if target else "default"
        return self.policy_for(field_name)

    # -- reviews ------------------------------------------------------------

    def submit_review(self, review: Review, questions: Iterable[QuestionDef]) -> str:
        if review.reviewer not in self.accounts:
            raise UnregisteredReviewerError(f"reviewer {review.reviewer!r} is not registered")
        target = self.targets.get(review.target)
        if target is None:
            raise UnknownTargetError(f"unknown target {review.target!r}")
        if target.get("author") and target["author"] == review.reviewer:
            raise SelfReviewError("authors cannot review their own work")
        known = {q.id for q in questions}
        unknown = set(review.answers) - known
        if unknown:
            raise ReviewError(f"answers to unknown questions: {sorted(unknown)}")
        self.reviews[(review.reviewer, review.target)] = review
        return str(uuid.uuid5(uuid.NAMESPACE_URL, f"{review.reviewer}:{review.target}"))

    def reviews_for(self, target_id: str) -> list[Review]:
        latest = [r for (rv, tg), r in self.reviews.items() if tg == target_id]
        return sorted(latest, key=lambda r: r.reviewer)


def aggregate(
    reviews: Iterable[Review],
    policy: ReviewPolicy,
    questions: Iterable[QuestionDef],
    target: str,
) -> ReviewAggregate:
    """Tally latest-per-reviewer answers; order independent by construction."""
    by_reviewer: dict[str, Review] = {}
    for r in sorted(reviews, key=lambda r: (r.reviewer, r.submitted_at)):
        by_reviewer[r.reviewer] = r
    latest = list(by_reviewer.values())
    tallies = []
    for q in questions:
        answered = [r.answers[q.id] for r in latest if q.id in r.answers]
        if answered:
            tallies.append(QuestionTally(q.id, agree=sum(answered), total=len(answered)))
    count = len(latest)
    return ReviewAggregate(
        target=target,
        review_count=count,
        quorum_met=count >= policy.min_reviews,
        min_reviews=policy.min_reviews,
        tallies=tuple(tallies),
    )


def human_signal(agg: ReviewAggregate, questions: Iterable[QuestionDef]) -> HumanSignal:
    """Mean agreement ratio per measure over its mapped questions; empty when
    the quorum is not met."""
    if not agg.quorum_met:
        return HumanSignal({})
    per_measure: dict[MeasureId, list[Fraction]] = {}
    for q in questions:
        t = agg.tally(q.id)
        if t is None:
            continue
        for mid in q.measure_ids:
            per_measure.setdefault(mid, []).append(t.ratio)
    scores = {
        mid: float(sum(ratios) / len(ratios)) for mid, ratios in per_measure.items()
    }
    return HumanSignal(scores)


def feedback_report(
    store: ReviewStore, target_id: str, questions: Iterable[QuestionDef]
) -> dict:
    """Public aggregate of reviewer feedback: per-question tallies, the
    required review minimum, and deduplicated suggested links."""
    if target_id not in store.targets:
        raise UnknownTargetError(f"unknown target {target_id!r}")
    questions = list(questions)
    policy = store.policy_for_target(target_id)
    reviews = store.reviews_for(target_id)
    agg = aggregate(reviews, policy, questions, target_id)

    link_counts: dict[str, int] = {}
    for r in reviews:
        for link in set(r.suggested_links):
            link_counts[link] = link_counts.get(link, 0) + 1

    question_rows = []
    for q in questions:
        t = agg.tally(q.id)
        question_rows.append(
            {
                "id": q.id,
                "text": q.text,
                "measures": [m.value for m in q.measure_ids],
                "agree": t.agree if t else 0,
                "total": t.total if t else 0,
                "ratio": float(t.ratio) if t else None,
            }
        )
    return {
        "target": target_id,
        "review_count": agg.review_count,
        "min_reviews_required": policy.min_reviews,
        "quorum_met": agg.quorum_met,
        "questions": question_rows,
        "suggested_links": [
            {"iri": link, "suggested_by": count}
            for link, count in sorted(link_counts.items())
        ],
    }
