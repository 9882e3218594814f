"""Append-only JSON-lines persistence.

One event file per entity type under the data directory; the in-memory state
is rebuilt by replaying the files on start. Writes are appended with flush
and fsync, so a restart after any completed write reproduces the same state.
"""
from __future__ import annotations

import hashlib
import json
import os
import secrets
import threading
import uuid
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from ..review import Review, ReviewPolicy, ReviewStore

EVENT_FILES = ("accounts", "targets", "policies", "reviews", "assessments")


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def hash_token(token: str) -> str:
    return hashlib.sha256(token.encode("utf-8")).hexdigest()


class EventStore:
    """Durable state for targets, accounts, policies, reviews, assessments."""

    def __init__(self, data_dir: str | Path) -> None:
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._lock = threading.RLock()
        self.reviews = ReviewStore()
        self.assessments: dict[str, dict] = {}
        self._token_index: dict[str, str] = {}  # token hash -> account id
        self._replay()

    # -- event log ----------------------------------------------------------

    def _path(self, kind: str) -> Path:
        return self.data_dir / f"{kind}.jsonl"

    def _append(self, kind: str, event: dict) -> None:
        line = json.dumps(event, sort_keys=True)
        with self._lock:
            with open(self._path(kind), "a", encoding="utf-8") as fh:
                fh.write(line + "\n")
                fh.flush()
                os.fsync(fh.fileno())

    def _replay(self) -> None:
        for kind in EVENT_FILES:
            path = self._path(kind)
            if not path.exists():
                continue
            with open(path, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        self._apply(kind, json.loads(line))

    def _apply(self, kind: str, event: dict) -> None:
        if kind == "accounts":
            self.reviews.register_account(event["id"], event.get("name", ""), event.get("role", "reviewer"))
            self.reviews.accounts[event["id"]]["token_hash"] = event["token_hash"]
            self._token_index[event["token_hash"]] = event["id"]
        elif kind == "targets":
            self.reviews.add_target(event["id"], event.get("field", "default"), event.get("author", ""))
            self.reviews.targets[event["id"]].update(
                {k: event.get(k) for k in ("title", "source", "created_at")}
            )
        elif kind == "policies":
            self.reviews.policies[event["field"]] = ReviewPolicy(
                field=event["field"],
                min_reviews=event["min_reviews"],
                agreement_threshold=event.get("agreement_threshold", 0.5),
            )
        elif kind == "reviews":
            review = Review(
                reviewer=event["reviewer"],
                target=event["target"],
                answers={k: bool(v) for k, v in event["answers"].items()},
                suggested_links=tuple(event.get("suggested_links", ())),
                submitted_at=event.get("submitted_at", ""),
            )
            self.reviews.reviews[(review.reviewer, review.target)] = review
        elif kind == "assessments":
            record = dict(event)
            self.assessments[record["id"]] = record

    # -- accounts -----------------------------------------------------------

    def create_account(self, name: str, role: str = "reviewer", account_id: Optional[str] = None,
                       token: Optional[str] = None) -> tuple[str, str]:
        """Returns (account id, plaintext token). The token is only available
        at creation time; we store its hash."""
        account_id = account_id or f"acct-{uuid.uuid4().hex[:10]}"
        token = token or secrets.token_urlsafe(24)
        event = {
            "id": account_id,
            "name": name,
            "role": role,
            "token_hash": hash_token(token),
            "created_at": _now(),
        }
        with self._lock:
            self._append("accounts", event)
            self._apply("accounts", event)
        return account_id, token

    def authenticate(self, token: str) -> Optional[dict]:
        account_id = self._token_index.get(hash_token(token))
        if account_id is None:
            return None
        return self.reviews.accounts.get(account_id)

    def list_accounts(self) -> list[dict]:
        return [
            {k: v for k, v in acct.items() if k != "token_hash"}
            for acct in sorted(self.reviews.accounts.values(), key=lambda a: a["id"])
        ]

    # -- targets ------------------------------------------------------------

    def create_target(
        self,
        title: str,
        field: str = "default",
        source: str = "",
        author: str = "",
        target_id: Optional[str] = None,
    ) -> str:
        target_id = target_id or f"tgt-{uuid.uuid4().hex[:10]}"
        event = {
            "id": target_id,
            "title": title,
            "field": field or "default",
            "source": source,
            "author": author,
            "created_at": _now(),
        }
        with self._lock:
            self._append("targets", event)
            self._apply("targets", event)
        return target_id

    def get_target(self, target_id: str) -> Optional[dict]:
        return self.reviews.targets.get(target_id)

    # -- policies -----------------------------------------------------------

    def set_policy(self, field: str, min_reviews: int) -> ReviewPolicy:
        policy = ReviewPolicy(field=field, min_reviews=min_reviews)
        event = {"field": field, "min_reviews": min_reviews, "set_at": _now()}
        with self._lock:
            self._append("policies", event)
            self._apply("policies", event)
        return policy

    # -- reviews ------------------------------------------------------------

    def submit_review(self, review: Review, questions) -> str:
        with self._lock:
            review_id = self.reviews.submit_review(review, questions)
            self._append(
                "reviews",
                {
                    "reviewer": review.reviewer,
                    "target": review.target,
                    "answers": dict(review.answers),
                    "suggested_links": list(review.suggested_links),
                    "submitted_at": review.submitted_at,
                },
            )
        return review_id

    # -- assessments --------------------------------------------------------

    def put_assessment(self, record: dict) -> None:
        with self._lock:
            self._append("assessments", record)
            self._apply("assessments", record)

    def get_assessment(self, assessment_id: str) -> Optional[dict]:
        return self.assessments.get(assessment_id)
