"""REST API over the assessment engine and review store."""
from __future__ import annotations

import threading
import uuid
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from fastapi import Depends, FastAPI, Header, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .. import assessment
from ..catalog import catalog
from ..config import AssessmentConfig, ConfigError, config_from_dict
from ..probes import RequestsTransport, Transport
from ..rdf import ParseError, load_graph
from ..review import (
    Review,
    ReviewError,
    SelfReviewError,
    UnknownTargetError,
    UnregisteredReviewerError,
    aggregate,
    feedback_report,
    human_signal,
)
from .store import EventStore


class TargetIn(BaseModel):
    title: str
    field: str = "default"
    source: str = ""


class ReviewIn(BaseModel):
    answers: dict[str, bool]
    suggested_links: list[str] = Field(default_factory=list)


class PolicyIn(BaseModel):
    min_reviews: int


class AssessmentIn(BaseModel):
    config: dict[str, Any] = Field(default_factory=dict)
    wait: bool = False


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def create_app(
    data_dir: str | Path,
    transport: Optional[Transport] = None,
    base_config: Optional[AssessmentConfig] = None,
) -> FastAPI:
    store = EventStore(data_dir)
    transport = transport if transport is not None else RequestsTransport()
    app = FastAPI(title="kgmm", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.store = store
    app.state.transport = transport
    app.state.base_config = base_config or AssessmentConfig()

    def require_account(authorization: Optional[str] = Header(default=None)) -> dict:
        if not authorization or not authorization.lower().startswith("bearer "):
            raise HTTPException(status_code=401, detail="bearer token required")
        account = store.authenticate(authorization.split(" ", 1)[1].strip())
        if account is None:
            raise HTTPException(status_code=401, detail="invalid token")
        return account

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok", "version": "0.1.0"}

    @app.get("/catalog")
    def get_catalog() -> list[dict]:
        return [
            {
                "id": d.id.value,
                "dimension": d.dimension.value,
                "level": d.level,
                "priority": d.priority.label,
                "modes": sorted(m.value for m in d.modes),
                "sources": sorted(s.value for s in d.sources),
                "description": d.description,
            }
            for d in catalog()
        ]

    @app.get("/questions")
    def get_questions() -> list[dict]:
        cfg: AssessmentConfig = app.state.base_config
        return [
            {"id": q.id, "text": q.text, "measures": [m.value for m in q.measure_ids]}
            for q in cfg.questions
        ]

    @app.post("/targets", status_code=201)
    def create_target(body: TargetIn, account: dict = Depends(require_account)) -> dict:
        target_id = store.create_target(
            title=body.title, field=body.field, source=body.source, author=account["id"]
        )
        return {"id": target_id}

    @app.get("/targets/{target_id}")
    def get_target(target_id: str) -> dict:
        target = store.get_target(target_id)
        if target is None:
            raise HTTPException(status_code=404, detail="unknown target")
        return target

    @app.post("/targets/{target_id}/reviews", status_code=201)
    def post_review(
        target_id: str, body: ReviewIn, account: dict = Depends(require_account)
    ) -> dict:
        cfg: AssessmentConfig = app.state.base_config
        r = Review(
            reviewer=account["id"],
            target=target_id,
            answers=body.answers,
            suggested_links=tuple(body.suggested_links),
        )
        try:
            review_id = store.submit_review(r, cfg.questions)
        except UnknownTargetError as exc:
            raise HTTPException(status_code=404, detail=str(exc))
        except SelfReviewError as exc:
            raise HTTPException(status_code=403, detail=str(exc))
        except (UnregisteredReviewerError, ReviewError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {"id": review_id, "target": target_id}

    @app.get("/targets/{target_id}/feedback")
    def get_feedback(target_id: str) -> dict:
        cfg: AssessmentConfig = app.state.base_config
        try:
            return feedback_report(store.reviews, target_id, cfg.questions)
        except UnknownTargetError as exc:
            raise HTTPException(status_code=404, detail=str(exc))

    @app.get("/policies/{field}")
    def get_policy(field: str) -> dict:
        policy = store.reviews.policy_for(field)
        return {
            "field": policy.field,
            "min_reviews": policy.min_reviews,
            "agreement_threshold": policy.agreement_threshold,
        }

    @app.put("/policies/{field}")
    def put_policy(field: str, body: PolicyIn, account: dict = Depends(require_account)) -> dict:
        try:
            policy = store.set_policy(field, body.min_reviews)
        except ReviewError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        return {"field": policy.field, "min_reviews": policy.min_reviews}

    def _run_assessment(record_id: str, target: dict, cfg: AssessmentConfig) -> None:
        try:
            source = target.get("source") or ""
            text = Path(source).read_text(encoding="utf-8")
            graph = load_graph(text)
            policy = store.reviews.policy_for_target(target["id"])
            reviews = store.reviews.reviews_for(target["id"])
            agg = aggregate(reviews, policy, cfg.questions, target["id"])
            signal = human_signal(agg, cfg.questions)
            feedback = feedback_report(store.reviews, target["id"], cfg.questions)
            outcome = assessment.assess(
                graph,
                cfg,
                target=target["id"],
                transport=app.state.transport,
                signal=signal,
                reviews_enabled=True,
                review_count=agg.review_count,
                reviews_required=policy.min_reviews,
                recommended_links=feedback["suggested_links"],
            )
            record = dict(store.get_assessment(record_id) or {})
            record.update(
                state="finished",
                finished_at=_now(),
                report=outcome.report,
                results={m.value: r.to_dict() for m, r in sorted(outcome.results.items(), key=lambda kv: kv[0].value)},
            )
            store.put_assessment(record)
        except (OSError, ParseError, ConfigError) as exc:
            record = dict(store.get_assessment(record_id) or {})
            record.update(state="failed", finished_at=_now(), error=str(exc))
            store.put_assessment(record)

    @app.post("/targets/{target_id}/assessments", status_code=202)
    def post_assessment(
        target_id: str, body: AssessmentIn, account: dict = Depends(require_account)
    ) -> dict:
        target = store.get_target(target_id)
        if target is None:
            raise HTTPException(status_code=404, detail="unknown target")
        base: AssessmentConfig = app.state.base_config
        try:
            overrides = dict(body.config)
            if overrides:
                cfg = config_from_dict(overrides)
            else:
                cfg = base
        except ConfigError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        record_id = f"asmt-{uuid.uuid4().hex[:10]}"
        record = {
            "id": record_id,
            "target": target_id,
            "state": "running",
            "started_at": _now(),
            "config": body.config,
        }
        store.put_assessment(record)
        if body.wait:
            _run_assessment(record_id, target, cfg)
        else:
            thread = threading.Thread(
                target=_run_assessment, args=(record_id, target, cfg), daemon=True
            )
            thread.start()
        return {"id": record_id, "state": store.get_assessment(record_id)["state"]}

    @app.get("/assessments/{assessment_id}")
    def get_assessment(assessment_id: str) -> dict:
        record = store.get_assessment(assessment_id)
        if record is None:
            raise HTTPException(status_code=404, detail="unknown assessment")
        return record

    @app.get("/assessments/{assessment_id}/report")
    def get_report(assessment_id: str) -> dict:
        record = store.get_assessment(assessment_id)
        if record is None:
            raise HTTPException(status_code=404, detail="unknown assessment")
        if record.get("state") != "finished":
            raise HTTPException(status_code=409, detail=f"assessment is {record.get('state')}")
        return record["report"]

    return app
