"""Capture REST response bytes from the fixture target for the UI tests.

The UI must render server fields verbatim, so its tests compare against the
exact bytes the service emits. Re-run this script after any server change:

    python3 frontend/scripts/capture_fixtures.py
"""
from __future__ import annotations

import json
import sys
import tempfile
from pathlib import Path

import yaml

ROOT = Path(__file__).resolve().parent.parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from fastapi.testclient import TestClient

from conftest import MockTransport, html_response
from kgmm.config import load_config
from kgmm.service import create_app

FIXTURES = ROOT / "tests" / "fixtures"
OUT = ROOT / "frontend" / "test" / "fixtures"


def main() -> None:
    cfg = load_config(FIXTURES / "level3_config.yaml")
    transport = MockTransport({cfg.exploration_url: html_response(elapsed=0.5)})
    with tempfile.TemporaryDirectory() as data_dir:
        app = create_app(data_dir, transport=transport, base_config=cfg)
        store = app.state.store
        client = TestClient(app)

        store.create_target("Fixture KG", source=str(FIXTURES / "level3.nt"),
                            target_id="kg-fixture")
        reviews = yaml.safe_load((FIXTURES / "level3_reviews.yaml").read_text())
        for entry in reviews:
            _, token = store.create_account(entry["reviewer"],
                                            account_id=entry["reviewer"])
            resp = client.post(
                "/targets/kg-fixture/reviews",
                json={"answers": entry["answers"],
                      "suggested_links": entry.get("suggested_links", [])},
                headers={"Authorization": f"Bearer {token}"},
            )
            assert resp.status_code == 201, resp.text

        _, operator = store.create_account("operator")
        aid = client.post(
            "/targets/kg-fixture/assessments", json={"wait": True},
            headers={"Authorization": f"Bearer {operator}"},
        ).json()["id"]

        OUT.mkdir(parents=True, exist_ok=True)
        (OUT / "questions.json").write_bytes(client.get("/questions").content)
        (OUT / "target.json").write_bytes(client.get("/targets/kg-fixture").content)
        (OUT / "feedback.json").write_bytes(
            client.get("/targets/kg-fixture/feedback").content
        )
        (OUT / "report.json").write_bytes(
            client.get(f"/assessments/{aid}/report").content
        )

        # the review document a CLI submission sends for reviewer-b
        body = {
            "answers": reviews[1]["answers"],
            "suggested_links": reviews[1].get("suggested_links", []),
        }
        (OUT / "cli_review_body.json").write_text(
            json.dumps(body, separators=(",", ":"), sort_keys=True)
        )
    print(f"fixtures written to {OUT}")


if __name__ == "__main__":
    main()
