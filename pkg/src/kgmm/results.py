"""Scored, evidenced measure results."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .catalog import MeasureId, Source


class Status(enum.Enum):
    ASSESSED = "Assessed"
    INSUFFICIENT = "Insufficient"
    NOT_APPLICABLE = "NotApplicable"


class EvidenceKind(enum.Enum):
    OFFENDING_TRIPLE = "offending triple"
    MISSING_PROPERTY = "missing property"
    PROBE_OUTCOME = "probe outcome"
    DUPLICATE_CLUSTER = "duplicate cluster"
    REVIEW_SUMMARY = "review summary"


@dataclass(frozen=True)
class Evidence:
    kind: EvidenceKind
    message: str
    subject: Optional[str] = None

    def __post_init__(self) -> None:
        if not self.message:
            raise ValueError("evidence message must be non-empty")

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, "message": self.message, "subject": self.subject}


@dataclass(frozen=True)
class MeasureResult:
    id: MeasureId
    score: float
    passed: bool
    status: Status = Status.ASSESSED
    sources_used: frozenset = frozenset()
    evidence: tuple[Evidence, ...] = ()

    def __post_init__(self) -> None:
        if isinstance(self.score, Fraction):
            object.__setattr__(self, "score", float(self.score))
        if not 0.0 <= self.score <= 1.0:
            raise ValueError(f"score outside [0,1]: {self.score}")
        if self.status is Status.INSUFFICIENT and self.passed:
            raise ValueError("insufficient results cannot pass")
        if self.passed and self.status is not Status.ASSESSED:
            raise ValueError("only assessed results can pass")

    def to_dict(self) -> dict:
        return {
            "id": self.id.value,
            "score": self.score,
            "passed": self.passed,
            "status": self.status.value,
            "sources_used": sorted(s.value for s in self.sources_used),
            "evidence": [e.to_dict() for e in self.evidence],
        }


ScoreLike = Union[float, Fraction]


def assessed(
    measure: MeasureId,
    score: ScoreLike,
    threshold: float,
    sources: frozenset,
    evidence: tuple[Evidence, ...] = (),
) -> MeasureResult:
    value = float(score)
    return MeasureResult(
        id=measure,
        score=value,
        passed=value >= threshold,
        status=Status.ASSESSED,
        sources_used=sources,
        evidence=evidence,
    )


def insufficient(measure: MeasureId, message: str) -> MeasureResult:
    return MeasureResult(
        id=measure,
        score=0.0,
        passed=False,
        status=Status.INSUFFICIENT,
        evidence=(Evidence(EvidenceKind.MISSING_PROPERTY, message),),
    )


def not_applicable(measure: MeasureId, message: str) -> MeasureResult:
    return MeasureResult(
        id=measure,
        score=0.0,
        passed=False,
        status=Status.NOT_APPLICABLE,
        evidence=(Evidence(EvidenceKind.MISSING_PROPERTY, message),),
    )


AUTOMATED_ONLY = frozenset({Source.AUTOMATED})
HUMAN_ONLY = frozenset({Source.HUMAN_REVIEW})
BOTH_SOURCES = frozenset({Source.AUTOMATED, Source.HUMAN_REVIEW})
