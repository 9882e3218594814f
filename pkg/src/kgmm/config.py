"""Assessment configuration.

Houses the operational constants the maturity model leaves open: thresholds,
reference sets, property profiles, PID patterns, probe settings and the
review question set. Loaded from a single YAML/JSON document; every field has
a usable default.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

import yaml

from .catalog import MeasureId

PRESENCE_MEASURES = {
    MeasureId.LICENSE,
    MeasureId.RESPONSIVENESS,
    MeasureId.QUERYABILITY,
    MeasureId.TIMELINESS,
}

DEFAULT_PID_PATTERNS = [
    ("DOI", r"^https?://(dx\.)?doi\.org/10\."),
    ("ORCID", r"^https?://orcid\.org/\d{4}-\d{4}-\d{4}-\d{3}[\dX]$"),
    ("ISBN", r"^urn:isbn:[\d-]+[\dX]$"),
    ("W3ID", r"^https?://w3id\.org/"),
]

DEFAULT_SCHEMA_NAMESPACES = [
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#",
    "http://www.w3.org/2000/01/rdf-schema#",
    "http://www.w3.org/2002/07/owl#",
    "http://www.w3.org/2001/XMLSchema#",
]

# Binary review questions mirroring the peer-review form: one linkability
# question, one representation question, and the completeness block.
DEFAULT_QUESTIONS = [
    ("q-linkability", "Is the content well linked to relevant external resources?", ["Linkability"]),
    ("q-representation", "Is the data represented in a suitable and consistent way?", ["DataRepresentation"]),
    ("q-instance-completeness", "Does the content include all relevant entities?", ["InstanceCompleteness"]),
    ("q-property-completeness", "Are the relevant properties filled in for the entities?", ["PropertyCompleteness"]),
    ("q-correctness", "Are the stated values correct?", ["Correctness"]),
    ("q-trustworthiness", "Is the content trustworthy and verifiable?", ["Trustworthiness"]),
    ("q-semantic-accuracy", "Do the values accurately reflect the real world?", ["SemanticAccuracy"]),
    ("q-easiness", "Is the content easy to understand and navigate?", ["Easiness"]),
]


class ConfigError(ValueError):
    pass


def default_threshold(measure: MeasureId) -> float:
    if measure in PRESENCE_MEASURES:
        return 1.0
    if measure is MeasureId.TRUSTWORTHINESS:
        return 0.5
    return 0.8


@dataclass(frozen=True)
class PropertyRule:
    predicate: str
    required: bool = True
    object_valued: bool = False
    single_valued: bool = False
    datatype: Optional[str] = None


@dataclass(frozen=True)
class QuestionDef:
    id: str
    text: str
    measure_ids: tuple[MeasureId, ...]


@dataclass(frozen=True)
class ProbeConfig:
    responsiveness_limit: float = 2.0
    request_timeout: float = 10.0
    max_redirects: int = 5
    accept_types: tuple[str, ...] = (
        "text/turtle",
        "application/n-triples",
        "application/rdf+xml",
        "application/ld+json",
    )
    parallelism: int = 4
    rate_limit_per_host: float = 10.0

    def __post_init__(self) -> None:
        if self.responsiveness_limit <= 0:
            raise ConfigError("responsiveness_limit must be positive")
        if self.max_redirects < 0:
            raise ConfigError("max_redirects must be >= 0")
        if self.parallelism < 1:
            raise ConfigError("parallelism must be >= 1")


@dataclass(frozen=True)
class AssessmentConfig:
    dataset_iri: Optional[str] = None
    internal_namespaces: tuple[str, ...] = ()
    stable_namespaces: tuple[str, ...] = ()
    schema_namespaces: tuple[str, ...] = tuple(DEFAULT_SCHEMA_NAMESPACES)
    property_profile: dict[str, tuple[PropertyRule, ...]] = field(default_factory=dict)
    reference_population: Optional[int] = None
    reference_entities: Optional[frozenset[str]] = None
    max_age_days: float = 365.0
    thresholds: dict[MeasureId, float] = field(default_factory=dict)
    pid_patterns: tuple[tuple[str, str], ...] = tuple(DEFAULT_PID_PATTERNS)
    sample_size: int = 25
    rng_seed: int = 0
    exploration_url: Optional[str] = None
    sparql_endpoint: Optional[str] = None
    offline: bool = False
    assessment_time: Optional[str] = None
    probe: ProbeConfig = field(default_factory=ProbeConfig)
    questions: tuple[QuestionDef, ...] = ()

    def __post_init__(self) -> None:
        if self.sample_size < 1:
            raise ConfigError("sample_size must be >= 1")
        if self.max_age_days <= 0:
            raise ConfigError("max_age_days must be positive")
        for mid, value in self.thresholds.items():
            if not 0.0 <= value <= 1.0:
                raise ConfigError(f"threshold for {mid.value} outside [0,1]: {value}")
        if self.reference_population is not None and self.reference_population < 1:
            raise ConfigError("reference_population must be positive")
        if not self.questions:
            object.__setattr__(self, "questions", _default_questions())
        for name, pattern in self.pid_patterns:
            try:
                re.compile(pattern)
            except re.error as exc:
                raise ConfigError(f"bad PID pattern {name}: {exc}")

    def threshold(self, measure: MeasureId) -> float:
        return self.thresholds.get(measure, default_threshold(measure))

    def now(self) -> datetime:
        if self.assessment_time:
            return _parse_timestamp(self.assessment_time)
        return datetime.now(timezone.utc)

    def questions_for(self, measure: MeasureId) -> list[QuestionDef]:
        return [q for q in self.questions if measure in q.measure_ids]

    def human_configured(self, measure: MeasureId) -> bool:
        return bool(self.questions_for(measure))


def _default_questions() -> tuple[QuestionDef, ...]:
    return tuple(
        QuestionDef(qid, text, tuple(MeasureId(m) for m in measures))
        for qid, text, measures in DEFAULT_QUESTIONS
    )


def _parse_timestamp(value: str) -> datetime:
    ts = datetime.fromisoformat(value.replace("Z", "+00:00"))
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts


def _parse_profile(raw: dict) -> dict[str, tuple[PropertyRule, ...]]:
    profile: dict[str, tuple[PropertyRule, ...]] = {}
    for cls, rules in raw.items():
        parsed = []
        for rule in rules:
            if isinstance(rule, str):
                parsed.append(PropertyRule(predicate=rule))
            else:
                parsed.append(
                    PropertyRule(
                        predicate=rule["predicate"],
                        required=bool(rule.get("required", True)),
                        object_valued=bool(rule.get("object_valued", False)),
                        single_valued=bool(rule.get("single_valued", False)),
                        datatype=rule.get("datatype"),
                    )
                )
        profile[cls] = tuple(parsed)
    return profile


def config_from_dict(data: dict[str, Any]) -> AssessmentConfig:
    data = dict(data or {})
    kwargs: dict[str, Any] = {}
    simple = [
        "dataset_iri",
        "reference_population",
        "max_age_days",
        "sample_size",
        "rng_seed",
        "exploration_url",
        "sparql_endpoint",
        "offline",
        "assessment_time",
    ]
    for key in simple:
        if key in data:
            kwargs[key] = data[key]
    for key in ("internal_namespaces", "stable_namespaces", "schema_namespaces"):
        if key in data:
            kwargs[key] = tuple(data[key])
    if "property_profile" in data:
        kwargs["property_profile"] = _parse_profile(data["property_profile"])
    if "reference_entities" in data and data["reference_entities"] is not None:
        kwargs["reference_entities"] = frozenset(data["reference_entities"])
    if "thresholds" in data:
        try:
            kwargs["thresholds"] = {
                MeasureId(name): float(v) for name, v in data["thresholds"].items()
            }
        except ValueError as exc:
            raise ConfigError(str(exc))
    if "pid_patterns" in data:
        kwargs["pid_patterns"] = tuple(
            (p["name"], p["pattern"]) if isinstance(p, dict) else tuple(p)
            for p in data["pid_patterns"]
        )
    if "probe" in data:
        kwargs["probe"] = ProbeConfig(**data["probe"])
    if "questions" in data:
        kwargs["questions"] = tuple(
            QuestionDef(
                q["id"], q.get("text", q["id"]), tuple(MeasureId(m) for m in q["measures"])
            )
            for q in data["questions"]
        )
    try:
        return AssessmentConfig(**kwargs)
    except TypeError as exc:
        raise ConfigError(str(exc))


def load_config(path: str | Path) -> AssessmentConfig:
    text = Path(path).read_text(encoding="utf-8")
    data = yaml.safe_load(text)
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("configuration document must be a mapping")
    return config_from_dict(data)
