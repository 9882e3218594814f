"""Level aggregation: the pass-or-fail rule and the maturity report.

A level passes when every Essential measure passes and at least half of the
Important measures pass; Useful measures never block. Levels are cumulative
by default: the achieved level is the longest unbroken run from level 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional

from .catalog import LEVEL_NAMES, MeasureDefinition, MeasureId, Priority, measures_for_level
from .results import MeasureResult, Status


class MissingResultError(ValueError):
    def __init__(self, measure: MeasureId) -> None:
        super().__init__(f"no result for measure {measure.value}")
        self.measure = measure


@dataclass(frozen=True)
class MaturityPolicy:
    important_fraction: float = 0.5
    cumulative: bool = True
    strict_level5: bool = False
    treat_insufficient_as_fail: bool = True
    exclude_not_applicable: bool = True


@dataclass(frozen=True)
class LevelStatus:
    level: int
    name: str
    passed: bool
    essential: tuple[tuple[MeasureId, bool], ...]
    important: tuple[tuple[MeasureId, bool], ...]
    useful: tuple[tuple[MeasureId, bool], ...]
    blocking: tuple[MeasureId, ...]
    not_applicable: tuple[MeasureId, ...]

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "name": self.name,
            "passed": self.passed,
            "essential": [(m.value, ok) for m, ok in self.essential],
            "important": [(m.value, ok) for m, ok in self.important],
            "useful": [(m.value, ok) for m, ok in self.useful],
            "blocking": [m.value for m in self.blocking],
            "not_applicable": [m.value for m in self.not_applicable],
        }


# Concrete next steps for every measure, surfaced for blocking ones.
GUIDANCE: dict[MeasureId, str] = {
    MeasureId.SYNTACTIC_ACCURACY: "Fix literal values that violate their datatype's lexical rules, or correct the declared datatypes.",
    MeasureId.TIMELINESS: "Add or refresh a dcterms:modified timestamp on the dataset so consumers can see it is current.",
    MeasureId.CORRECTNESS: "Resolve the restriction violations listed in the evidence (wrong value kinds or ill-typed literals).",
    MeasureId.SEMANTIC_ACCURACY: "Reconcile conflicting values on single-valued properties and re-check disputed facts.",
    MeasureId.TRUSTWORTHINESS: "Collect more peer reviews; address reviewer concerns about verifiability.",
    MeasureId.INSTANCE_COMPLETENESS: "Add the missing reference entities listed in the evidence.",
    MeasureId.PROPERTY_COMPLETENESS: "Fill the missing property values for the profiled classes.",
    MeasureId.POPULATION_COMPLETENESS: "Add entities until the graph covers the reference population.",
    MeasureId.LINKABILITY: "Link instances to external resources (owl:sameAs, rdfs:seeAlso, skos:exactMatch).",
    MeasureId.IDENTIFIER_STABILITY: "Mint persistent identifiers (DOI, ORCID, W3ID) or move entities to a stable namespace; avoid blank nodes as subjects.",
    MeasureId.RESPONSIVENESS: "Speed up the exploration interface so pages load within the configured budget.",
    MeasureId.EASINESS: "Add human-readable labels and descriptions to entities; simplify navigation.",
    MeasureId.QUERYABILITY: "Provide a SPARQL or equivalent query endpoint and keep it reachable.",
    MeasureId.DEREFERENCABILITY: "Serve RDF with HTTP 200 when entity IRIs are dereferenced with content negotiation.",
    MeasureId.PROVENANCE: "Record creator and creation date on entities (dcterms:creator, dcterms:created).",
    MeasureId.DATA_REPRESENTATION: "Normalize each property's values to one consistent datatype and format.",
    MeasureId.TRACKABILITY: "Add source links (dcterms:source, prov:wasDerivedFrom) stating where the data originates.",
    MeasureId.LICENSE: "Add a machine-readable license triple (dcterms:license with an IRI object) to the dataset description.",
    MeasureId.REUSABILITY: "Provide license, dataset-level provenance, and reuse shared vocabularies.",
    MeasureId.CONCISENESS: "Merge duplicate entities or flag intended synonyms with owl:sameAs; remove redundant schema terms.",
}


def _result_passes(r: MeasureResult, policy: MaturityPolicy) -> bool:
    if r.status is Status.INSUFFICIENT:
        return not policy.treat_insufficient_as_fail
    return r.passed


def level_pass(
    level: int,
    results: Mapping[MeasureId, MeasureResult],
    policy: MaturityPolicy = MaturityPolicy(),
    definitions: Optional[Iterable[MeasureDefinition]] = None,
) -> LevelStatus:
    """Apply the pass-or-fail rule to one level's results.

    ``definitions`` defaults to the catalog's assignment for the level; tests
    pass reduced mock catalogs through it.
    """
    defs = list(definitions) if definitions is not None else measures_for_level(level)
    by_priority: dict[Priority, list[tuple[MeasureId, bool]]] = {
        Priority.ESSENTIAL: [],
        Priority.IMPORTANT: [],
        Priority.USEFUL: [],
    }
    not_applicable: list[MeasureId] = []
    for d in defs:
        r = results.get(d.id)
        if r is None:
            raise MissingResultError(d.id)
        if policy.exclude_not_applicable and r.status is Status.NOT_APPLICABLE:
            not_applicable.append(d.id)
            continue
        by_priority[d.priority].append((d.id, _result_passes(r, policy)))

    essential = by_priority[Priority.ESSENTIAL]
    important = by_priority[Priority.IMPORTANT]
    useful = by_priority[Priority.USEFUL]

    essential_ok = all(ok for _, ok in essential)
    if important:
        important_ratio = Fraction(sum(ok for _, ok in important), len(important))
        important_ok = important_ratio >= Fraction(policy.important_fraction).limit_denominator(1000)
    else:
        important_ok = True

    passed = essential_ok and important_ok
    blocking = [m for m, ok in essential if not ok]
    if not important_ok:
        blocking.extend(m for m, ok in important if not ok)

    if passed and policy.strict_level5 and level == 5:
        useful_pass = any(ok for _, ok in useful)
        if useful and not useful_pass:
            passed = False
            blocking.extend(m for m, ok in useful if not ok)

    return LevelStatus(
        level=level,
        name=LEVEL_NAMES.get(level, f"Level {level}"),
        passed=passed,
        essential=tuple(essential),
        important=tuple(important),
        useful=tuple(useful),
        blocking=tuple(blocking),
        not_applicable=tuple(not_applicable),
    )


def achieved_level(
    results: Mapping[MeasureId, MeasureResult],
    policy: MaturityPolicy = MaturityPolicy(),
    level_definitions: Optional[Mapping[int, list[MeasureDefinition]]] = None,
) -> tuple[int, list[LevelStatus]]:
    """Largest N such that levels 1..N all pass (cumulative policy), with the
    per-level statuses for the report."""
    levels = sorted(level_definitions) if level_definitions else [1, 2, 3, 4, 5]
    statuses = [
        level_pass(
            lvl,
            results,
            policy,
            level_definitions[lvl] if level_definitions else None,
        )
        for lvl in levels
    ]
    achieved = 0
    if policy.cumulative:
        for status in statuses:
            if not status.passed:
                break
            achieved = status.level
    else:
        passing = [s.level for s in statuses if s.passed]
        achieved = max(passing) if passing else 0
    return achieved, statuses


def maturity_report(
    target: str,
    results: Mapping[MeasureId, MeasureResult],
    policy: MaturityPolicy = MaturityPolicy(),
    review_count: int = 0,
    reviews_required: int = 0,
    recommended_links: Optional[list[dict]] = None,
) -> dict:
    """The full per-target report: level, blockers, next steps, review tally."""
    achieved, statuses = achieved_level(results, policy)
    actions = []
    seen: set[MeasureId] = set()
    for status in statuses:
        for measure in status.blocking:
            if measure in seen:
                continue
            seen.add(measure)
            result = results[measure]
            excerpt = result.evidence[0].message if result.evidence else ""
            actions.append(
                {
                    "measure": measure.value,
                    "level": status.level,
                    "guidance": GUIDANCE.get(measure, "Improve this measure."),
                    "evidence": excerpt,
                }
            )
    return {
        "target": target,
        "achieved_level": achieved,
        "levels": [s.to_dict() for s in statuses],
        "measures": {m.value: results[m].to_dict() for m in sorted(results, key=lambda m: m.value)},
        "recommended_actions": actions,
        "reviews": {"count": review_count, "required": reviews_required},
        "recommended_links": recommended_links or [],
    }
