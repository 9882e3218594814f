"""The KGMM measure catalog.

Twenty quality measures across seven dimensions and five maturity levels,
each with a priority (Essential/Important/Useful), human/machine curation
relevance tags, and the evaluation sources the engine feeds it from.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import FrozenSet


class MeasureId(enum.Enum):
    SYNTACTIC_ACCURACY = "SyntacticAccuracy"
    TIMELINESS = "Timeliness"
    CORRECTNESS = "Correctness"
    SEMANTIC_ACCURACY = "SemanticAccuracy"
    TRUSTWORTHINESS = "Trustworthiness"
    INSTANCE_COMPLETENESS = "InstanceCompleteness"
    PROPERTY_COMPLETENESS = "PropertyCompleteness"
    POPULATION_COMPLETENESS = "PopulationCompleteness"
    LINKABILITY = "Linkability"
    IDENTIFIER_STABILITY = "IdentifierStability"
    RESPONSIVENESS = "Responsiveness"
    EASINESS = "Easiness"
    QUERYABILITY = "Queryability"
    DEREFERENCABILITY = "Dereferencability"
    PROVENANCE = "Provenance"
    DATA_REPRESENTATION = "DataRepresentation"
    TRACKABILITY = "Trackability"
    LICENSE = "License"
    REUSABILITY = "Reusability"
    CONCISENESS = "Conciseness"


class Dimension(enum.Enum):
    ACCURACY = "Accuracy"
    COMPLETENESS = "Completeness"
    FINDABILITY = "Findability"
    ACCESSIBILITY = "Accessibility"
    INTEROPERABILITY = "Interoperability"
    REUSABILITY = "Reusability"
    SUCCINCTNESS = "Succinctness"


class Priority(enum.IntEnum):
    # Higher value = higher priority; gives the total order Essential > Important > Useful.
    USEFUL = 1
    IMPORTANT = 2
    ESSENTIAL = 3

    @property
    def label(self) -> str:
        return self.name.capitalize()

    @property
    def stars(self) -> str:
        return "*" * {Priority.ESSENTIAL: 3, Priority.IMPORTANT: 2, Priority.USEFUL: 1}[self]


class Curation(enum.Enum):
    HUMAN = "H"
    MACHINE = "M"


class Source(enum.Enum):
    AUTOMATED = "Automated"
    HUMAN_REVIEW = "HumanReview"


LEVEL_NAMES = {
    1: "Published",
    2: "Completeness",
    3: "Representation",
    4: "Stability",
    5: "Linkability",
}

_H = frozenset({Curation.HUMAN})
_M = frozenset({Curation.MACHINE})
_HM = frozenset({Curation.HUMAN, Curation.MACHINE})
_A = frozenset({Source.AUTOMATED})
_R = frozenset({Source.HUMAN_REVIEW})
_AR = frozenset({Source.AUTOMATED, Source.HUMAN_REVIEW})


@dataclass(frozen=True)
class MeasureDefinition:
    id: MeasureId
    dimension: Dimension
    level: int
    priority: Priority
    modes: FrozenSet[Curation]
    description: str
    sources: FrozenSet[Source]


_CATALOG: tuple[MeasureDefinition, ...] = (
    # Level 1: Published
    MeasureDefinition(
        MeasureId.RESPONSIVENESS, Dimension.ACCESSIBILITY, 1, Priority.ESSENTIAL, _HM,
        "The exploration interface answers within the configured loading-time budget.",
        _AR,
    ),
    MeasureDefinition(
        MeasureId.LICENSE, Dimension.REUSABILITY, 1, Priority.ESSENTIAL, _HM,
        "An open license is attached to the dataset in machine-readable form.",
        _AR,
    ),
    MeasureDefinition(
        MeasureId.SYNTACTIC_ACCURACY, Dimension.ACCURACY, 1, Priority.IMPORTANT, _HM,
        "Literal values conform to the lexical rules of their datatypes.",
        _AR,
    ),
    MeasureDefinition(
        MeasureId.EASINESS, Dimension.ACCESSIBILITY, 1, Priority.IMPORTANT, _H,
        "The graph is easy to interpret; entities carry human-readable labels.",
        _AR,
    ),
    # Level 2: Completeness
    MeasureDefinition(
        MeasureId.TIMELINESS, Dimension.ACCURACY, 2, Priority.ESSENTIAL, _H,
        "The data carries a recent modification timestamp.",
        _AR,
    ),
    MeasureDefinition(
        MeasureId.CORRECTNESS, Dimension.ACCURACY, 2, Priority.ESSENTIAL, _HM,
        "Statements satisfy the validity restrictions declared for their predicates.",
        _AR,
    ),
    MeasureDefinition(
        MeasureId.TRUSTWORTHINESS, Dimension.COMPLETENESS, 2, Priority.ESSENTIAL, _H,
        "Reviewers consider the data correct, verifiable and believable.",
        _R,
    ),
    MeasureDefinition(
        MeasureId.PROVENANCE, Dimension.INTEROPERABILITY, 2, Priority.ESSENTIAL, _H,
        "Entities record who created them and when.",
        _AR,
    ),
    MeasureDefinition(
        MeasureId.SEMANTIC_ACCURACY, Dimension.ACCURACY, 2, Priority.IMPORTANT, _HM,
        "Values represent real-world facts; single-valued properties hold one value.",
        _AR,
    ),
    MeasureDefinition(
        MeasureId.INSTANCE_COMPLETENESS, Dimension.COMPLETENESS, 2, Priority.IMPORTANT, _HM,
        "All real-world objects required for the task are present.",
        _AR,
    ),
    MeasureDefinition(
        MeasureId.PROPERTY_COMPLETENESS, Dimension.COMPLETENESS, 2, Priority.IMPORTANT, _HM,
        "Required property values are filled for the profiled classes.",
        _AR,
    ),
    MeasureDefinition(
        MeasureId.POPULATION_COMPLETENESS, Dimension.COMPLETENESS, 2, Priority.IMPORTANT, _M,
        "The entity count covers the reference population.",
        _A,
    ),
    # Level 3: Representation
    MeasureDefinition(
        MeasureId.REUSABILITY, Dimension.REUSABILITY, 3, Priority.ESSENTIAL, _M,
        "License, dataset-level provenance and shared vocabularies support reuse.",
        _A,
    ),
    MeasureDefinition(
        MeasureId.CONCISENESS, Dimension.SUCCINCTNESS, 3, Priority.ESSENTIAL, _HM,
        "No duplicated entities or redundant schema terms; synonyms are flagged.",
        _AR,
    ),
    MeasureDefinition(
        MeasureId.DATA_REPRESENTATION, Dimension.INTEROPERABILITY, 3, Priority.USEFUL, _H,
        "Values of a property are displayed consistently in one format.",
        _AR,
    ),
    # Level 4: Stability
    MeasureDefinition(
        MeasureId.TRACKABILITY, Dimension.INTEROPERABILITY, 4, Priority.ESSENTIAL, _HM,
        "Entities link back to the sources the data originates from.",
        _AR,
    ),
    MeasureDefinition(
        MeasureId.IDENTIFIER_STABILITY, Dimension.FINDABILITY, 4, Priority.IMPORTANT, _M,
        "Entities use globally unique, persistent identifiers.",
        _A,
    ),
    MeasureDefinition(
        MeasureId.QUERYABILITY, Dimension.ACCESSIBILITY, 4, Priority.IMPORTANT, _HM,
        "A query endpoint makes the data retrievable.",
        _AR,
    ),
    # Level 5: Linkability
    MeasureDefinition(
        MeasureId.DEREFERENCABILITY, Dimension.ACCESSIBILITY, 5, Priority.USEFUL, _M,
        "Entity IRIs resolve to RDF documents with HTTP status 200.",
        _A,
    ),
    MeasureDefinition(
        MeasureId.LINKABILITY, Dimension.COMPLETENESS, 5, Priority.USEFUL, _HM,
        "Instances connect to resources outside the graph's own namespaces.",
        _AR,
    ),
)

_BY_ID = {d.id: d for d in _CATALOG}


def catalog() -> list[MeasureDefinition]:
    """All 20 measure definitions in level order."""
    return list(_CATALOG)


def lookup(measure: MeasureId) -> MeasureDefinition:
    return _BY_ID[measure]


def measures_for_level(level: int) -> list[MeasureDefinition]:
    return [d for d in _CATALOG if d.level == level]
