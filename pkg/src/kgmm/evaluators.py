"""Automated evaluators for the graph-readable quality measures.

Each evaluator is a pure function of (graph, config, optional human score)
returning a MeasureResult. Ratio scores are computed as exact fractions and
converted to float only at the result boundary, so they compare exactly
against brute-force oracles. Evidence is emitted in canonical (sorted) order.
"""
from __future__ import annotations

import re
from datetime import datetime, timedelta, timezone
from fractions import Fraction
from typing import Optional

from . import vocab
from .catalog import MeasureId, Source, lookup
from .config import AssessmentConfig, PropertyRule
from .rdf.datatypes import XSD_DATE, XSD_DATETIME, XSD_GYEAR, is_well_formed
from .rdf.ntriples import format_triple
from .rdf.terms import BlankNode, Graph, Iri, Literal, Triple
from .results import (
    Evidence,
    EvidenceKind,
    MeasureResult,
    Status,
    assessed,
    insufficient,
    not_applicable,
)

AUTOMATED = frozenset({Source.AUTOMATED})
HUMAN = frozenset({Source.HUMAN_REVIEW})


def entities(g: Graph, cfg: AssessmentConfig) -> set[Iri]:
    """Assessable entities: IRI subjects plus rdf:type'd IRI objects,
    excluding IRIs inside the configured schema namespaces."""
    found: set[Iri] = set()
    for t in g.triples:
        if isinstance(t.subject, Iri):
            found.add(t.subject)
        if t.predicate == vocab.RDF_TYPE and isinstance(t.object, Iri):
            found.add(t.object)
    schema_ns = tuple(cfg.schema_namespaces)
    return {e for e in found if not e.value.startswith(schema_ns)}


def _sorted_entities(es: set[Iri]) -> list[Iri]:
    return sorted(es, key=lambda e: e.value)


def combine_sources(
    measure: MeasureId,
    automated: Optional[Fraction | float],
    human: Optional[float],
    threshold: float,
    *,
    automated_configured: bool = True,
    human_configured: bool = False,
    evidence: tuple[Evidence, ...] = (),
) -> MeasureResult:
    """Combine automated and human-review scores with the min rule.

    The score is the minimum over available sources. A result passes only if
    the score clears the threshold and every source the catalog lists for the
    measure that is configured for this run actually delivered a score; a
    configured-but-missing source (unmet quorum, disabled probe) yields
    Insufficient.
    """
    definition = lookup(measure)
    available: list[tuple[Source, float]] = []
    if automated is not None:
        available.append((Source.AUTOMATED, float(automated)))
    if human is not None:
        available.append((Source.HUMAN_REVIEW, float(human)))

    if not available:
        return insufficient(measure, "no evaluation source available")

    required: set[Source] = set()
    if Source.AUTOMATED in definition.sources and automated_configured:
        required.add(Source.AUTOMATED)
    if Source.HUMAN_REVIEW in definition.sources and human_configured:
        required.add(Source.HUMAN_REVIEW)
    present = {s for s, _ in available}
    score = min(v for _, v in available)

    if not required.issubset(present):
        missing = sorted(s.value for s in required - present)
        ev = evidence + (
            Evidence(EvidenceKind.REVIEW_SUMMARY, f"required source unavailable: {', '.join(missing)}"),
        )
        return MeasureResult(
            id=measure,
            score=score,
            passed=False,
            status=Status.INSUFFICIENT,
            sources_used=frozenset(present),
            evidence=ev,
        )
    return MeasureResult(
        id=measure,
        score=score,
        passed=score >= threshold,
        status=Status.ASSESSED,
        sources_used=frozenset(present),
        evidence=evidence,
    )



def _expected(
    human_expected: Optional[bool],
    cfg: AssessmentConfig,
    measure: MeasureId,
    human: Optional[float],
) -> bool:
    """Whether a human-review source counts as configured for this run.

    Explicit flag wins; otherwise a provided score implies the source was in
    play, an absent one implies it was not."""
    if human_expected is not None:
        return human_expected and cfg.human_configured(measure)
    return human is not None


# -- Level 1 ---------------------------------------------------------------


def eval_syntactic_accuracy(
    g: Graph, cfg: AssessmentConfig, human: Optional[float] = None,
    *, human_expected: Optional[bool] = None,
) -> MeasureResult:
    """Share of literals whose lexical form fits their datatype."""
    literals = [t for t in g if isinstance(t.object, Literal)]
    evidence = []
    if not literals:
        score: Fraction | int = 1
    else:
        bad = [t for t in literals if not is_well_formed(t.object)]
        for t in bad:
            evidence.append(
                Evidence(
                    EvidenceKind.OFFENDING_TRIPLE,
                    f"ill-formed literal: {format_triple(t)}",
                    subject=str(t.subject),
                )
            )
        score = Fraction(len(literals) - len(bad), len(literals))
    return combine_sources(
        MeasureId.SYNTACTIC_ACCURACY,
        score,
        human,
        cfg.threshold(MeasureId.SYNTACTIC_ACCURACY),
        human_configured=_expected(human_expected, cfg, MeasureId.SYNTACTIC_ACCURACY, human),
        evidence=tuple(evidence),
    )


def _dataset_nodes(g: Graph, cfg: AssessmentConfig) -> list:
    if cfg.dataset_iri:
        return [Iri(cfg.dataset_iri)]
    nodes = []
    for cls in vocab.DATASET_CLASSES:
        nodes.extend(t.subject for t in g.match(predicate=vocab.RDF_TYPE, obj=cls))
    if not nodes:
        # untyped dataset description: fall back to whatever carries
        # dataset-level metadata
        for pred in (*vocab.LICENSE_PREDICATES, *vocab.TIMESTAMP_PREDICATES):
            nodes.extend(t.subject for t in g.match(predicate=pred))
    return sorted(set(nodes), key=str)


def eval_license(
    g: Graph, cfg: AssessmentConfig, human: Optional[float] = None,
    *, human_expected: Optional[bool] = None,
) -> MeasureResult:
    """Machine-readable license on the dataset node: a license predicate with
    an IRI object. Literal license values are not machine-actionable."""
    nodes = _dataset_nodes(g, cfg)
    evidence: list[Evidence] = []
    score = 0
    literal_license = False
    for node in nodes:
        for pred in vocab.LICENSE_PREDICATES:
            for t in g.match(subject=node, predicate=pred):
                if isinstance(t.object, Iri):
                    score = 1
                else:
                    literal_license = True
    if score == 0:
        if literal_license:
            evidence.append(
                Evidence(EvidenceKind.OFFENDING_TRIPLE, "license must be IRI, found literal value")
            )
        else:
            evidence.append(
                Evidence(EvidenceKind.MISSING_PROPERTY, "no machine-readable license statement found")
            )
    return combine_sources(
        MeasureId.LICENSE,
        score,
        human,
        cfg.threshold(MeasureId.LICENSE),
        human_configured=_expected(human_expected, cfg, MeasureId.LICENSE, human),
        evidence=tuple(evidence),
    )


def eval_easiness(
    g: Graph, cfg: AssessmentConfig, human: Optional[float] = None,
    *, human_expected: Optional[bool] = None,
) -> MeasureResult:
    """Label-coverage proxy for ease of interpretation, combined with the
    review question. True usability needs user studies; this is the
    mechanical stand-in."""
    es = entities(g, cfg)
    if not es:
        automated: Optional[Fraction | int] = None
    else:
        labelled = {
            e
            for e in es
            for pred in vocab.LABEL_PREDICATES
            if g.match(subject=e, predicate=pred)
        }
        automated = Fraction(len(labelled), len(es))
    evidence = []
    if automated is not None and es:
        for e in _sorted_entities(es):
            if not any(g.match(subject=e, predicate=p) for p in vocab.LABEL_PREDICATES):
                evidence.append(
                    Evidence(EvidenceKind.MISSING_PROPERTY, "entity lacks a human-readable label", str(e))
                )
    return combine_sources(
        MeasureId.EASINESS,
        automated,
        human,
        cfg.threshold(MeasureId.EASINESS),
        automated_configured=automated is not None,
        human_configured=_expected(human_expected, cfg, MeasureId.EASINESS, human),
        evidence=tuple(evidence),
    )


# -- Level 2 ---------------------------------------------------------------

_TS_DATATYPES = {XSD_DATE, XSD_DATETIME, XSD_GYEAR}


def _parse_timestamp_literal(lit: Literal) -> Optional[datetime]:
    lex = lit.lexical.strip()
    for fmt in ("%Y-%m-%dT%H:%M:%S%z", "%Y-%m-%dT%H:%M:%S", "%Y-%m-%d%z", "%Y-%m-%d", "%Y"):
        try:
            ts = datetime.strptime(lex.replace("Z", "+0000"), fmt)
            if ts.tzinfo is None:
                ts = ts.replace(tzinfo=timezone.utc)
            return ts
        except ValueError:
            continue
    try:
        ts = datetime.fromisoformat(lex.replace("Z", "+00:00"))
        return ts if ts.tzinfo else ts.replace(tzinfo=timezone.utc)
    except ValueError:
        return None


def eval_timeliness(
    g: Graph, cfg: AssessmentConfig, now: Optional[datetime] = None, human: Optional[float] = None,
    *, human_expected: Optional[bool] = None,
) -> MeasureResult:
    """Most recent modification/issue timestamp must be younger than the
    configured maximum age."""
    now = now or cfg.now()
    stamps: list[datetime] = []
    for pred in vocab.TIMESTAMP_PREDICATES:
        for t in g.match(predicate=pred):
            if isinstance(t.object, Literal):
                ts = _parse_timestamp_literal(t.object)
                if ts is not None:
                    stamps.append(ts)
    if not stamps:
        return insufficient(MeasureId.TIMELINESS, "no modification timestamp found")
    newest = max(stamps)
    age = now - newest
    fresh = age <= timedelta(days=cfg.max_age_days)
    evidence = (
        Evidence(
            EvidenceKind.PROBE_OUTCOME,
            f"most recent timestamp {newest.isoformat()}, age {age.days} days"
            f" (limit {cfg.max_age_days:g})",
        ),
    )
    return combine_sources(
        MeasureId.TIMELINESS,
        1 if fresh else 0,
        human,
        cfg.threshold(MeasureId.TIMELINESS),
        human_configured=_expected(human_expected, cfg, MeasureId.TIMELINESS, human),
        evidence=evidence,
    )


def _profiled_rules(cfg: AssessmentConfig) -> dict[str, PropertyRule]:
    rules: dict[str, PropertyRule] = {}
    for class_rules in cfg.property_profile.values():
        for rule in class_rules:
            rules[rule.predicate] = rule
    return rules


def eval_correctness(
    g: Graph, cfg: AssessmentConfig, human: Optional[float] = None,
    *, human_expected: Optional[bool] = None,
) -> MeasureResult:
    """Validity restrictions over profiled predicates: object-valued
    predicates must not carry literals; literal values must be well-formed."""
    rules = _profiled_rules(cfg)
    checked = 0
    violations: list[Triple] = []
    for t in g:
        rule = rules.get(t.predicate.value)
        if rule is None:
            continue
        checked += 1
        if rule.object_valued and isinstance(t.object, Literal):
            violations.append(t)
        elif isinstance(t.object, Literal) and not is_well_formed(t.object):
            violations.append(t)
    automated = Fraction(checked - len(violations), checked) if checked else Fraction(1)
    evidence = tuple(
        Evidence(
            EvidenceKind.OFFENDING_TRIPLE,
            f"restriction violation: {format_triple(t)}",
            subject=str(t.subject),
        )
        for t in violations
    )
    return combine_sources(
        MeasureId.CORRECTNESS,
        automated,
        human,
        cfg.threshold(MeasureId.CORRECTNESS),
        human_configured=_expected(human_expected, cfg, MeasureId.CORRECTNESS, human),
        evidence=evidence,
    )


def eval_semantic_accuracy(
    g: Graph, cfg: AssessmentConfig, human: Optional[float] = None,
    *, human_expected: Optional[bool] = None,
) -> MeasureResult:
    """Conflicting values on declared single-valued predicates, as a proxy
    for real-world accuracy."""
    single = [r.predicate for r in _profiled_rules(cfg).values() if r.single_valued]
    automated: Optional[Fraction] = None
    evidence: list[Evidence] = []
    if single:
        checked: set = set()
        conflicted: set = set()
        for pred in single:
            values: dict = {}
            for t in g.match(predicate=Iri(pred)):
                values.setdefault(t.subject, set()).add(t.object)
            for subj, objs in values.items():
                checked.add(subj)
                if len(objs) > 1:
                    conflicted.add(subj)
        if checked:
            automated = Fraction(len(checked) - len(conflicted), len(checked))
            for subj in sorted(conflicted, key=str):
                evidence.append(
                    Evidence(
                        EvidenceKind.OFFENDING_TRIPLE,
                        "conflicting values on single-valued predicate",
                        str(subj),
                    )
                )
    if automated is None and human is None:
        return insufficient(
            MeasureId.SEMANTIC_ACCURACY, "no single-valued predicates configured and no reviews"
        )
    return combine_sources(
        MeasureId.SEMANTIC_ACCURACY,
        automated,
        human,
        cfg.threshold(MeasureId.SEMANTIC_ACCURACY),
        automated_configured=automated is not None,
        human_configured=_expected(human_expected, cfg, MeasureId.SEMANTIC_ACCURACY, human),
        evidence=tuple(evidence),
    )


def eval_trustworthiness(
    cfg: AssessmentConfig, human: Optional[float] = None
) -> MeasureResult:
    """Human-review-only measure: agreement ratio once quorum is met."""
    if human is None:
        return insufficient(MeasureId.TRUSTWORTHINESS, "review quorum not met")
    return assessed(
        MeasureId.TRUSTWORTHINESS,
        human,
        cfg.threshold(MeasureId.TRUSTWORTHINESS),
        HUMAN,
        (Evidence(EvidenceKind.REVIEW_SUMMARY, f"reviewer agreement {human:.3f}"),),
    )


def eval_instance_completeness(
    g: Graph, cfg: AssessmentConfig, human: Optional[float] = None,
    *, human_expected: Optional[bool] = None,
) -> MeasureResult:
    """Coverage of the configured reference entity set."""
    automated: Optional[Fraction] = None
    evidence: list[Evidence] = []
    if cfg.reference_entities is not None and len(cfg.reference_entities) > 0:
        present = {e.value for e in entities(g, cfg)}
        hit = cfg.reference_entities & present
        automated = Fraction(len(hit), len(cfg.reference_entities))
        for missing in sorted(cfg.reference_entities - present):
            evidence.append(
                Evidence(EvidenceKind.MISSING_PROPERTY, "reference entity absent from graph", missing)
            )
    if automated is None and human is None:
        return insufficient(
            MeasureId.INSTANCE_COMPLETENESS, "no reference entity set and no reviews"
        )
    return combine_sources(
        MeasureId.INSTANCE_COMPLETENESS,
        automated,
        human,
        cfg.threshold(MeasureId.INSTANCE_COMPLETENESS),
        automated_configured=automated is not None,
        human_configured=_expected(human_expected, cfg, MeasureId.INSTANCE_COMPLETENESS, human),
        evidence=tuple(evidence),
    )


def eval_property_completeness(
    g: Graph, cfg: AssessmentConfig, human: Optional[float] = None,
    *, human_expected: Optional[bool] = None,
) -> MeasureResult:
    """Filled (instance, required-predicate) slots over profiled classes."""
    if not cfg.property_profile:
        return not_applicable(MeasureId.PROPERTY_COMPLETENESS, "no property profile configured")
    slots = 0
    filled = 0
    evidence: list[Evidence] = []
    for cls, rules in sorted(cfg.property_profile.items()):
        required = [r for r in rules if r.required]
        if not required:
            continue
        instances = sorted(
            {t.subject for t in g.match(predicate=vocab.RDF_TYPE, obj=Iri(cls))}, key=str
        )
        for inst in instances:
            for rule in required:
                slots += 1
                if g.match(subject=inst, predicate=Iri(rule.predicate)):
                    filled += 1
                else:
                    evidence.append(
                        Evidence(
                            EvidenceKind.MISSING_PROPERTY,
                            f"missing value for {rule.predicate}",
                            str(inst),
                        )
                    )
    if slots == 0:
        return not_applicable(
            MeasureId.PROPERTY_COMPLETENESS, "no instances of profiled classes in graph"
        )
    score = Fraction(filled, slots)
    return combine_sources(
        MeasureId.PROPERTY_COMPLETENESS,
        score,
        human,
        cfg.threshold(MeasureId.PROPERTY_COMPLETENESS),
        human_configured=_expected(human_expected, cfg, MeasureId.PROPERTY_COMPLETENESS, human),
        evidence=tuple(evidence),
    )


def eval_population_completeness(g: Graph, cfg: AssessmentConfig) -> MeasureResult:
    """Entity count against the reference population, clamped at 1."""
    if cfg.reference_population is None:
        return not_applicable(
            MeasureId.POPULATION_COMPLETENESS, "no reference population configured"
        )
    count = len(entities(g, cfg))
    score = min(Fraction(1), Fraction(count, cfg.reference_population))
    evidence = (
        Evidence(
            EvidenceKind.REVIEW_SUMMARY,
            f"{count} entities vs reference population {cfg.reference_population}",
        ),
    )
    return assessed(
        MeasureId.POPULATION_COMPLETENESS,
        score,
        cfg.threshold(MeasureId.POPULATION_COMPLETENESS),
        AUTOMATED,
        evidence,
    )


def eval_provenance(
    g: Graph, cfg: AssessmentConfig, human: Optional[float] = None,
    *, human_expected: Optional[bool] = None,
) -> MeasureResult:
    """Entities carrying creator/created/attribution statements."""
    es = entities(g, cfg)
    if not es:
        return not_applicable(MeasureId.PROVENANCE, "graph has no assessable entities")
    covered = {
        e
        for e in es
        for pred in vocab.PROVENANCE_PREDICATES
        if g.match(subject=e, predicate=pred)
    }
    evidence = tuple(
        Evidence(EvidenceKind.MISSING_PROPERTY, "entity lacks provenance statements", str(e))
        for e in _sorted_entities(es - covered)
    )
    return combine_sources(
        MeasureId.PROVENANCE,
        Fraction(len(covered), len(es)),
        human,
        cfg.threshold(MeasureId.PROVENANCE),
        human_configured=_expected(human_expected, cfg, MeasureId.PROVENANCE, human),
        evidence=evidence,
    )


# -- Level 3 ---------------------------------------------------------------


def eval_reusability(g: Graph, cfg: AssessmentConfig) -> MeasureResult:
    """Mean of three booleans: license, dataset-level provenance, and reuse
    of vocabularies beyond the graph's own and the core RDF ones."""
    license_ok = eval_license(g, cfg).score >= 1.0
    nodes = _dataset_nodes(g, cfg)
    prov_ok = any(
        g.match(subject=n, predicate=vocab.DCTERMS_CREATOR)
        and g.match(subject=n, predicate=vocab.DCTERMS_CREATED)
        for n in nodes
    )
    core = (vocab.RDF_NS, vocab.RDFS, vocab.OWL)
    internal = tuple(cfg.internal_namespaces)
    vocab_ok = any(
        not p.value.startswith(core) and not (internal and p.value.startswith(internal))
        for p in g.predicates()
    )
    checklist = [
        ("machine-readable license", license_ok),
        ("dataset-level provenance (creator and created)", prov_ok),
        ("external vocabulary reuse", vocab_ok),
    ]
    evidence = tuple(
        Evidence(EvidenceKind.MISSING_PROPERTY, f"reusability criterion unmet: {name}")
        for name, ok in checklist
        if not ok
    )
    score = Fraction(sum(ok for _, ok in checklist), 3)
    return assessed(
        MeasureId.REUSABILITY, score, cfg.threshold(MeasureId.REUSABILITY), AUTOMATED, evidence
    )


def _normalize_label(text: str) -> str:
    return re.sub(r"\s+", " ", text.casefold()).strip()


def eval_conciseness(
    g: Graph, cfg: AssessmentConfig, human: Optional[float] = None,
    *, human_expected: Optional[bool] = None,
) -> MeasureResult:
    """Extensional and intensional duplicate detection; clusters fully
    connected by owl:sameAs are flagged synonyms and not penalized."""
    es = entities(g, cfg)
    evidence: list[Evidence] = []

    # extensional: same normalized label set + same type set
    clusters: dict[tuple, list[Iri]] = {}
    for e in es:
        labels = frozenset(
            _normalize_label(t.object.lexical)
            for t in g.match(subject=e, predicate=vocab.RDFS_LABEL)
            if isinstance(t.object, Literal)
        )
        if not labels:
            continue
        types = frozenset(
            t.object for t in g.match(subject=e, predicate=vocab.RDF_TYPE)
        )
        clusters.setdefault((labels, types), []).append(e)

    def same_as(a: Iri, b: Iri) -> bool:
        return bool(
            g.match(subject=a, predicate=vocab.OWL_SAMEAS, obj=b)
            or g.match(subject=b, predicate=vocab.OWL_SAMEAS, obj=a)
        )

    redundant = 0
    for key in sorted(clusters, key=str):
        members = sorted(clusters[key], key=str)
        if len(members) < 2:
            continue
        flagged = all(
            same_as(members[i], members[j])
            for i in range(len(members))
            for j in range(i + 1, len(members))
        )
        if flagged:
            continue
        redundant += len(members) - 1
        evidence.append(
            Evidence(
                EvidenceKind.DUPLICATE_CLUSTER,
                "entities share label and types without owl:sameAs: "
                + ", ".join(str(m) for m in members),
            )
        )
    extensional = Fraction(1) if not es else 1 - Fraction(redundant, len(es))

    # intensional: duplicate-labeled schema terms defined in-graph
    schema_terms = sorted(
        {
            t.subject
            for cls in vocab.SCHEMA_TERM_CLASSES
            for t in g.match(predicate=vocab.RDF_TYPE, obj=cls)
        },
        key=str,
    )
    if schema_terms:
        by_label: dict[str, list] = {}
        for term in schema_terms:
            for t in g.match(subject=term, predicate=vocab.RDFS_LABEL):
                if isinstance(t.object, Literal):
                    by_label.setdefault(_normalize_label(t.object.lexical), []).append(term)
        dup_terms: set = set()
        for label, terms in sorted(by_label.items()):
            uniq = sorted(set(terms), key=str)
            if len(uniq) > 1:
                dup_terms.update(uniq[1:])
                evidence.append(
                    Evidence(
                        EvidenceKind.DUPLICATE_CLUSTER,
                        f"schema terms share label {label!r}: " + ", ".join(str(u) for u in uniq),
                    )
                )
        intensional = 1 - Fraction(len(dup_terms), len(schema_terms))
    else:
        intensional = Fraction(1)

    score = min(extensional, intensional)
    return combine_sources(
        MeasureId.CONCISENESS,
        score,
        human,
        cfg.threshold(MeasureId.CONCISENESS),
        human_configured=_expected(human_expected, cfg, MeasureId.CONCISENESS, human),
        evidence=tuple(evidence),
    )


def eval_data_representation(
    g: Graph, cfg: AssessmentConfig, human: Optional[float] = None,
    *, human_expected: Optional[bool] = None,
) -> MeasureResult:
    """Per-predicate datatype homogeneity: share of literal values using the
    predicate's dominant datatype, averaged over literal-valued predicates."""
    per_pred: dict[Iri, dict[str, int]] = {}
    for t in g:
        if isinstance(t.object, Literal):
            key = t.object.datatype.value
            per_pred.setdefault(t.predicate, {}).setdefault(key, 0)
            per_pred[t.predicate][key] += 1
    evidence: list[Evidence] = []
    if per_pred:
        total = Fraction(0)
        for pred in sorted(per_pred, key=str):
            hist = per_pred[pred]
            count = sum(hist.values())
            dominant = max(hist.values())
            total += Fraction(dominant, count)
            if dominant < count:
                evidence.append(
                    Evidence(
                        EvidenceKind.OFFENDING_TRIPLE,
                        f"mixed datatypes on predicate {pred}: "
                        + ", ".join(f"{k}={v}" for k, v in sorted(hist.items())),
                    )
                )
        automated: Optional[Fraction] = total / len(per_pred)
    else:
        automated = Fraction(1)
    return combine_sources(
        MeasureId.DATA_REPRESENTATION,
        automated,
        human,
        cfg.threshold(MeasureId.DATA_REPRESENTATION),
        human_configured=_expected(human_expected, cfg, MeasureId.DATA_REPRESENTATION, human),
        evidence=tuple(evidence),
    )


# -- Level 4 ---------------------------------------------------------------


def eval_trackability(g: Graph, cfg: AssessmentConfig) -> MeasureResult:
    """Entities carrying statement-source links (origin, not authorship)."""
    es = entities(g, cfg)
    if not es:
        return not_applicable(MeasureId.TRACKABILITY, "graph has no assessable entities")
    tracked = {
        e
        for e in es
        for pred in vocab.TRACKING_PREDICATES
        if g.match(subject=e, predicate=pred)
    }
    evidence = tuple(
        Evidence(EvidenceKind.MISSING_PROPERTY, "entity lacks a source link", str(e))
        for e in _sorted_entities(es - tracked)
    )
    return assessed(
        MeasureId.TRACKABILITY,
        Fraction(len(tracked), len(es)),
        cfg.threshold(MeasureId.TRACKABILITY),
        AUTOMATED,
        evidence,
    )


def eval_identifier_stability(g: Graph, cfg: AssessmentConfig) -> MeasureResult:
    """Entities on PID schemes or stable namespaces; blank-node subjects
    dilute the denominator only."""
    es = entities(g, cfg)
    blanks = {s for s in g.subjects() if isinstance(s, BlankNode)}
    denominator = len(es) + len(blanks)
    if denominator == 0:
        return not_applicable(MeasureId.IDENTIFIER_STABILITY, "graph has no subjects to assess")
    patterns = [(name, re.compile(p)) for name, p in cfg.pid_patterns]
    stable_ns = tuple(cfg.stable_namespaces)

    def is_stable(e: Iri) -> bool:
        if stable_ns and e.value.startswith(stable_ns):
            return True
        return any(p.search(e.value) for _, p in patterns)

    stable = {e for e in es if is_stable(e)}
    evidence = tuple(
        Evidence(EvidenceKind.MISSING_PROPERTY, "identifier matches no PID scheme", str(e))
        for e in _sorted_entities(es - stable)
    )
    if blanks:
        evidence += (
            Evidence(
                EvidenceKind.MISSING_PROPERTY,
                f"{len(blanks)} blank-node subject(s) have no stable identifier",
            ),
        )
    return assessed(
        MeasureId.IDENTIFIER_STABILITY,
        Fraction(len(stable), denominator),
        cfg.threshold(MeasureId.IDENTIFIER_STABILITY),
        AUTOMATED,
        evidence,
    )


# -- Level 5 ---------------------------------------------------------------


def eval_linkability(
    g: Graph, cfg: AssessmentConfig, human: Optional[float] = None,
    *, human_expected: Optional[bool] = None,
) -> MeasureResult:
    """Entities linking to IRIs outside the internal (and core schema)
    namespaces."""
    es = entities(g, cfg)
    if not es:
        return not_applicable(MeasureId.LINKABILITY, "graph has no assessable entities")
    internal = tuple(cfg.internal_namespaces)
    schema_ns = tuple(cfg.schema_namespaces)

    def external(o) -> bool:
        if not isinstance(o, Iri):
            return False
        if internal and o.value.startswith(internal):
            return False
        return not o.value.startswith(schema_ns)

    linked = {e for e in es if any(external(t.object) for t in g.match(subject=e))}
    evidence = tuple(
        Evidence(EvidenceKind.MISSING_PROPERTY, "entity has no external links", str(e))
        for e in _sorted_entities(es - linked)
    )
    return combine_sources(
        MeasureId.LINKABILITY,
        Fraction(len(linked), len(es)),
        human,
        cfg.threshold(MeasureId.LINKABILITY),
        human_configured=_expected(human_expected, cfg, MeasureId.LINKABILITY, human),
        evidence=evidence,
    )
