"""End-to-end assessment orchestration.

Loads a graph, runs the probes the configuration enables, evaluates all 20
measures with the current review signal, and assembles the maturity report.
Pure given (graph, config, transport, reviews): the same inputs always yield
the same report.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import evaluators, probes
from .catalog import MeasureId
from .config import AssessmentConfig
from .maturity import MaturityPolicy, maturity_report
from .rdf.terms import Graph
from .results import (
    Evidence,
    EvidenceKind,
    MeasureResult,
    assessed,
    insufficient,
    not_applicable,
)
from .review import HumanSignal

AUTOMATED = frozenset({evaluators.Source.AUTOMATED})


@dataclass
class AssessmentOutcome:
    results: dict[MeasureId, MeasureResult]
    report: dict
    probe_log: list


def _probe_results(
    g: Graph, cfg: AssessmentConfig, transport: Optional[probes.Transport]
) -> tuple[dict[MeasureId, MeasureResult], list]:
    out: dict[MeasureId, MeasureResult] = {}
    log: list = []
    offline = cfg.offline or transport is None

    # Responsiveness
    if offline or not cfg.exploration_url:
        out[MeasureId.RESPONSIVENESS] = insufficient(
            MeasureId.RESPONSIVENESS, "no exploration URL probed (offline or unconfigured)"
        )
    else:
        result, ok = probes.probe_responsiveness(cfg.exploration_url, cfg.probe, transport)
        log.append(result)
        evidence = (
            Evidence(
                EvidenceKind.PROBE_OUTCOME,
                f"GET {cfg.exploration_url} -> status {result.status}, "
                f"{result.elapsed:.3f}s (limit {cfg.probe.responsiveness_limit:g}s)"
                + (f", error: {result.error}" if result.error else ""),
            ),
        )
        out[MeasureId.RESPONSIVENESS] = assessed(
            MeasureId.RESPONSIVENESS,
            1 if ok else 0,
            cfg.threshold(MeasureId.RESPONSIVENESS),
            AUTOMATED,
            evidence,
        )

    # Queryability
    if offline or not cfg.sparql_endpoint:
        out[MeasureId.QUERYABILITY] = insufficient(
            MeasureId.QUERYABILITY, "no query endpoint probed (offline or unconfigured)"
        )
    else:
        sres = probes.probe_sparql(cfg.sparql_endpoint, cfg.probe, transport)
        log.append(sres)
        evidence = (
            Evidence(
                EvidenceKind.PROBE_OUTCOME,
                f"ASK against {cfg.sparql_endpoint}: responded={sres.responded}"
                + (f", answer={sres.ask_answer}" if sres.ask_answer is not None else "")
                + (f", error: {sres.error}" if sres.error else ""),
            ),
        )
        out[MeasureId.QUERYABILITY] = assessed(
            MeasureId.QUERYABILITY,
            1 if sres.responded else 0,
            cfg.threshold(MeasureId.QUERYABILITY),
            AUTOMATED,
            evidence,
        )

    # Dereferencability
    if offline:
        out[MeasureId.DEREFERENCABILITY] = insufficient(
            MeasureId.DEREFERENCABILITY, "dereferencing probes disabled (offline)"
        )
    else:
        ratio, dresults = probes.dereference_sample(g, cfg, transport)
        log.extend(dresults)
        if ratio is None:
            out[MeasureId.DEREFERENCABILITY] = not_applicable(
                MeasureId.DEREFERENCABILITY, "no HTTP-resolvable entity IRIs to sample"
            )
        else:
            evidence = tuple(
                Evidence(
                    EvidenceKind.PROBE_OUTCOME,
                    f"{r.iri}: status {r.status}, type {r.content_type}, "
                    f"{'RDF' if r.rdf_body else 'non-RDF'}"
                    + (f", error: {r.error}" if r.error else ""),
                    subject=r.iri,
                )
                for r in dresults
                if not probes.is_dereferenceable(r)
            )
            out[MeasureId.DEREFERENCABILITY] = assessed(
                MeasureId.DEREFERENCABILITY,
                ratio,
                cfg.threshold(MeasureId.DEREFERENCABILITY),
                AUTOMATED,
                evidence,
            )
    return out, log


def evaluate_measures(
    g: Graph,
    cfg: AssessmentConfig,
    transport: Optional[probes.Transport] = None,
    signal: Optional[HumanSignal] = None,
    reviews_enabled: bool = False,
) -> tuple[dict[MeasureId, MeasureResult], list]:
    """All 20 MeasureResults plus the probe log."""
    signal = signal or HumanSignal({})
    expect = reviews_enabled

    def h(measure: MeasureId) -> Optional[float]:
        return signal.get(measure)

    results: dict[MeasureId, MeasureResult] = {}
    now = cfg.now()

    results[MeasureId.SYNTACTIC_ACCURACY] = evaluators.eval_syntactic_accuracy(
        g, cfg, h(MeasureId.SYNTACTIC_ACCURACY), human_expected=expect
    )
    results[MeasureId.LICENSE] = evaluators.eval_license(
        g, cfg, h(MeasureId.LICENSE), human_expected=expect
    )
    results[MeasureId.EASINESS] = evaluators.eval_easiness(
        g, cfg, h(MeasureId.EASINESS), human_expected=expect
    )
    results[MeasureId.TIMELINESS] = evaluators.eval_timeliness(
        g, cfg, now, h(MeasureId.TIMELINESS), human_expected=expect
    )
    results[MeasureId.CORRECTNESS] = evaluators.eval_correctness(
        g, cfg, h(MeasureId.CORRECTNESS), human_expected=expect
    )
    results[MeasureId.SEMANTIC_ACCURACY] = evaluators.eval_semantic_accuracy(
        g, cfg, h(MeasureId.SEMANTIC_ACCURACY), human_expected=expect
    )
    results[MeasureId.TRUSTWORTHINESS] = evaluators.eval_trustworthiness(
        cfg, h(MeasureId.TRUSTWORTHINESS)
    )
    results[MeasureId.INSTANCE_COMPLETENESS] = evaluators.eval_instance_completeness(
        g, cfg, h(MeasureId.INSTANCE_COMPLETENESS), human_expected=expect
    )
    results[MeasureId.PROPERTY_COMPLETENESS] = evaluators.eval_property_completeness(
        g, cfg, h(MeasureId.PROPERTY_COMPLETENESS), human_expected=expect
    )
    results[MeasureId.POPULATION_COMPLETENESS] = evaluators.eval_population_completeness(g, cfg)
    results[MeasureId.PROVENANCE] = evaluators.eval_provenance(
        g, cfg, h(MeasureId.PROVENANCE), human_expected=expect
    )
    results[MeasureId.REUSABILITY] = evaluators.eval_reusability(g, cfg)
    results[MeasureId.CONCISENESS] = evaluators.eval_conciseness(
        g, cfg, h(MeasureId.CONCISENESS), human_expected=expect
    )
    results[MeasureId.DATA_REPRESENTATION] = evaluators.eval_data_representation(
        g, cfg, h(MeasureId.DATA_REPRESENTATION), human_expected=expect
    )
    results[MeasureId.TRACKABILITY] = evaluators.eval_trackability(g, cfg)
    results[MeasureId.IDENTIFIER_STABILITY] = evaluators.eval_identifier_stability(g, cfg)
    results[MeasureId.LINKABILITY] = evaluators.eval_linkability(
        g, cfg, h(MeasureId.LINKABILITY), human_expected=expect
    )

    probe_out, log = _probe_results(g, cfg, transport)
    results.update(probe_out)
    return results, log


def assess(
    g: Graph,
    cfg: AssessmentConfig,
    target: str = "local",
    transport: Optional[probes.Transport] = None,
    signal: Optional[HumanSignal] = None,
    reviews_enabled: bool = False,
    review_count: int = 0,
    reviews_required: int = 0,
    recommended_links: Optional[list[dict]] = None,
    policy: MaturityPolicy = MaturityPolicy(),
) -> AssessmentOutcome:
    results, log = evaluate_measures(g, cfg, transport, signal, reviews_enabled)
    report = maturity_report(
        target,
        results,
        policy,
        review_count=review_count,
        reviews_required=reviews_required,
        recommended_links=recommended_links,
    )
    return AssessmentOutcome(results=results, report=report, probe_log=log)
