"""Probe semantics against the scripted transport; fully offline."""
from __future__ import annotations

import time

from conftest import MockTransport, ask_response, html_response, rdf_response, redirect

from kgmm import vocab
from kgmm.config import AssessmentConfig, ProbeConfig
from kgmm.probes import (
    RateLimiter,
    TransportError,
    TransportResponse,
    dereference_sample,
    is_dereferenceable,
    pid_matched,
    probe_dereference,
    probe_responsiveness,
    probe_sparql,
    run_probe_pool,
    sample_iris,
)
from kgmm.rdf.terms import Graph, Iri, Literal, Triple

CFG = ProbeConfig()
EX = "http://ex.org/"


class TestDereference:
    def test_200_turtle_is_dereferenceable(self):
        t = MockTransport({EX + "a": rdf_response()})
        res = probe_dereference(EX + "a", CFG, t)
        assert is_dereferenceable(res)
        assert res.status == 200 and res.content_type == "text/turtle"

    def test_content_type_parameters_stripped(self):
        t = MockTransport({EX + "a": rdf_response(ctype="text/turtle; charset=utf-8")})
        res = probe_dereference(EX + "a", CFG, t)
        assert res.content_type == "text/turtle"
        assert is_dereferenceable(res)

    def test_303_chain_is_dereferenceable(self):
        t = MockTransport({
            EX + "a": redirect(EX + "doc/a"),
            EX + "doc/a": rdf_response(ctype="application/n-triples"),
        })
        res = probe_dereference(EX + "a", CFG, t)
        assert is_dereferenceable(res)
        assert res.redirects == 1

    def test_relative_redirect_resolved(self):
        t = MockTransport({
            EX + "a": redirect("/doc/a"),
            EX + "doc/a": rdf_response(),
        })
        assert is_dereferenceable(probe_dereference(EX + "a", CFG, t))

    def test_200_html_is_not(self):
        t = MockTransport({EX + "a": html_response()})
        res = probe_dereference(EX + "a", CFG, t)
        assert res.status == 200 and not is_dereferenceable(res)

    def test_404_is_not(self):
        t = MockTransport({EX + "a": rdf_response(status=404)})
        assert not is_dereferenceable(probe_dereference(EX + "a", CFG, t))

    def test_redirect_loop_detected(self):
        t = MockTransport({
            EX + "a": redirect(EX + "b"),
            EX + "b": redirect(EX + "a"),
        })
        res = probe_dereference(EX + "a", CFG, t)
        assert not is_dereferenceable(res)
        assert res.error == "redirect loop"

    def test_redirect_limit(self):
        routes = {EX + f"r{i}": redirect(EX + f"r{i + 1}") for i in range(10)}
        res = probe_dereference(EX + "r0", CFG, MockTransport(routes))
        assert res.error == "redirect limit exceeded"

    def test_non_http_iri(self):
        res = probe_dereference("urn:isbn:123", CFG, MockTransport())
        assert res.error == "non-HTTP IRI"

    def test_retry_once_on_transport_error(self):
        t = MockTransport({EX + "a": [TransportError("boom"), rdf_response()]})
        assert is_dereferenceable(probe_dereference(EX + "a", CFG, t))
        assert len(t.requests) == 2

    def test_no_retry_on_http_error_status(self):
        t = MockTransport({EX + "a": rdf_response(status=500)})
        probe_dereference(EX + "a", CFG, t)
        assert len(t.requests) == 1

    def test_persistent_failure_reported(self):
        t = MockTransport({EX + "a": TransportError("down")})
        res = probe_dereference(EX + "a", CFG, t)
        assert res.error and "down" in res.error

    def test_sends_accept_header(self):
        t = MockTransport({EX + "a": rdf_response()})
        probe_dereference(EX + "a", CFG, t)
        _, _, headers, _ = t.requests[0]
        assert "text/turtle" in headers["Accept"]


class TestResponsiveness:
    def test_under_limit_passes(self):
        t = MockTransport({EX: rdf_response(elapsed=1.99, ctype="text/html")})
        _, ok = probe_responsiveness(EX, CFG, t)
        assert ok

    def test_at_limit_fails_strictly(self):
        t = MockTransport({EX: rdf_response(elapsed=2.00, ctype="text/html")})
        _, ok = probe_responsiveness(EX, CFG, t)
        assert not ok

    def test_error_status_fails(self):
        t = MockTransport({EX: html_response(status=503, elapsed=0.1)})
        _, ok = probe_responsiveness(EX, CFG, t)
        assert not ok

    def test_unreachable_fails(self):
        _, ok = probe_responsiveness(EX, CFG, MockTransport())
        assert not ok


class TestSparql:
    ENDPOINT = EX + "sparql"

    def _url(self):
        return self.ENDPOINT + "?query=ASK+%7B+%3Fs+%3Fp+%3Fo+%7D"

    def test_ask_true(self):
        t = MockTransport({self._url(): ask_response(True)})
        res = probe_sparql(self.ENDPOINT, CFG, t)
        assert res.responded and res.ask_answer is True

    def test_ask_false_still_responded(self):
        t = MockTransport({self._url(): ask_response(False)})
        res = probe_sparql(self.ENDPOINT, CFG, t)
        assert res.responded and res.ask_answer is False

    def test_http_error(self):
        t = MockTransport({self._url(): html_response(status=500)})
        res = probe_sparql(self.ENDPOINT, CFG, t)
        assert not res.responded and res.error == "HTTP 500"

    def test_malformed_body(self):
        t = MockTransport({self._url(): TransportResponse(200, {}, b"not json", 0.01)})
        res = probe_sparql(self.ENDPOINT, CFG, t)
        assert not res.responded and res.error == "malformed ASK response"

    def test_unreachable(self):
        res = probe_sparql(self.ENDPOINT, CFG, MockTransport())
        assert not res.responded


class TestSampling:
    def _graph(self, n):
        return Graph([
            Triple(Iri(EX + f"e{i:03d}"), Iri(EX + "p"), Literal("v")) for i in range(n)
        ])

    def test_small_pool_returned_whole(self):
        cfg = AssessmentConfig(sample_size=25)
        assert len(sample_iris(self._graph(10), cfg)) == 10

    def test_sample_size_respected(self):
        cfg = AssessmentConfig(sample_size=5)
        assert len(sample_iris(self._graph(40), cfg)) == 5

    def test_deterministic_for_seed(self):
        cfg = AssessmentConfig(sample_size=5, rng_seed=42)
        g = self._graph(40)
        assert sample_iris(g, cfg) == sample_iris(g, cfg)

    def test_seed_changes_sample(self):
        g = self._graph(40)
        a = sample_iris(g, AssessmentConfig(sample_size=5, rng_seed=1))
        b = sample_iris(g, AssessmentConfig(sample_size=5, rng_seed=2))
        assert a != b

    def test_pid_matched(self):
        cfg = AssessmentConfig()
        assert pid_matched(Iri("https://doi.org/10.1234/abc"), cfg)
        assert pid_matched(Iri("https://orcid.org/0000-0002-1825-0097"), cfg)
        assert pid_matched(Iri("urn:isbn:0-395-36341-1"), cfg)
        assert not pid_matched(Iri(EX + "e1"), cfg)


class TestPool:
    def test_parallelism_bound_never_exceeded(self):
        urls = [EX + f"u{i}" for i in range(8)]
        t = MockTransport({u: rdf_response() for u in urls}, work_time=0.03)
        cfg = ProbeConfig(parallelism=2, rate_limit_per_host=0)
        run_probe_pool(urls, cfg, lambda url: probe_dereference(url, cfg, t))
        assert t.max_active <= 2
        assert len(t.requests) == 8

    def test_results_in_input_order(self):
        urls = [EX + f"u{i}" for i in range(6)]
        t = MockTransport({u: rdf_response() for u in urls}, work_time=0.01)
        cfg = ProbeConfig(parallelism=4, rate_limit_per_host=0)
        results = run_probe_pool(urls, cfg, lambda url: probe_dereference(url, cfg, t))
        assert [r.iri for r in results] == urls

    def test_rate_limiter_spaces_same_host(self):
        limiter = RateLimiter(per_second=50)
        start = time.monotonic()
        for _ in range(4):
            limiter.wait(EX + "x")
        assert time.monotonic() - start >= 0.05

    def test_rate_limiter_ignores_distinct_hosts(self):
        limiter = RateLimiter(per_second=2)
        start = time.monotonic()
        limiter.wait("http://a.org/")
        limiter.wait("http://b.org/")
        assert time.monotonic() - start < 0.3


class TestDereferenceSample:
    def test_pid_non_http_excluded_from_denominator(self):
        g = Graph([
            Triple(Iri(EX + "e1"), Iri(EX + "p"), Literal("v")),
            Triple(Iri("urn:isbn:0-395-36341-1"), Iri(EX + "p"), Literal("v")),
        ])
        cfg = AssessmentConfig()
        t = MockTransport({EX + "e1": rdf_response()})
        ratio, results = dereference_sample(g, cfg, t)
        assert ratio == 1
        assert len(results) == 1

    def test_none_when_nothing_probeable(self):
        g = Graph([Triple(Iri("urn:isbn:0-395-36341-1"), Iri(EX + "p"), Literal("v"))])
        ratio, results = dereference_sample(g, AssessmentConfig(), MockTransport())
        assert ratio is None and results == []

    def test_mixed_outcomes_ratio(self):
        g = Graph([
            Triple(Iri(EX + "ok"), Iri(EX + "p"), Literal("v")),
            Triple(Iri(EX + "bad"), Iri(EX + "p"), Literal("v")),
        ])
        t = MockTransport({EX + "ok": rdf_response(), EX + "bad": html_response()})
        ratio, _ = dereference_sample(g, AssessmentConfig(), t)
        assert ratio == 0.5
