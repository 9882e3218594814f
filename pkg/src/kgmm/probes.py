"""Network-facing checks behind an injectable transport.

All HTTP traffic goes through a Transport object, so the whole suite runs
offline against a scripted mock. Probes run in a bounded thread pool with a
per-host rate limit; results are collected in request order regardless of
completion order.
"""
from __future__ import annotations

import random
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
import json
import re
from typing import Callable, Optional, Protocol
from urllib.parse import urlencode, urljoin, urlsplit

from . import __version__ as _pkg_version
from .config import AssessmentConfig, ProbeConfig
from .rdf.terms import Graph, Iri

USER_AGENT = f"kgmm-probe/{_pkg_version}"


@dataclass(frozen=True)
class TransportResponse:
    status: int
    headers: dict[str, str]
    body: bytes = b""
    elapsed: float = 0.0

    def header(self, name: str) -> Optional[str]:
        for k, v in self.headers.items():
            if k.lower() == name.lower():
                return v
        return None


class TransportError(Exception):
    pass


class Transport(Protocol):
    def request(self, method: str, url: str, headers: dict[str, str], timeout: float) -> TransportResponse:
        ...


class RequestsTransport:
    """Real HTTP transport; redirects are followed by the probe, not here."""

    def request(self, method: str, url: str, headers: dict[str, str], timeout: float) -> TransportResponse:
        import requests

        try:
            started = time.monotonic()
            resp = requests.request(
                method, url, headers=headers, timeout=timeout, allow_redirects=False
            )
            elapsed = time.monotonic() - started
        except requests.RequestException as exc:
            raise TransportError(str(exc)) from exc
        return TransportResponse(
            status=resp.status_code,
            headers=dict(resp.headers),
            body=resp.content,
            elapsed=elapsed,
        )


@dataclass(frozen=True)
class HttpProbeResult:
    iri: str
    status: Optional[int]
    content_type: Optional[str]
    elapsed: float
    redirects: int
    rdf_body: bool
    error: Optional[str] = None

    def to_dict(self) -> dict:
        return {
            "iri": self.iri,
            "status": self.status,
            "content_type": self.content_type,
            "elapsed": self.elapsed,
            "redirects": self.redirects,
            "rdf_body": self.rdf_body,
            "error": self.error,
        }


@dataclass(frozen=True)
class SparqlProbeResult:
    endpoint: str
    responded: bool
    ask_answer: Optional[bool]
    elapsed: float
    error: Optional[str] = None

    def __post_init__(self) -> None:
        if self.ask_answer is not None and not self.responded:
            raise ValueError("ask_answer requires responded=True")


def _strip_params(content_type: Optional[str]) -> Optional[str]:
    if content_type is None:
        return None
    return content_type.split(";", 1)[0].strip().lower()


def _request_with_retry(
    transport: Transport, url: str, headers: dict[str, str], timeout: float
) -> TransportResponse:
    # one retry on transport-level failure, none on HTTP error status
    try:
        return transport.request("GET", url, headers, timeout)
    except TransportError:
        return transport.request("GET", url, headers, timeout)


def probe_responsiveness(
    url: str, cfg: ProbeConfig, transport: Transport
) -> tuple[HttpProbeResult, bool]:
    """GET the exploration interface; pass iff 2xx strictly under the limit."""
    headers = {"User-Agent": USER_AGENT}
    try:
        resp = _request_with_retry(transport, url, headers, cfg.request_timeout)
    except TransportError as exc:
        result = HttpProbeResult(url, None, None, 0.0, 0, False, error=f"unreachable: {exc}")
        return result, False
    result = HttpProbeResult(
        iri=url,
        status=resp.status,
        content_type=_strip_params(resp.header("Content-Type")),
        elapsed=resp.elapsed,
        redirects=0,
        rdf_body=False,
    )
    ok = 200 <= resp.status < 300 and resp.elapsed < cfg.responsiveness_limit
    return result, ok


def probe_dereference(iri: str, cfg: ProbeConfig, transport: Transport) -> HttpProbeResult:
    """Content-negotiated GET following redirects; dereferenceable iff the
    final answer is 200 with an RDF content type."""
    scheme = urlsplit(iri).scheme.lower()
    if scheme not in ("http", "https"):
        return HttpProbeResult(iri, None, None, 0.0, 0, False, error="non-HTTP IRI")
    headers = {
        "User-Agent": USER_AGENT,
        "Accept": ", ".join(cfg.accept_types),
    }
    url = iri
    elapsed = 0.0
    seen: set[str] = set()
    for hop in range(cfg.max_redirects + 1):
        if url in seen:
            return HttpProbeResult(iri, None, None, elapsed, hop, False, error="redirect loop")
        seen.add(url)
        try:
            resp = _request_with_retry(transport, url, headers, cfg.request_timeout)
        except TransportError as exc:
            return HttpProbeResult(iri, None, None, elapsed, hop, False, error=f"unreachable: {exc}")
        elapsed += resp.elapsed
        if 300 <= resp.status < 400:
            location = resp.header("Location")
            if not location:
                return HttpProbeResult(
                    iri, resp.status, None, elapsed, hop, False, error="redirect without Location"
                )
            url = urljoin(url, location)
            continue
        ctype = _strip_params(resp.header("Content-Type"))
        rdf = resp.status == 200 and ctype in {t.lower() for t in cfg.accept_types}
        return HttpProbeResult(iri, resp.status, ctype, elapsed, hop, rdf)
    return HttpProbeResult(
        iri, None, None, elapsed, cfg.max_redirects, False, error="redirect limit exceeded"
    )


def is_dereferenceable(result: HttpProbeResult) -> bool:
    return result.status == 200 and result.rdf_body


ASK_QUERY = "ASK { ?s ?p ?o }"


def probe_sparql(endpoint: str, cfg: ProbeConfig, transport: Transport) -> SparqlProbeResult:
    """Standard-protocol ASK via GET; responded iff 200 with a parseable
    boolean result."""
    sep = "&" if "?" in endpoint else "?"
    url = endpoint + sep + urlencode({"query": ASK_QUERY})
    headers = {
        "User-Agent": USER_AGENT,
        "Accept": "application/sparql-results+json",
    }
    try:
        resp = _request_with_retry(transport, url, headers, cfg.request_timeout)
    except TransportError as exc:
        return SparqlProbeResult(endpoint, False, None, 0.0, error=f"unreachable: {exc}")
    if resp.status != 200:
        return SparqlProbeResult(
            endpoint, False, None, resp.elapsed, error=f"HTTP {resp.status}"
        )
    try:
        payload = json.loads(resp.body.decode("utf-8"))
        answer = payload["boolean"]
        if not isinstance(answer, bool):
            raise TypeError
    except (ValueError, KeyError, TypeError):
        return SparqlProbeResult(endpoint, False, None, resp.elapsed, error="malformed ASK response")
    return SparqlProbeResult(endpoint, True, answer, resp.elapsed)


def sample_iris(g: Graph, cfg: AssessmentConfig) -> list[Iri]:
    """Seeded pseudo-random sample of entity IRIs, canonical order."""
    from .evaluators import entities

    pool = sorted(entities(g, cfg), key=lambda e: e.value)
    if len(pool) <= cfg.sample_size:
        return pool
    rng = random.Random(cfg.rng_seed)
    return sorted(rng.sample(pool, cfg.sample_size), key=lambda e: e.value)


def pid_matched(iri: Iri, cfg: AssessmentConfig) -> bool:
    return any(re.search(pattern, iri.value) for _, pattern in cfg.pid_patterns)


class RateLimiter:
    """Per-host minimum spacing between requests."""

    def __init__(self, per_second: float) -> None:
        self._interval = 1.0 / per_second if per_second > 0 else 0.0
        self._lock = threading.Lock()
        self._last: dict[str, float] = {}

    def wait(self, url: str) -> None:
        if self._interval <= 0:
            return
        host = urlsplit(url).netloc
        while True:
            with self._lock:
                now = time.monotonic()
                last = self._last.get(host, 0.0)
                delay = last + self._interval - now
                if delay <= 0:
                    self._last[host] = now
                    return
            time.sleep(min(delay, 0.05))


def run_probe_pool(
    urls: list[str],
    cfg: ProbeConfig,
    worker: Callable[[str], object],
) -> list:
    """Run ``worker`` over ``urls`` with bounded parallelism and per-host rate
    limiting; results come back in input order."""
    if not urls:
        return []
    limiter = RateLimiter(cfg.rate_limit_per_host)

    def job(url: str):
        limiter.wait(url)
        return worker(url)

    with ThreadPoolExecutor(max_workers=cfg.parallelism) as pool:
        return list(pool.map(job, urls))


def dereference_sample(
    g: Graph, cfg: AssessmentConfig, transport: Transport
) -> tuple[Optional[Fraction], list[HttpProbeResult]]:
    """Probe a seeded sample of entity IRIs.

    PID-scheme IRIs that are not HTTP-resolvable are excluded from the
    denominator: their virtue is stability, not dereferencing. Returns None
    when nothing is probeable.
    """
    sample = sample_iris(g, cfg)
    probeable: list[Iri] = []
    for iri in sample:
        scheme = urlsplit(iri.value).scheme.lower()
        if scheme not in ("http", "https") and pid_matched(iri, cfg):
            continue
        probeable.append(iri)
    if not probeable:
        return None, []
    results = run_probe_pool(
        [i.value for i in probeable],
        cfg.probe,
        lambda url: probe_dereference(url, cfg.probe, transport),
    )
    ok = sum(1 for r in results if is_dereferenceable(r))
    return Fraction(ok, len(results)), results
