"""Shared test helpers: scripted transport and graph builders."""
from __future__ import annotations

import threading
import time
from typing import Callable, Optional, Union

import pytest

from kgmm.probes import TransportError, TransportResponse
from kgmm.rdf.terms import Graph, Iri, Literal, Triple

RouteEntry = Union[TransportResponse, Exception, Callable[[str], TransportResponse], list]


class MockTransport:
    """Scripted transport with request recording and concurrency tracking.

    A route maps a URL to a response, an exception to raise, a callable, or a
    list consumed one element per request (the last element repeats).
    """

    def __init__(self, routes: Optional[dict[str, RouteEntry]] = None,
                 work_time: float = 0.0) -> None:
        self.routes: dict[str, RouteEntry] = dict(routes or {})
        self.work_time = work_time
        self.requests: list[tuple[str, str, dict[str, str], float]] = []
        self._lock = threading.Lock()
        self._active = 0
        self.max_active = 0

    def request(self, method: str, url: str, headers: dict[str, str],
                timeout: float) -> TransportResponse:
        with self._lock:
            self._active += 1
            self.max_active = max(self.max_active, self._active)
            self.requests.append((method, url, dict(headers), time.monotonic()))
        try:
            if self.work_time:
                time.sleep(self.work_time)
            entry = self.routes.get(url)
            if entry is None:
                raise TransportError(f"no route for {url}")
            if isinstance(entry, list):
                entry = entry.pop(0) if len(entry) > 1 else entry[0]
            if callable(entry) and not isinstance(entry, Exception):
                entry = entry(url)
            if isinstance(entry, Exception):
                raise entry
            return entry
        finally:
            with self._lock:
                self._active -= 1


def rdf_response(elapsed: float = 0.05, ctype: str = "text/turtle",
                 status: int = 200, body: bytes = b"") -> TransportResponse:
    return TransportResponse(
        status=status, headers={"Content-Type": ctype}, body=body, elapsed=elapsed
    )


def html_response(elapsed: float = 0.05, status: int = 200) -> TransportResponse:
    return TransportResponse(
        status=status, headers={"Content-Type": "text/html; charset=utf-8"},
        body=b"<html></html>", elapsed=elapsed,
    )


def redirect(to: str, status: int = 303) -> TransportResponse:
    return TransportResponse(status=status, headers={"Location": to}, elapsed=0.01)


def ask_response(answer: bool = True) -> TransportResponse:
    import json

    return TransportResponse(
        status=200,
        headers={"Content-Type": "application/sparql-results+json"},
        body=json.dumps({"head": {}, "boolean": answer}).encode(),
        elapsed=0.02,
    )


# -- graph construction shorthand -------------------------------------------


def iri(value: str) -> Iri:
    return Iri(value)


def lit(lexical: str, datatype: Optional[str] = None, language: Optional[str] = None) -> Literal:
    if language is not None:
        return Literal(lexical, Iri("http://www.w3.org/1999/02/22-rdf-syntax-ns#langString"), language)
    if datatype is not None:
        return Literal(lexical, Iri(datatype))
    return Literal(lexical)


def t(s, p, o) -> Triple:
    def term(x):
        if isinstance(x, str):
            return Iri(x)
        return x

    return Triple(term(s), term(p), term(o))


def graph(*triples) -> Graph:
    return Graph(triples)


@pytest.fixture
def mock_transport() -> MockTransport:
    return MockTransport()
