"""RDF term and graph model.

Immutable value objects for IRIs, blank nodes, literals and triples, plus an
indexed, read-only graph. The graph is the substrate every quality evaluator
reads; it is safe to share across threads once constructed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union

XSD = "http://www.w3.org/2001/XMLSchema#"
RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"

XSD_STRING = XSD + "string"
RDF_LANGSTRING = RDF_NS + "langString"
RDF_TYPE = RDF_NS + "type"

_IRI_FORBIDDEN = set(' \t\n\r<>"{}|^`\\')


class TermError(ValueError):
    """Raised when a term violates its structural invariants."""


@dataclass(frozen=True, order=True)
class Iri:
    value: str

    def __post_init__(self) -> None:
        if not self.value:
            raise TermError("IRI must be non-empty")
        if ":" not in self.value:
            raise TermError(f"IRI missing scheme separator: {self.value!r}")
        bad = _IRI_FORBIDDEN.intersection(self.value)
        if bad:
            raise TermError(
                f"IRI contains forbidden character {sorted(bad)[0]!r}: {self.value!r}"
            )

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class BlankNode:
    label: str

    def __post_init__(self) -> None:
        if not self.label:
            raise TermError("blank node label must be non-empty")

    def __str__(self) -> str:
        return "_:" + self.label


@dataclass(frozen=True, order=True)
class Literal:
    lexical: str
    datatype: Iri = field(default=Iri(XSD_STRING))
    language: Optional[str] = None

    def __post_init__(self) -> None:
        if self.language is not None:
            if self.datatype.value != RDF_LANGSTRING:
                raise TermError("language tag requires rdf:langString datatype")
            if not self.language:
                raise TermError("language tag must be non-empty")
        elif self.datatype.value == RDF_LANGSTRING:
            raise TermError("rdf:langString requires a language tag")

    def __str__(self) -> str:
        if self.language:
            return f'"{self.lexical}"@{self.language}'
        return f'"{self.lexical}"^^<{self.datatype.value}>'


Term = Union[Iri, BlankNode, Literal]
SubjectTerm = Union[Iri, BlankNode]


@dataclass(frozen=True)
class Triple:
    subject: SubjectTerm
    predicate: Iri
    object: Term

    def __post_init__(self) -> None:
        if isinstance(self.subject, Literal):
            raise TermError("literal in subject position")
        if not isinstance(self.subject, (Iri, BlankNode)):
            raise TermError(f"invalid subject term: {self.subject!r}")
        if not isinstance(self.predicate, Iri):
            raise TermError("predicate must be an IRI")
        if not isinstance(self.object, (Iri, BlankNode, Literal)):
            raise TermError(f"invalid object term: {self.object!r}")


def _term_sort_key(t: Term) -> tuple:
    # Group by kind so heterogeneous positions still sort deterministically.
    if isinstance(t, Iri):
        return (0, t.value, "", "")
    if isinstance(t, BlankNode):
        return (1, t.label, "", "")
    return (2, t.lexical, t.datatype.value, t.language or "")


def triple_sort_key(t: Triple) -> tuple:
    return (_term_sort_key(t.subject), _term_sort_key(t.predicate), _term_sort_key(t.object))


class Graph:
    """An immutable set of triples with subject/predicate/object indexes."""

    __slots__ = ("_triples", "_by_s", "_by_p", "_by_o")

    def __init__(self, triples: Iterable[Triple] = ()) -> None:
        tset = frozenset(triples)
        by_s: dict = {}
        by_p: dict = {}
        by_o: dict = {}
        for t in tset:
            by_s.setdefault(t.subject, set()).add(t)
            by_p.setdefault(t.predicate, set()).add(t)
            by_o.setdefault(t.object, set()).add(t)
        object.__setattr__(self, "_triples", tset)
        object.__setattr__(self, "_by_s", by_s)
        object.__setattr__(self, "_by_p", by_p)
        object.__setattr__(self, "_by_o", by_o)

    @property
    def triples(self) -> frozenset:
        return self._triples

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(sorted(self._triples, key=triple_sort_key))

    def __contains__(self, t: Triple) -> bool:
        return t in self._triples

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __hash__(self) -> int:
        return hash(self._triples)

    def match(
        self,
        subject: Optional[SubjectTerm] = None,
        predicate: Optional[Iri] = None,
        obj: Optional[Term] = None,
    ) -> list[Triple]:
        """Triples agreeing with every bound position, in canonical order."""
        candidates: Optional[set] = None
        if subject is not None:
            candidates = self._by_s.get(subject, set())
        if predicate is not None:
            pset = self._by_p.get(predicate, set())
            candidates = pset if candidates is None else candidates & pset
        if obj is not None:
            oset = self._by_o.get(obj, set())
            candidates = oset if candidates is None else candidates & oset
        if candidates is None:
            candidates = self._triples
        return sorted(candidates, key=triple_sort_key)

    def subjects(self) -> set:
        return set(self._by_s)

    def predicates(self) -> set:
        return set(self._by_p)

    def objects(self) -> set:
        return set(self._by_o)
