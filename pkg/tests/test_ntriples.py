"""N-Triples conformance corpus and serializer round-trip."""
from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from kgmm.rdf.ntriples import (
    ParseError,
    format_triple,
    parse_ntriples,
    parse_triple_line,
    serialize_ntriples,
)
from kgmm.rdf.terms import (
    RDF_LANGSTRING,
    XSD_STRING,
    BlankNode,
    Graph,
    Iri,
    Literal,
    Triple,
)

S = "http://example.org/s"
P = "http://example.org/p"
O = "http://example.org/o"
XSD_INT = "http://www.w3.org/2001/XMLSchema#integer"


def _triple(s, p, o):
    return Triple(s, p, o)


# Each positive case: (document line, expected triple). Kept small and literal
# so a failure pinpoints the syntax feature involved.
POSITIVE_CASES = [
    (f"<{S}> <{P}> <{O}> .", _triple(Iri(S), Iri(P), Iri(O))),
    (f"<{S}> <{P}> <{O}>.", _triple(Iri(S), Iri(P), Iri(O))),
    (f"  <{S}>   <{P}>\t<{O}> . ", _triple(Iri(S), Iri(P), Iri(O))),
    (f"<{S}> <{P}> <{O}> . # trailing comment", _triple(Iri(S), Iri(P), Iri(O))),
    (f'<{S}> <{P}> "hello" .', _triple(Iri(S), Iri(P), Literal("hello"))),
    (f'<{S}> <{P}> "" .', _triple(Iri(S), Iri(P), Literal(""))),
    (f'<{S}> <{P}> "a b  c" .', _triple(Iri(S), Iri(P), Literal("a b  c"))),
    (
        f'<{S}> <{P}> "42"^^<{XSD_INT}> .',
        _triple(Iri(S), Iri(P), Literal("42", Iri(XSD_INT))),
    ),
    (
        f'<{S}> <{P}> "hi"@en .',
        _triple(Iri(S), Iri(P), Literal("hi", Iri(RDF_LANGSTRING), "en")),
    ),
    (
        f'<{S}> <{P}> "hi"@en-GB .',
        _triple(Iri(S), Iri(P), Literal("hi", Iri(RDF_LANGSTRING), "en-GB")),
    ),
    (
        f'<{S}> <{P}> "tab\\there" .',
        _triple(Iri(S), Iri(P), Literal("tab\there")),
    ),
    (
        f'<{S}> <{P}> "line\\nbreak" .',
        _triple(Iri(S), Iri(P), Literal("line\nbreak")),
    ),
    (
        f'<{S}> <{P}> "cr\\rhere" .',
        _triple(Iri(S), Iri(P), Literal("cr\rhere")),
    ),
    (
        f'<{S}> <{P}> "quote\\"mark" .',
        _triple(Iri(S), Iri(P), Literal('quote"mark')),
    ),
    (
        f'<{S}> <{P}> "back\\\\slash" .',
        _triple(Iri(S), Iri(P), Literal("back\\slash")),
    ),
    (
        f'<{S}> <{P}> "apos\\\'here" .',
        _triple(Iri(S), Iri(P), Literal("apos'here")),
    ),
    (
        f'<{S}> <{P}> "bell\\b" .',
        _triple(Iri(S), Iri(P), Literal("bell\b")),
    ),
    (
        f'<{S}> <{P}> "ff\\f" .',
        _triple(Iri(S), Iri(P), Literal("ff\f")),
    ),
    (
        f'<{S}> <{P}> "\\u0041" .',
        _triple(Iri(S), Iri(P), Literal("A")),
    ),
    (
        f'<{S}> <{P}> "\\U0001F600" .',
        _triple(Iri(S), Iri(P), Literal("\U0001F600")),
    ),
    (
        f'<{S}> <{P}> "café" .',
        _triple(Iri(S), Iri(P), Literal("café")),
    ),
    (
        f"<http://example.org/\\u00e9> <{P}> <{O}> .",
        _triple(Iri("http://example.org/é"), Iri(P), Iri(O)),
    ),
    (
        f"_:b0 <{P}> <{O}> .",
        _triple(BlankNode("b0"), Iri(P), Iri(O)),
    ),
    (
        f"<{S}> <{P}> _:obj .",
        _triple(Iri(S), Iri(P), BlankNode("obj")),
    ),
    (
        f"_:a <{P}> _:b .",
        _triple(BlankNode("a"), Iri(P), BlankNode("b")),
    ),
    (
        f"_:label.with.dots <{P}> <{O}> .",
        _triple(BlankNode("label.with.dots"), Iri(P), Iri(O)),
    ),
    (
        f"<{S}> <{P}> _:b1.",
        _triple(Iri(S), Iri(P), BlankNode("b1")),
    ),
    (
        f"_:x-y_z <{P}> <{O}> .",
        _triple(BlankNode("x-y_z"), Iri(P), Iri(O)),
    ),
    (
        f"<urn:isbn:0451450523> <{P}> <{O}> .",
        _triple(Iri("urn:isbn:0451450523"), Iri(P), Iri(O)),
    ),
    (
        f'<{S}> <{P}> "mixed"^^<{XSD_STRING}> .',
        _triple(Iri(S), Iri(P), Literal("mixed")),
    ),
]

NEGATIVE_CASES = [
    f"<{S}> <{P}> <{O}>",                       # missing final dot
    f"<{S}> <{P}> .",                           # missing object
    f"<{S}> <{O}> ",                            # missing object and dot
    f"<{S}> .",                                 # missing predicate and object
    f'"literal" <{P}> <{O}> .',                 # literal subject
    f"<{S}> _:b <{O}> .",                       # blank node predicate
    f'<{S}> "p" <{O}> .',                       # literal predicate
    f"<{S}> <{P}> <{O}> . extra",               # trailing garbage
    f"<{S}> <{P}> <{O}> . <{S}> <{P}> <{O}> .", # two statements on one line
    f"<{S} <{P}> <{O}> .",                      # unterminated subject IRI
    f"<{S}> <{P}> <{O} .",                      # unterminated object IRI
    f"<{S}> <{P}> \"open .",                    # unterminated literal
    f"<relative/iri> <{P}> <{O}> .",            # IRI without scheme
    f"<http://a b.org/> <{P}> <{O}> .",         # space inside IRI
    f'<{S}> <{P}> "bad\\escape" .',             # unknown string escape
    f'<{S}> <{P}> "bad\\u00G1" .',              # malformed \\u escape
    f'<{S}> <{P}> "bad\\uD800" .',              # surrogate code point
    f"<http://x.org/\\n> <{P}> <{O}> .",        # echar escape inside IRI
    f'<{S}> <{P}> "x"@ .',                      # empty language tag
    f'<{S}> <{P}> "x"@-en .',                   # tag starting with hyphen
    f'<{S}> <{P}> "x"@en--us .',                # doubled hyphen in tag
    f'<{S}> <{P}> "x"^^"notiri" .',             # datatype must be an IRI
    f'<{S}> <{P}> "x"^<{XSD_INT}> .',           # single caret
    f"_: <{P}> <{O}> .",                        # empty blank node label
    f"<{S}> <{P}> @en .",                       # language tag without literal
    f"<{S}> <{P}> ^^<{XSD_INT}> .",             # datatype without literal
    f"<> <{P}> <{O}> .",                        # empty IRI
    f"spo .",                                   # bare words
    f"<{S}>, <{P}> <{O}> .",                    # stray comma
    "\x00",                                     # control character line
]


def test_corpus_size_covers_requirement():
    assert len(POSITIVE_CASES) + len(NEGATIVE_CASES) >= 60


@pytest.mark.parametrize("line,expected", POSITIVE_CASES, ids=range(len(POSITIVE_CASES)))
def test_positive(line, expected):
    g = parse_ntriples(line + "\n")
    assert g.triples == frozenset({expected})


@pytest.mark.parametrize("line", NEGATIVE_CASES, ids=range(len(NEGATIVE_CASES)))
def test_negative(line):
    with pytest.raises(ParseError):
        parse_ntriples(line + "\n")


class TestDocumentStructure:
    def test_empty_document(self):
        assert len(parse_ntriples("")) == 0

    def test_comments_and_blank_lines(self):
        text = f"# header\n\n<{S}> <{P}> <{O}> .\n   \n# footer\n"
        assert len(parse_ntriples(text)) == 1

    def test_bom_skipped(self):
        text = "﻿" + f"<{S}> <{P}> <{O}> .\n"
        assert len(parse_ntriples(text)) == 1

    def test_duplicate_statements_collapse(self):
        text = (f"<{S}> <{P}> <{O}> .\n") * 3
        assert len(parse_ntriples(text)) == 1

    def test_error_reports_line_number(self):
        text = f"<{S}> <{P}> <{O}> .\nbroken line\n"
        with pytest.raises(ParseError) as err:
            parse_ntriples(text)
        assert err.value.line == 2

    def test_error_reports_column(self):
        with pytest.raises(ParseError) as err:
            parse_triple_line(f"<{S}> nope", 1)
        assert err.value.column == len(f"<{S}> ") + 1


class TestSerializer:
    def test_empty_graph_serializes_empty(self):
        assert serialize_ntriples(Graph()) == ""

    def test_plain_string_has_no_datatype_suffix(self):
        line = format_triple(_triple(Iri(S), Iri(P), Literal("x")))
        assert line == f'<{S}> <{P}> "x" .'

    def test_control_characters_escaped(self):
        line = format_triple(_triple(Iri(S), Iri(P), Literal("a\x01b")))
        assert "\\u0001" in line

    def test_canonical_sorted_lines(self):
        g = parse_ntriples(
            f"<{S}> <{P}> \"b\" .\n<{S}> <{P}> \"a\" .\n"
        )
        out = serialize_ntriples(g)
        lines = out.strip().split("\n")
        assert lines == sorted(lines)
        assert out.endswith("\n")


# -- property: serialize . parse is the identity ----------------------------

_iris = st.text(
    alphabet="abcdefghijklmnopqrstuvwxyz0123456789/#._-", min_size=1, max_size=12
).map(lambda s: Iri("http://x.org/" + s))
_blanks = st.text(
    alphabet="abcdefghijklmnopqrstuvwxyz0123456789", min_size=1, max_size=8
).map(BlankNode)
_plain_text = st.text(max_size=24).filter(
    lambda s: not any(0xD800 <= ord(c) <= 0xDFFF for c in s)
)
_literals = st.one_of(
    _plain_text.map(Literal),
    st.tuples(_plain_text, _iris).map(lambda p: Literal(p[0], p[1])),
    st.tuples(
        _plain_text, st.sampled_from(["en", "de", "en-GB", "fr"])
    ).map(lambda p: Literal(p[0], Iri(RDF_LANGSTRING), p[1])),
)
_subjects = st.one_of(_iris, _blanks)
_objects = st.one_of(_iris, _blanks, _literals)
_triples = st.builds(Triple, _subjects, _iris, _objects)
_graphs = st.lists(_triples, max_size=12).map(Graph)


@settings(max_examples=500, deadline=None)
@given(_graphs)
def test_round_trip(g):
    assert parse_ntriples(serialize_ntriples(g)) == g


@settings(max_examples=100, deadline=None)
@given(_graphs)
def test_serialization_is_canonical(g):
    text = serialize_ntriples(g)
    assert serialize_ntriples(parse_ntriples(text)) == text
