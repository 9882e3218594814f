"""Turtle subset parser tests."""
from __future__ import annotations

import pytest

from kgmm.rdf import load_graph
from kgmm.rdf.ntriples import ParseError
from kgmm.rdf.terms import RDF_LANGSTRING, RDF_TYPE, BlankNode, Iri, Literal, Triple
from kgmm.rdf.turtle import UnknownPrefixError, parse_turtle

EX = "http://example.org/"
XSD_INT = "http://www.w3.org/2001/XMLSchema#integer"


def triples_of(text):
    return parse_turtle(text).triples


class TestDirectives:
    def test_prefix_declaration(self):
        g = parse_turtle(f"@prefix ex: <{EX}> .\nex:s ex:p ex:o .")
        assert Triple(Iri(EX + "s"), Iri(EX + "p"), Iri(EX + "o")) in g

    def test_sparql_style_prefix(self):
        g = parse_turtle(f"PREFIX ex: <{EX}>\nex:s ex:p ex:o .")
        assert len(g) == 1

    def test_empty_prefix(self):
        g = parse_turtle(f"@prefix : <{EX}> .\n:s :p :o .")
        assert Triple(Iri(EX + "s"), Iri(EX + "p"), Iri(EX + "o")) in g

    def test_base_resolution(self):
        g = parse_turtle(f"@base <{EX}> .\n<s> <p> <o> .")
        assert Triple(Iri(EX + "s"), Iri(EX + "p"), Iri(EX + "o")) in g

    def test_sparql_style_base(self):
        g = parse_turtle(f"BASE <{EX}>\n<s> <p> <o> .")
        assert len(g) == 1

    def test_prefix_redeclaration_wins(self):
        g = parse_turtle(
            f"@prefix ex: <http://old.org/> .\n@prefix ex: <{EX}> .\nex:s ex:p ex:o ."
        )
        assert Triple(Iri(EX + "s"), Iri(EX + "p"), Iri(EX + "o")) in g


class TestStatements:
    def test_a_keyword(self):
        g = parse_turtle(f"@prefix ex: <{EX}> .\nex:s a ex:Thing .")
        assert Triple(Iri(EX + "s"), Iri(RDF_TYPE), Iri(EX + "Thing")) in g

    def test_predicate_list(self):
        g = parse_turtle(f"@prefix ex: <{EX}> .\nex:s ex:p ex:o ; ex:q ex:r .")
        assert len(g) == 2
        assert Triple(Iri(EX + "s"), Iri(EX + "q"), Iri(EX + "r")) in g

    def test_object_list(self):
        g = parse_turtle(f"@prefix ex: <{EX}> .\nex:s ex:p ex:a, ex:b, ex:c .")
        assert len(g) == 3

    def test_dangling_semicolon(self):
        g = parse_turtle(f"@prefix ex: <{EX}> .\nex:s ex:p ex:o ; .")
        assert len(g) == 1

    def test_mixed_lists(self):
        g = parse_turtle(
            f"@prefix ex: <{EX}> .\nex:s ex:p ex:a, ex:b ;\n  a ex:T ;\n  ex:q \"v\" ."
        )
        assert len(g) == 4

    def test_blank_nodes(self):
        g = parse_turtle(f"@prefix ex: <{EX}> .\n_:x ex:p _:y .")
        assert Triple(BlankNode("x"), Iri(EX + "p"), BlankNode("y")) in g

    def test_comments_ignored(self):
        g = parse_turtle(
            f"# header\n@prefix ex: <{EX}> . # inline\nex:s ex:p ex:o . # done"
        )
        assert len(g) == 1


class TestLiterals:
    def test_plain(self):
        g = parse_turtle(f'@prefix ex: <{EX}> .\nex:s ex:p "hello" .')
        assert Triple(Iri(EX + "s"), Iri(EX + "p"), Literal("hello")) in g

    def test_single_quoted(self):
        g = parse_turtle(f"@prefix ex: <{EX}> .\nex:s ex:p 'hi' .")
        assert Triple(Iri(EX + "s"), Iri(EX + "p"), Literal("hi")) in g

    def test_long_string(self):
        g = parse_turtle(f'@prefix ex: <{EX}> .\nex:s ex:p """line\nbreak""" .')
        assert Triple(Iri(EX + "s"), Iri(EX + "p"), Literal("line\nbreak")) in g

    def test_language_tag(self):
        g = parse_turtle(f'@prefix ex: <{EX}> .\nex:s ex:p "hallo"@de .')
        assert Triple(
            Iri(EX + "s"), Iri(EX + "p"), Literal("hallo", Iri(RDF_LANGSTRING), "de")
        ) in g

    def test_datatype_iriref(self):
        g = parse_turtle(f'@prefix ex: <{EX}> .\nex:s ex:p "5"^^<{XSD_INT}> .')
        assert Triple(Iri(EX + "s"), Iri(EX + "p"), Literal("5", Iri(XSD_INT))) in g

    def test_datatype_pname(self):
        g = parse_turtle(
            "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
            f'@prefix ex: <{EX}> .\nex:s ex:p "5"^^xsd:integer .'
        )
        assert Triple(Iri(EX + "s"), Iri(EX + "p"), Literal("5", Iri(XSD_INT))) in g

    def test_escapes(self):
        g = parse_turtle(f'@prefix ex: <{EX}> .\nex:s ex:p "a\\tb\\u0041" .')
        assert Triple(Iri(EX + "s"), Iri(EX + "p"), Literal("a\tbA")) in g


class TestErrors:
    def test_unknown_prefix(self):
        with pytest.raises(UnknownPrefixError) as err:
            parse_turtle("missing:s missing:p missing:o .")
        assert err.value.prefix == "missing"

    def test_unknown_prefix_is_parse_error(self):
        assert issubclass(UnknownPrefixError, ParseError)

    def test_property_list_unsupported(self):
        with pytest.raises(ParseError, match="not supported"):
            parse_turtle(f"@prefix ex: <{EX}> .\nex:s ex:p [ ex:q ex:r ] .")

    def test_collection_unsupported(self):
        with pytest.raises(ParseError, match="not supported"):
            parse_turtle(f"@prefix ex: <{EX}> .\nex:s ex:p ( ex:a ex:b ) .")

    def test_missing_dot(self):
        with pytest.raises(ParseError):
            parse_turtle(f"@prefix ex: <{EX}> .\nex:s ex:p ex:o")

    def test_literal_subject(self):
        with pytest.raises(ParseError):
            parse_turtle(f'@prefix ex: <{EX}> .\n"lit" ex:p ex:o .')

    def test_literal_predicate(self):
        with pytest.raises(ParseError):
            parse_turtle(f'@prefix ex: <{EX}> .\nex:s "p" ex:o .')

    def test_error_carries_line(self):
        with pytest.raises(ParseError) as err:
            parse_turtle(f"@prefix ex: <{EX}> .\n\nex:s ex:p !!bad .")
        assert err.value.line == 3


class TestAutoDetection:
    def test_turtle_detected_by_directive(self):
        g = load_graph(f"@prefix ex: <{EX}> .\nex:s ex:p ex:o .")
        assert len(g) == 1

    def test_ntriples_detected(self):
        g = load_graph(f"<{EX}s> <{EX}p> <{EX}o> .\n")
        assert len(g) == 1

    def test_turtle_without_directive_falls_back(self):
        # pure statement syntax with pnames only parses via the Turtle path
        with pytest.raises(ParseError):
            load_graph("nonsense document")

    def test_equivalent_graphs(self):
        turtle = f"@prefix ex: <{EX}> .\nex:s ex:p ex:a, ex:b ."
        nt = f"<{EX}s> <{EX}p> <{EX}a> .\n<{EX}s> <{EX}p> <{EX}b> .\n"
        assert load_graph(turtle) == load_graph(nt)
