"""RDF substrate: terms, graph, parsers, serializer, datatype validation."""
from .datatypes import Verdict, is_well_formed, validate_literal
from .ntriples import ParseError, format_term, format_triple, parse_ntriples, serialize_ntriples
from .terms import BlankNode, Graph, Iri, Literal, Term, TermError, Triple
from .turtle import UnknownPrefixError, parse_turtle

__all__ = [
    "BlankNode",
    "Graph",
    "Iri",
    "Literal",
    "ParseError",
    "Term",
    "TermError",
    "Triple",
    "UnknownPrefixError",
    "Verdict",
    "format_term",
    "format_triple",
    "is_well_formed",
    "parse_ntriples",
    "parse_turtle",
    "serialize_ntriples",
    "validate_literal",
]


def load_graph(text: str, format: str = "auto") -> Graph:
    """Parse N-Triples or the Turtle subset; ``auto`` sniffs for Turtle syntax."""
    if format == "ntriples":
        return parse_ntriples(text)
    if format == "turtle":
        return parse_turtle(text)
    stripped = text.lstrip("\ufeff \t\r\n")
    if stripped.startswith(("@prefix", "@base", "PREFIX", "BASE")):
        return parse_turtle(text)
    try:
        return parse_ntriples(text)
    except ParseError:
        return parse_turtle(text)
