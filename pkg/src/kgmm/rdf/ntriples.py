"""N-Triples parsing and canonical serialization.

Parsing is line oriented and reports errors with line and column numbers.
Serialization is canonical: one statement per line, lines sorted, so that
``parse(serialize(g)) == g`` for every graph.
"""
from __future__ import annotations

from typing import Optional

from .terms import (
    RDF_LANGSTRING,
    XSD_STRING,
    BlankNode,
    Graph,
    Iri,
    Literal,
    Term,
    TermError,
    Triple,
    triple_sort_key,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


_BLANK_LABEL_START = set(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_"
)
_BLANK_LABEL_CHARS = _BLANK_LABEL_START | {"-", "."}
_LANGTAG_CHARS = set("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-")

_ECHAR_DECODE = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}


class _LineScanner:
    def __init__(self, text: str, lineno: int) -> None:
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.lineno, self.pos + 1)

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def _unescape_uchar(self) -> str:
        # positioned just after the backslash
        kind = self.text[self.pos]
        width = 4 if kind == "u" else 8
        hexpart = self.text[self.pos + 1 : self.pos + 1 + width]
        if len(hexpart) != width or any(c not in "0123456789abcdefABCDEF" for c in hexpart):
            raise self.error(f"bad \\{kind} escape")
        self.pos += 1 + width
        code = int(hexpart, 16)
        if code > 0x10FFFF or 0xD800 <= code <= 0xDFFF:
            raise self.error("escape outside unicode range")
        return chr(code)

    def read_iri(self) -> Iri:
        start = self.pos
        if self.peek() != "<":
            raise self.error("expected '<'")
        self.pos += 1
        out: list[str] = []
        while True:
            if self.at_end():
                self.pos = start
                raise self.error("unterminated IRI")
            c = self.text[self.pos]
            if c == ">":
                self.pos += 1
                break
            if c == "\\":
                self.pos += 1
                if self.peek() not in ("u", "U"):
                    raise self.error("only \\u/\\U escapes allowed in IRIs")
                out.append(self._unescape_uchar())
                continue
            if c in ' "{}|^`<' or ord(c) <= 0x20:
                raise self.error(f"character {c!r} not allowed in IRI")
            out.append(c)
            self.pos += 1
        try:
            return Iri("".join(out))
        except TermError as exc:
            self.pos = start
            raise self.error(str(exc))

    def read_blank(self) -> BlankNode:
        if not self.text.startswith("_:", self.pos):
            raise self.error("expected blank node '_:'")
        self.pos += 2
        start = self.pos
        if self.at_end() or self.text[self.pos] not in _BLANK_LABEL_START:
            raise self.error("blank node label expected")
        while self.pos < len(self.text) and self.text[self.pos] in _BLANK_LABEL_CHARS:
            self.pos += 1
        label = self.text[start : self.pos]
        if label.endswith("."):
            # trailing dot belongs to the statement terminator
            self.pos -= 1
            label = label[:-1]
        return BlankNode(label)

    def read_string(self) -> str:
        if self.peek() != '"':
            raise self.error("expected '\"'")
        start = self.pos
        self.pos += 1
        out: list[str] = []
        while True:
            if self.at_end():
                self.pos = start
                raise self.error("unterminated literal")
            c = self.text[self.pos]
            if c == '"':
                self.pos += 1
                return "".join(out)
            if c == "\\":
                self.pos += 1
                nxt = self.peek()
                if nxt in ("u", "U"):
                    out.append(self._unescape_uchar())
                elif nxt in _ECHAR_DECODE:
                    out.append(_ECHAR_DECODE[nxt])
                    self.pos += 1
                else:
                    raise self.error(f"bad escape \\{nxt}")
                continue
            if c in "\n\r":
                raise self.error("newline inside literal")
            out.append(c)
            self.pos += 1

    def read_literal(self) -> Literal:
        lexical = self.read_string()
        if self.peek() == "@":
            self.pos += 1
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos] in _LANGTAG_CHARS:
                self.pos += 1
            tag = self.text[start : self.pos]
            if not tag or tag.startswith("-") or "--" in tag or tag.endswith("-"):
                self.pos = start
                raise self.error("malformed language tag")
            return Literal(lexical, Iri(RDF_LANGSTRING), tag)
        if self.text.startswith("^^", self.pos):
            self.pos += 2
            dt = self.read_iri()
            return Literal(lexical, dt)
        return Literal(lexical, Iri(XSD_STRING))

    def read_subject(self) -> Term:
        c = self.peek()
        if c == "<":
            return self.read_iri()
        if c == "_":
            return self.read_blank()
        raise self.error("expected IRI or blank node as subject")

    def read_object(self) -> Term:
        c = self.peek()
        if c == "<":
            return self.read_iri()
        if c == "_":
            return self.read_blank()
        if c == '"':
            return self.read_literal()
        raise self.error("expected IRI, blank node or literal as object")


def parse_triple_line(line: str, lineno: int) -> Optional[Triple]:
    """Parse one N-Triples statement line; None for blank/comment lines."""
    sc = _LineScanner(line.rstrip("\n"), lineno)
    sc.skip_ws()
    if sc.at_end() or sc.peek() == "#":
        return None
    subject = sc.read_subject()
    sc.skip_ws()
    if sc.peek() != "<":
        raise sc.error("expected IRI as predicate")
    predicate = sc.read_iri()
    sc.skip_ws()
    obj = sc.read_object()
    sc.skip_ws()
    if sc.peek() != ".":
        raise sc.error("expected '.' terminating statement")
    sc.pos += 1
    sc.skip_ws()
    if not sc.at_end() and sc.peek() != "#":
        raise sc.error("unexpected content after '.'")
    return Triple(subject, predicate, obj)


def parse_ntriples(text: str) -> Graph:
    """Parse a full N-Triples document into a Graph (set semantics)."""
    if text.startswith("\ufeff"):
        text = text[1:]
    triples = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        t = parse_triple_line(line, lineno)
        if t is not None:
            triples.append(t)
    return Graph(triples)


def _escape_string(s: str) -> str:
    out = []
    for c in s:
        if c == "\\":
            out.append("\\\\")
        elif c == '"':
            out.append('\\"')
        elif c == "\n":
            out.append("\\n")
        elif c == "\r":
            out.append("\\r")
        elif c == "\t":
            out.append("\\t")
        elif ord(c) < 0x20:
            out.append("\\u%04X" % ord(c))
        else:
            out.append(c)
    return "".join(out)


def format_term(t: Term) -> str:
    if isinstance(t, Iri):
        return f"<{t.value}>"
    if isinstance(t, BlankNode):
        return f"_:{t.label}"
    lex = _escape_string(t.lexical)
    if t.language:
        return f'"{lex}"@{t.language}'
    if t.datatype.value == XSD_STRING:
        return f'"{lex}"'
    return f'"{lex}"^^<{t.datatype.value}>'


def format_triple(t: Triple) -> str:
    return f"{format_term(t.subject)} {format_term(t.predicate)} {format_term(t.object)} ."


def serialize_ntriples(g: Graph) -> str:
    """Canonical N-Triples: sorted statements, one per line."""
    lines = sorted(format_triple(t) for t in g.triples)
    if not lines:
        return ""
    return "\n".join(lines) + "\n"
