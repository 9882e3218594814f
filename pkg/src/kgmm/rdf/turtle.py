"""Turtle subset parser.

Supported: ``@prefix``/``@base`` (and the SPARQL-style keywords), prefixed
names, IRIs, the ``a`` keyword, ``;``/``,`` predicate and object lists,
literals with datatype or language tag, and labelled blank nodes. Collections,
anonymous blank nodes and quoted triples are out of scope; documents using
them raise a ParseError.
"""
from __future__ import annotations

from typing import Optional

from .ntriples import ParseError, _ECHAR_DECODE
from .terms import (
    RDF_LANGSTRING,
    RDF_TYPE,
    XSD_STRING,
    BlankNode,
    Graph,
    Iri,
    Literal,
    Term,
    TermError,
    Triple,
)


class UnknownPrefixError(ParseError):
    def __init__(self, prefix: str, line: int, column: int) -> None:
        ParseError.__init__(self, f"unknown prefix {prefix!r}", line, column)
        self.prefix = prefix


_PN_LOCAL_EXTRA = set("_-.%")
_WS = " \t\r\n"


def _is_pname_char(c: str) -> bool:
    return c.isalnum() or c in _PN_LOCAL_EXTRA


class _Scanner:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def _linecol(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message: str, pos: Optional[int] = None) -> ParseError:
        line, col = self._linecol(self.pos if pos is None else pos)
        return ParseError(message, line, col)

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self) -> None:
        while not self.at_end():
            c = self.text[self.pos]
            if c in _WS:
                self.pos += 1
            elif c == "#":
                nl = self.text.find("\n", self.pos)
                self.pos = len(self.text) if nl == -1 else nl
            else:
                return

    def match_keyword(self, word: str) -> bool:
        if self.text.startswith(word, self.pos):
            end = self.pos + len(word)
            if end >= len(self.text) or not _is_pname_char(self.text[end]):
                self.pos = end
                return True
        return False

    def read_iriref(self) -> str:
        if self.peek() != "<":
            raise self.error("expected '<'")
        start = self.pos
        self.pos += 1
        out: list[str] = []
        while True:
            if self.at_end():
                raise self.error("unterminated IRI", start)
            c = self.text[self.pos]
            if c == ">":
                self.pos += 1
                return "".join(out)
            if c == "\\":
                self.pos += 1
                kind = self.peek()
                if kind not in ("u", "U"):
                    raise self.error("only \\u/\\U escapes allowed in IRIs")
                width = 4 if kind == "u" else 8
                hexpart = self.text[self.pos + 1 : self.pos + 1 + width]
                if len(hexpart) != width:
                    raise self.error("bad unicode escape")
                out.append(chr(int(hexpart, 16)))
                self.pos += 1 + width
                continue
            if c in ' "{}|^`<' or ord(c) <= 0x20:
                raise self.error(f"character {c!r} not allowed in IRI")
            out.append(c)
            self.pos += 1

    def read_string(self) -> str:
        quote = self.peek()
        if quote not in ("\"", "'"):
            raise self.error("expected string literal")
        long_quote = self.text.startswith(quote * 3, self.pos)
        delim = quote * 3 if long_quote else quote
        start = self.pos
        self.pos += len(delim)
        out: list[str] = []
        while True:
            if self.at_end():
                raise self.error("unterminated literal", start)
            if self.text.startswith(delim, self.pos):
                self.pos += len(delim)
                return "".join(out)
            c = self.text[self.pos]
            if c == "\\":
                self.pos += 1
                nxt = self.peek()
                if nxt in ("u", "U"):
                    width = 4 if nxt == "u" else 8
                    hexpart = self.text[self.pos + 1 : self.pos + 1 + width]
                    if len(hexpart) != width:
                        raise self.error("bad unicode escape")
                    out.append(chr(int(hexpart, 16)))
                    self.pos += 1 + width
                elif nxt in _ECHAR_DECODE:
                    out.append(_ECHAR_DECODE[nxt])
                    self.pos += 1
                else:
                    raise self.error(f"bad escape \\{nxt}")
                continue
            if not long_quote and c in "\n\r":
                raise self.error("newline inside literal")
            out.append(c)
            self.pos += 1

    def read_pname(self) -> tuple[str, str]:
        """Read prefix:local; returns (prefix, local)."""
        start = self.pos
        while not self.at_end() and _is_pname_char(self.text[self.pos]):
            self.pos += 1
        if self.peek() != ":":
            raise self.error("expected prefixed name", start)
        prefix = self.text[start : self.pos]
        self.pos += 1
        lstart = self.pos
        while not self.at_end() and _is_pname_char(self.text[self.pos]):
            self.pos += 1
        local = self.text[lstart : self.pos]
        # a trailing '.' terminates the statement, not the name
        while local.endswith("."):
            local = local[:-1]
            self.pos -= 1
        return prefix, local


class TurtleParser:
    def __init__(self, text: str) -> None:
        self.sc = _Scanner(text)
        self.prefixes: dict[str, str] = {}
        self.base: Optional[str] = None
        self.triples: list[Triple] = []

    def _resolve(self, iri: str, pos: int) -> Iri:
        if ":" not in iri and self.base:
            iri = self.base + iri
        try:
            return Iri(iri)
        except TermError as exc:
            raise self.sc.error(str(exc), pos)

    def _expand(self, prefix: str, local: str, pos: int) -> Iri:
        if prefix not in self.prefixes:
            line, col = self.sc._linecol(pos)
            raise UnknownPrefixError(prefix, line, col)
        return Iri(self.prefixes[prefix] + local)

    def parse(self) -> Graph:
        sc = self.sc
        while True:
            sc.skip_ws()
            if sc.at_end():
                break
            if sc.match_keyword("@prefix") or sc.match_keyword("PREFIX") or sc.match_keyword("prefix"):
                self._parse_prefix(directive_at=sc.pos, sparql_style=not self.sc.text.startswith("@", sc.pos - 7))
                continue
            if sc.match_keyword("@base") or sc.match_keyword("BASE") or sc.match_keyword("base"):
                self._parse_base()
                continue
            self._parse_statement()
        return Graph(self.triples)

    def _parse_prefix(self, directive_at: int, sparql_style: bool) -> None:
        sc = self.sc
        sc.skip_ws()
        prefix, local = "", ""
        start = sc.pos
        while not sc.at_end() and _is_pname_char(sc.text[sc.pos]):
            sc.pos += 1
        prefix = sc.text[start : sc.pos]
        if sc.peek() != ":":
            raise sc.error("expected ':' in prefix declaration")
        sc.pos += 1
        sc.skip_ws()
        iri = sc.read_iriref()
        sc.skip_ws()
        if sc.peek() == ".":
            sc.pos += 1
        self.prefixes[prefix] = (self.base or "") + iri if ":" not in iri and self.base else iri

    def _parse_base(self) -> None:
        sc = self.sc
        sc.skip_ws()
        self.base = sc.read_iriref()
        sc.skip_ws()
        if sc.peek() == ".":
            sc.pos += 1

    def _read_term(self, position: str) -> Term:
        sc = self.sc
        c = sc.peek()
        pos = sc.pos
        if c == "<":
            return self._resolve(sc.read_iriref(), pos)
        if c == "_" and sc.text.startswith("_:", sc.pos):
            sc.pos += 2
            start = sc.pos
            while not sc.at_end() and _is_pname_char(sc.text[sc.pos]):
                sc.pos += 1
            label = sc.text[start : sc.pos]
            while label.endswith("."):
                label = label[:-1]
                sc.pos -= 1
            if not label:
                raise sc.error("blank node label expected")
            return BlankNode(label)
        if position == "object" and c in ("\"", "'"):
            lexical = sc.read_string()
            if sc.peek() == "@":
                sc.pos += 1
                start = sc.pos
                while not sc.at_end() and (sc.text[sc.pos].isalnum() or sc.text[sc.pos] == "-"):
                    sc.pos += 1
                tag = sc.text[start : sc.pos]
                if not tag:
                    raise sc.error("malformed language tag")
                return Literal(lexical, Iri(RDF_LANGSTRING), tag)
            if sc.text.startswith("^^", sc.pos):
                sc.pos += 2
                sc.skip_ws()
                dpos = sc.pos
                if sc.peek() == "<":
                    return Literal(lexical, self._resolve(sc.read_iriref(), dpos))
                prefix, local = sc.read_pname()
                return Literal(lexical, self._expand(prefix, local, dpos))
            return Literal(lexical, Iri(XSD_STRING))
        if c in ("[", "("):
            raise sc.error("blank node property lists and collections are not supported")
        prefix, local = sc.read_pname()
        return self._expand(prefix, local, pos)

    def _parse_statement(self) -> None:
        sc = self.sc
        subject = self._read_term("subject")
        if isinstance(subject, Literal):
            raise sc.error("literal in subject position")
        while True:
            sc.skip_ws()
            if sc.match_keyword("a"):
                predicate: Iri = Iri(RDF_TYPE)
            else:
                ppos = sc.pos
                pred = self._read_term("predicate")
                if not isinstance(pred, Iri):
                    raise sc.error("predicate must be an IRI", ppos)
                predicate = pred
            while True:
                sc.skip_ws()
                obj = self._read_term("object")
                self.triples.append(Triple(subject, predicate, obj))
                sc.skip_ws()
                if sc.peek() == ",":
                    sc.pos += 1
                    continue
                break
            if sc.peek() == ";":
                sc.pos += 1
                sc.skip_ws()
                # a dangling ';' before '.' is legal Turtle
                if sc.peek() == ".":
                    sc.pos += 1
                    return
                continue
            if sc.peek() == ".":
                sc.pos += 1
                return
            raise sc.error("expected ';', ',' or '.'")


def parse_turtle(text: str) -> Graph:
    """Parse the supported Turtle subset into a Graph."""
    if text.startswith("\ufeff"):
        text = text[1:]
    return TurtleParser(text).parse()
