"""Turtle reader and writer.

The reader is a hand-rolled recursive-descent parser covering the
constructs catalog documents actually use: prefix/base directives (both
``@`` and SPARQL styles), ``a``, predicate and object lists, blank-node
property lists, collections, numeric/boolean literals, the four string
quoting forms with escapes, language tags, typed literals, and
relative-IRI resolution. It never raises on malformed input by default:
problems are reported through :class:`ParseDiagnostics` and parsing stops
at the first fatal error, returning the triples read so far.

The writer emits a deterministic document: subjects ordered IRIs-then-
blanks, predicates and objects sorted lexically, IRIs compacted through
the graph's prefix map when the local part is safe.
"""

from __future__ import annotations

import re
from urllib.parse import urljoin

from .diagnostics import ParseDiagnostics
from .graph import Graph
from .namespaces import RDF, XSD
from .terms import (
    RDF_LANGSTRING,
    XSD_STRING,
    Term,
    Triple,
    escape_literal,
    iri_ok,
    make_bnode,
    make_literal,
)

RDF_TYPE = RDF.type
RDF_FIRST = RDF.first
RDF_REST = RDF.rest
RDF_NIL = RDF.nil


class TurtleSyntaxError(Exception):
    """Fatal syntax problem, with 1-based line and column."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class BaseRequired(TurtleSyntaxError):
    """Relative IRI encountered with no base to resolve against."""


_ESCAPES = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_LOCAL_ESCAPABLE = set("_~.-!$&'()*+,;=/?#@%")
_INTEGER_RE = re.compile(r"[+-]?[0-9]+")
_DECIMAL_RE = re.compile(r"[+-]?[0-9]*\.[0-9]+")
_DOUBLE_RE = re.compile(r"[+-]?(?:[0-9]+\.[0-9]*|\.?[0-9]+)[eE][+-]?[0-9]+")
_LANGTAG_RE = re.compile(r"[a-zA-Z]+(?:-[a-zA-Z0-9]+)*")


def _is_local_char(ch: str) -> bool:
    return ch.isalnum() or ord(ch) > 0x7F or ch in "_-.:%"


def _is_prefix_char(ch: str) -> bool:
    return ch.isalnum() or ord(ch) > 0x7F or ch in "_-."


class _Parser:
    def __init__(self, text: str, base: str | None):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1
        self.base = base
        self.graph = Graph()
        self.diagnostics = ParseDiagnostics()
        self._anon = 0
        # Generated labels must never collide with document labels, which
        # can only arise from "_:<label>" in the source text.
        stem = "anon"
        while f"_:{stem}-" in text:
            stem += "x"
        self._anon_stem = stem

    # -- low-level scanning -------------------------------------------

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self, ahead: int = 0) -> str:
        i = self.pos + ahead
        return self.text[i] if i < len(self.text) else ""

    def advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        if ch == "\n":
            self.line += 1
            self.col = 1
        else:
            self.col += 1
        return ch

    def error(self, message: str, line: int | None = None, col: int | None = None) -> TurtleSyntaxError:
        return TurtleSyntaxError(line or self.line, col or self.col, message)

    def skip_ws(self) -> None:
        while not self.at_end():
            ch = self.peek()
            if ch in " \t\r\n":
                self.advance()
            elif ch == "#":
                while not self.at_end() and self.peek() != "\n":
                    self.advance()
            else:
                return

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise self.error(f"expected {ch!r}, found {self.peek()!r}")
        self.advance()

    def match_keyword(self, word: str, case_insensitive: bool = False) -> bool:
        """Consume ``word`` if present at the cursor followed by a boundary."""
        end = self.pos + len(word)
        chunk = self.text[self.pos:end]
        if case_insensitive:
            hit = chunk.lower() == word.lower()
        else:
            hit = chunk == word
        if not hit:
            return False
        nxt = self.text[end:end + 1]
        if nxt and (nxt.isalnum() or nxt in "_:"):
            return False
        for _ in word:
            self.advance()
        return True

    # -- escapes -------------------------------------------------------

    def read_uchar(self) -> str:
        kind = self.advance()  # 'u' or 'U'
        width = 4 if kind == "u" else 8
        digits = ""
        for _ in range(width):
            if self.at_end() or self.peek() not in "0123456789abcdefABCDEF":
                raise self.error(f"bad \\{kind} escape")
            digits += self.advance()
        code = int(digits, 16)
        if code > 0x10FFFF:
            raise self.error("escape beyond Unicode range")
        return chr(code)

    # -- terminals ------------------------------------------------------

    def read_iriref(self) -> Term:
        line, col = self.line, self.col
        self.expect("<")
        out = []
        while True:
            if self.at_end():
                raise self.error("unterminated IRI", line, col)
            ch = self.advance()
            if ch == ">":
                break
            if ch == "\\":
                nxt = self.peek()
                if nxt in ("u", "U"):
                    out.append(self.read_uchar())
                    continue
                raise self.error("bad escape in IRI", line, col)
            if ord(ch) <= 0x20 or ch in '<"{}|^`':
                raise self.error(f"illegal character {ch!r} in IRI", line, col)
            out.append(ch)
        return self.resolve_iri("".join(out), line, col)

    def resolve_iri(self, text: str, line: int, col: int) -> Term:
        if not re.match(r"^[A-Za-z][A-Za-z0-9+.\-]*:", text):
            if self.base is None:
                raise BaseRequired(line, col, f"relative IRI {text!r} and no base given")
            text = urljoin(self.base, text)
        if not iri_ok(text):
            raise self.error(f"not a valid IRI: {text!r}", line, col)
        return Term("iri", text)

    def read_prefixed_name(self) -> Term:
        line, col = self.line, self.col
        prefix = []
        while not self.at_end() and _is_prefix_char(self.peek()) and self.peek() != ":":
            prefix.append(self.advance())
        if self.peek() != ":":
            raise self.error("expected ':' in prefixed name", line, col)
        self.advance()
        prefix_str = "".join(prefix)
        if prefix_str.endswith("."):
            raise self.error("prefix label cannot end with '.'", line, col)
        local: list[str] = []
        escaped: list[bool] = []
        while not self.at_end():
            ch = self.peek()
            if ch == "\\":
                self.advance()
                nxt = self.peek()
                if nxt in _LOCAL_ESCAPABLE:
                    local.append(self.advance())
                    escaped.append(True)
                    continue
                raise self.error("bad local-name escape")
            if _is_local_char(ch):
                local.append(self.advance())
                escaped.append(False)
                continue
            break
        # A trailing unescaped '.' terminates the statement, not the name.
        while local and local[-1] == "." and not escaped[-1]:
            local.pop()
            escaped.pop()
            self.pos -= 1
            self.col -= 1
        if prefix_str not in self.graph.prefixes:
            raise self.error(f"undeclared prefix {prefix_str!r}:", line, col)
        iri = self.graph.prefixes[prefix_str] + "".join(local)
        if not iri_ok(iri):
            raise self.error(f"prefixed name expands to invalid IRI: {iri!r}", line, col)
        return Term("iri", iri)

    def read_blank_label(self) -> Term:
        line, col = self.line, self.col
        self.advance()  # '_'
        if self.peek() != ":":
            raise self.error("expected ':' after '_'", line, col)
        self.advance()
        label = []
        while not self.at_end():
            ch = self.peek()
            if ch.isalnum() or ch in "_-." or ord(ch) > 0x7F:
                label.append(self.advance())
            else:
                break
        while label and label[-1] == ".":
            label.pop()
            self.pos -= 1
            self.col -= 1
        if not label:
            raise self.error("empty blank node label", line, col)
        return Term("blank", "".join(label))

    def fresh_bnode(self) -> Term:
        label = f"{self._anon_stem}-{self._anon}"
        self._anon += 1
        return Term("blank", label)

    def read_string(self) -> str:
        quote = self.peek()
        long = self.text[self.pos:self.pos + 3] in ('"""', "'''")
        line, col = self.line, self.col
        if long:
            for _ in range(3):
                self.advance()
        else:
            self.advance()
        out = []
        while True:
            if self.at_end():
                raise self.error("unterminated string", line, col)
            ch = self.peek()
            if long:
                if self.text[self.pos:self.pos + 3] == quote * 3:
                    for _ in range(3):
                        self.advance()
                    return "".join(out)
                self.advance()
                if ch == "\\":
                    out.append(self.read_escape(line, col))
                else:
                    out.append(ch)
            else:
                if ch == quote:
                    self.advance()
                    return "".join(out)
                if ch in "\n\r":
                    raise self.error("newline in single-quoted string", line, col)
                self.advance()
                if ch == "\\":
                    out.append(self.read_escape(line, col))
                else:
                    out.append(ch)

    def read_escape(self, line: int, col: int) -> str:
        if self.at_end():
            raise self.error("dangling backslash", line, col)
        nxt = self.peek()
        if nxt in ("u", "U"):
            return self.read_uchar()
        self.advance()
        if nxt in _ESCAPES:
            return _ESCAPES[nxt]
        raise self.error(f"unknown string escape \\{nxt}", line, col)

    def read_literal(self) -> Term:
        lexical = self.read_string()
        if self.peek() == "@":
            self.advance()
            m = _LANGTAG_RE.match(self.text, self.pos)
            if not m:
                raise self.error("bad language tag")
            for _ in m.group(0):
                self.advance()
            return Term("literal", lexical, RDF_LANGSTRING, m.group(0))
        if self.peek() == "^" and self.peek(1) == "^":
            self.advance()
            self.advance()
            self.skip_ws()
            if self.peek() == "<":
                dt = self.read_iriref()
            else:
                dt = self.read_prefixed_name()
            if dt.value == RDF_LANGSTRING:
                raise self.error("rdf:langString requires a language tag, not ^^")
            return Term("literal", lexical, dt.value)
        return Term("literal", lexical, XSD_STRING)

    def read_number(self) -> Term:
        start = self.pos
        for regex, datatype in (
            (_DOUBLE_RE, XSD.double.value),
            (_DECIMAL_RE, XSD.decimal.value),
            (_INTEGER_RE, XSD.integer.value),
        ):
            m = regex.match(self.text, start)
            if m:
                for _ in m.group(0):
                    self.advance()
                return Term("literal", m.group(0), datatype)
        raise self.error("malformed number")

    # -- grammar --------------------------------------------------------

    def parse_document(self) -> None:
        while True:
            self.skip_ws()
            if self.at_end():
                return
            if self.peek() == "@":
                self.parse_at_directive()
            elif self.match_keyword("PREFIX", case_insensitive=True):
                self.parse_prefix(sparql_style=True)
            elif self.match_keyword("BASE", case_insensitive=True):
                self.parse_base(sparql_style=True)
            else:
                self.parse_triples()
                self.skip_ws()
                self.expect(".")

    def parse_at_directive(self) -> None:
        line, col = self.line, self.col
        self.advance()  # '@'
        if self.match_keyword("prefix"):
            self.parse_prefix(sparql_style=False)
        elif self.match_keyword("base"):
            self.parse_base(sparql_style=False)
        else:
            raise self.error("unknown directive", line, col)

    def parse_prefix(self, sparql_style: bool) -> None:
        self.skip_ws()
        line, col = self.line, self.col
        prefix = []
        while not self.at_end() and _is_prefix_char(self.peek()):
            prefix.append(self.advance())
        if self.peek() != ":":
            raise self.error("expected ':' in @prefix", line, col)
        self.advance()
        self.skip_ws()
        iri = self.read_iriref()
        prefix_str = "".join(prefix)
        old = self.graph.prefixes.get(prefix_str)
        if old is not None and old != iri.value:
            self.diagnostics.warn(line, col, f"prefix {prefix_str!r} re-declared from <{old}> to <{iri.value}>")
        self.graph.bind(prefix_str, iri.value)
        if not sparql_style:
            self.skip_ws()
            self.expect(".")

    def parse_base(self, sparql_style: bool) -> None:
        self.skip_ws()
        iri = self.read_iriref()
        self.base = iri.value
        if not sparql_style:
            self.skip_ws()
            self.expect(".")

    def parse_triples(self) -> None:
        self.skip_ws()
        ch = self.peek()
        if ch == "[":
            subject = self.parse_bnode_property_list()
            self.skip_ws()
            if self.peek() != ".":
                self.parse_predicate_object_list(subject)
        else:
            subject = self.parse_subject()
            self.parse_predicate_object_list(subject)

    def parse_subject(self) -> Term:
        self.skip_ws()
        ch = self.peek()
        if ch == "<":
            return self.read_iriref()
        if ch == "_":
            return self.read_blank_label()
        if ch == "(":
            return self.parse_collection()
        if self.at_end():
            raise self.error("unexpected end of input, expected subject")
        return self.read_prefixed_name()

    def parse_predicate_object_list(self, subject: Term) -> None:
        while True:
            self.skip_ws()
            predicate = self.parse_verb()
            self.parse_object_list(subject, predicate)
            self.skip_ws()
            if self.peek() != ";":
                return
            while self.peek() == ";":
                self.advance()
                self.skip_ws()
            if self.peek() in (".", "]", "") or self.at_end():
                return

    def parse_verb(self) -> Term:
        ch = self.peek()
        if ch == "<":
            return self.read_iriref()
        if ch == "a" and (self.peek(1) in " \t\r\n<[(#\"'" or self.peek(1) == ""):
            self.advance()
            return RDF_TYPE
        if self.at_end():
            raise self.error("unexpected end of input, expected predicate")
        return self.read_prefixed_name()

    def parse_object_list(self, subject: Term, predicate: Term) -> None:
        while True:
            obj = self.parse_object()
            self.graph.add(Triple(subject, predicate, obj))
            self.skip_ws()
            if self.peek() == ",":
                self.advance()
                self.skip_ws()
                continue
            return

    def parse_object(self) -> Term:
        self.skip_ws()
        ch = self.peek()
        if ch == "<":
            return self.read_iriref()
        if ch == "_":
            return self.read_blank_label()
        if ch == "[":
            return self.parse_bnode_property_list()
        if ch == "(":
            return self.parse_collection()
        if ch in "\"'":
            return self.read_literal()
        if ch.isdigit() or ch in "+-" or (ch == "." and self.peek(1).isdigit()):
            return self.read_number()
        if self.match_keyword("true"):
            return Term("literal", "true", XSD.boolean.value)
        if self.match_keyword("false"):
            return Term("literal", "false", XSD.boolean.value)
        if self.at_end():
            raise self.error("unexpected end of input, expected object")
        return self.read_prefixed_name()

    def parse_bnode_property_list(self) -> Term:
        self.expect("[")
        node = self.fresh_bnode()
        self.skip_ws()
        if self.peek() == "]":
            self.advance()
            return node
        self.parse_predicate_object_list(node)
        self.skip_ws()
        self.expect("]")
        return node

    def parse_collection(self) -> Term:
        self.expect("(")
        items = []
        while True:
            self.skip_ws()
            if self.peek() == ")":
                self.advance()
                break
            if self.at_end():
                raise self.error("unterminated collection")
            items.append(self.parse_object())
        if not items:
            return RDF_NIL
        head = self.fresh_bnode()
        node = head
        for i, item in enumerate(items):
            self.graph.add(Triple(node, RDF_FIRST, item))
            if i == len(items) - 1:
                self.graph.add(Triple(node, RDF_REST, RDF_NIL))
            else:
                nxt = self.fresh_bnode()
                self.graph.add(Triple(node, RDF_REST, nxt))
                node = nxt
        return head

def parse_turtle(
    text: str | bytes,
    base: str | None = None,
    strict: bool = False,
) -> tuple[Graph, ParseDiagnostics]:
    """Parse a Turtle document.

    Returns the graph plus diagnostics; with ``strict=True`` the first
    fatal problem raises :class:`TurtleSyntaxError` (or
    :class:`BaseRequired`) instead of being recorded.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    parser = _Parser(text, base)
    try:
        parser.parse_document()
    except TurtleSyntaxError as exc:
        if strict:
            raise
        parser.diagnostics.error(exc.line, exc.column, exc.reason)
    except RecursionError:
        if strict:
            raise
        parser.diagnostics.error(parser.line, parser.col, "nesting too deep")
    return parser.graph, parser.diagnostics


# ---------------------------------------------------------------------------
# Serializer
# ---------------------------------------------------------------------------

_SAFE_LOCAL_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_\-]*$")


def _compact(iri: str, prefixes: dict[str, str]) -> str | None:
    best: tuple[str, str] | None = None
    for prefix, ns in prefixes.items():
        if iri.startswith(ns) and len(ns) > (len(best[1]) if best else 0):
            local = iri[len(ns):]
            if local == "" or _SAFE_LOCAL_RE.match(local):
                best = (prefix, ns)
    if best is None:
        return None
    return f"{best[0]}:{iri[len(best[1]):]}"


def _term_turtle(term: Term, prefixes: dict[str, str]) -> str:
    if term.is_iri:
        compacted = _compact(term.value, prefixes)
        return compacted if compacted is not None else f"<{term.value}>"
    if term.is_blank:
        return f"_:{term.value}"
    out = f'"{escape_literal(term.value)}"'
    if term.language is not None:
        return f"{out}@{term.language}"
    if term.datatype == XSD_STRING:
        return out
    dt = _compact(term.datatype or "", prefixes)
    return f"{out}^^{dt}" if dt is not None else f"{out}^^<{term.datatype}>"


def serialize_turtle(g: Graph) -> str:
    """Deterministic Turtle rendering of the graph.

    Output is grouped by subject with predicates and objects sorted, so
    serializing the same graph twice is byte-identical, and the text
    re-parses to an isomorphic graph.
    """
    prefixes = {p: ns for p, ns in g.prefixes.items() if _SAFE_LOCAL_RE.match(p) or p == ""}
    lines = [f"@prefix {p}: <{ns}> ." for p, ns in sorted(prefixes.items())]
    if lines:
        lines.append("")

    by_subject: dict[Term, dict[Term, list[Term]]] = {}
    for t in g:
        by_subject.setdefault(t.subject, {}).setdefault(t.predicate, []).append(t.object)

    for subject in sorted(by_subject, key=Term.sort_key):
        preds = by_subject[subject]
        subj_txt = _term_turtle(subject, prefixes)
        parts = []
        for pred in sorted(preds, key=Term.sort_key):
            pred_txt = "a" if pred == RDF_TYPE else _term_turtle(pred, prefixes)
            objs = ", ".join(
                _term_turtle(o, prefixes) for o in sorted(preds[pred], key=Term.sort_key)
            )
            parts.append(f"{pred_txt} {objs}")
        joiner = " ;\n" + " " * (len(subj_txt) + 1)
        lines.append(f"{subj_txt} {joiner.join(parts)} .")
    return "\n".join(lines) + ("\n" if lines else "")
