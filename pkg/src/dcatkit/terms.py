"""RDF term and triple model.

Terms compare lexically: two literals are equal only when their lexical
forms, datatypes, and language tags are character-for-character equal.
Value-space reasoning (e.g. "01" vs "1" as integers) is deliberately left
to the validator's datatype checks.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

IRI = "iri"
BLANK = "blank"
LITERAL = "literal"

XSD_STRING = "http://www.w3.org/2001/XMLSchema#string"
RDF_LANGSTRING = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString"

# Pragmatic RFC 3987 subset: a scheme, then no whitespace/control characters
# and none of the characters the N-Triples IRIREF production excludes.
_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_IRI_BAD_CHARS = set(' <>"{}|^`\\') | {chr(c) for c in range(0x21)}

_LANG_TAG_RE = re.compile(r"^[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*$")
_BLANK_LABEL_RE = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_.\-]*$")

_KIND_ORDER = {IRI: 0, BLANK: 1, LITERAL: 2}


class InvalidIri(ValueError):
    """Lexical form is not an acceptable absolute IRI."""


class InvalidLanguageTag(ValueError):
    """Language tag does not match the BCP-47 shape."""


class DatatypeLanguageClash(ValueError):
    """A literal cannot carry both an explicit datatype and a language tag."""


class InvalidTriple(ValueError):
    """Triple positions violate the RDF data model."""


@dataclass(frozen=True, slots=True)
class Term:
    """An RDF term: IRI, blank node, or literal.

    ``value`` holds the IRI text, the blank-node label, or the literal's
    lexical form depending on ``kind``. ``datatype``/``language`` are set
    for literals only; language is present exactly when the datatype is
    ``rdf:langString``.
    """

    kind: str
    value: str
    datatype: str | None = None
    language: str | None = None

    @property
    def is_iri(self) -> bool:
        return self.kind == IRI

    @property
    def is_blank(self) -> bool:
        return self.kind == BLANK

    @property
    def is_literal(self) -> bool:
        return self.kind == LITERAL

    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.value, self.datatype or "", self.language or "")

    def n3(self) -> str:
        """N-Triples rendering of the term."""
        if self.kind == IRI:
            return f"<{self.value}>"
        if self.kind == BLANK:
            return f"_:{self.value}"
        out = f'"{escape_literal(self.value)}"'
        if self.language is not None:
            return f"{out}@{self.language}"
        if self.datatype != XSD_STRING:
            return f"{out}^^<{self.datatype}>"
        return out

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Term({self.n3()})"


def escape_literal(text: str) -> str:
    """Escape a literal lexical form for Turtle / N-Triples output."""
    out = []
    for ch in text:
        if ch == "\\":
            out.append("\\\\")
        elif ch == '"':
            out.append('\\"')
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\r":
            out.append("\\r")
        elif ch == "\t":
            out.append("\\t")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


def iri_ok(lexical: str) -> bool:
    """Whether a string passes the pragmatic absolute-IRI check."""
    if not _SCHEME_RE.match(lexical):
        return False
    return not any(ch in _IRI_BAD_CHARS for ch in lexical)


def make_iri(lexical: str) -> Term:
    """Build an IRI term, enforcing the pragmatic RFC 3987 subset."""
    if not _SCHEME_RE.match(lexical):
        raise InvalidIri(f"not an absolute IRI (no scheme): {lexical!r}")
    for ch in lexical:
        if ch in _IRI_BAD_CHARS:
            raise InvalidIri(f"illegal character {ch!r} in IRI: {lexical!r}")
    return Term(IRI, lexical)


def make_bnode(label: str) -> Term:
    if not _BLANK_LABEL_RE.match(label):
        raise ValueError(f"bad blank node label: {label!r}")
    return Term(BLANK, label)


def make_literal(
    lexical: str,
    datatype: str | Term | None = None,
    language: str | None = None,
) -> Term:
    """Build a literal term.

    With neither datatype nor language the datatype defaults to
    ``xsd:string``; a language tag forces ``rdf:langString``.
    """
    if datatype is not None and language is not None:
        raise DatatypeLanguageClash("literal cannot have both datatype and language")
    if isinstance(datatype, Term):
        if not datatype.is_iri:
            raise ValueError("literal datatype must be an IRI term")
        datatype = datatype.value
    if language is not None:
        if not _LANG_TAG_RE.match(language):
            raise InvalidLanguageTag(f"bad language tag: {language!r}")
        return Term(LITERAL, lexical, RDF_LANGSTRING, language)
    return Term(LITERAL, lexical, datatype or XSD_STRING)


@dataclass(frozen=True, slots=True)
class Triple:
    subject: Term
    predicate: Term
    object: Term

    def __post_init__(self) -> None:
        if self.subject.is_literal:
            raise InvalidTriple("triple subject cannot be a literal")
        if not self.predicate.is_iri:
            raise InvalidTriple("triple predicate must be an IRI")

    def sort_key(self) -> tuple:
        return (self.subject.sort_key(), self.predicate.sort_key(), self.object.sort_key())

    def n3(self) -> str:
        return f"{self.subject.n3()} {self.predicate.n3()} {self.object.n3()} ."

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Triple({self.n3()})"
