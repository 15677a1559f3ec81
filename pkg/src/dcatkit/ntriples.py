"""N-Triples reader and writer: one triple per non-comment line."""

from __future__ import annotations

from .diagnostics import ParseDiagnostics
from .graph import Graph
from .terms import Term, Triple
from .turtle import TurtleSyntaxError, _Parser


class NTriplesSyntaxError(Exception):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.reason = message


def _parse_line(line_no: int, line: str) -> Triple:
    p = _Parser(line, base=None)

    def term(position: str) -> Term:
        p.skip_ws()
        ch = p.peek()
        if ch == "<":
            return p.read_iriref()
        if ch == "_" and position != "predicate":
            return p.read_blank_label()
        if ch == '"' and position == "object":
            return p.read_literal()
        raise NTriplesSyntaxError(line_no, f"bad {position} at column {p.col}")

    try:
        s = term("subject")
        pred = term("predicate")
        o = term("object")
        p.skip_ws()
        if p.peek() != ".":
            raise NTriplesSyntaxError(line_no, "missing terminating '.'")
        p.advance()
        p.skip_ws()
        if not p.at_end():
            raise NTriplesSyntaxError(line_no, "trailing content after '.'")
    except TurtleSyntaxError as exc:
        raise NTriplesSyntaxError(line_no, exc.reason) from exc
    return Triple(s, pred, o)


def parse_ntriples(text: str | bytes, strict: bool = False) -> tuple[Graph, ParseDiagnostics]:
    """Parse an N-Triples document.

    Problems are reported per line in the diagnostics; with
    ``strict=True`` the first bad line raises :class:`NTriplesSyntaxError`.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    graph = Graph()
    diagnostics = ParseDiagnostics()
    for i, line in enumerate(text.split("\n"), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            graph.add(_parse_line(i, line))
        except NTriplesSyntaxError as exc:
            if strict:
                raise
            diagnostics.error(exc.line, 0, exc.reason)
    return graph, diagnostics


def serialize_ntriples(g: Graph) -> str:
    """Sorted, deterministic N-Triples rendering."""
    lines = [t.n3() for t in g.sorted_triples()]
    return "\n".join(lines) + ("\n" if lines else "")
