"""Fixed-context JSON-LD emission for Schema.org graphs.

Only emission is supported: the document always carries the single
context ``https://schema.org/`` and every predicate must live in that
namespace (``rdf:type`` becomes ``@type``). Node objects are nested along
the first deterministic reference to each subject; later references fall
back to ``{"@id": ...}``.
"""

from __future__ import annotations

import json

from .graph import Graph
from .namespaces import SDO, XSD
from .terms import Term
from .turtle import RDF_TYPE

CONTEXT = "https://schema.org/"


class UnmappedTerm(ValueError):
    """Graph uses a term outside the fixed Schema.org context."""


def _local(term: Term) -> str:
    if term not in SDO:
        raise UnmappedTerm(f"term outside the Schema.org context: {term.value}")
    return SDO.local(term)


def _literal_value(term: Term):
    dt = term.datatype
    if term.language is not None:
        return {"@value": term.value, "@language": term.language}
    if dt == XSD.integer.value:
        try:
            return int(term.value)
        except ValueError:
            return term.value
    if dt == XSD.boolean.value and term.value in ("true", "false"):
        return term.value == "true"
    return term.value


def emit_jsonld(g: Graph) -> str:
    """Render the graph as a JSON-LD document with the Schema.org context."""
    subjects = sorted({t.subject for t in g}, key=Term.sort_key)
    objects = {t.object for t in g}
    ref_counts: dict[Term, int] = {}
    for t in g:
        if not t.object.is_literal:
            ref_counts[t.object] = ref_counts.get(t.object, 0) + 1

    emitted: set[Term] = set()

    def node_object(subject: Term) -> dict:
        emitted.add(subject)
        node: dict = {}
        if subject.is_iri:
            node["@id"] = subject.value
        elif ref_counts.get(subject, 0) > 1:
            node["@id"] = f"_:{subject.value}"
        types = sorted(
            (_local(o) for o in g.objects(subject, RDF_TYPE) if o.is_iri),
        )
        if types:
            node["@type"] = types[0] if len(types) == 1 else types
        by_pred: dict[Term, list[Term]] = {}
        for t in g.match(s=subject):
            if t.predicate == RDF_TYPE:
                continue
            by_pred.setdefault(t.predicate, []).append(t.object)
        for pred in sorted(by_pred, key=lambda p: _local(p)):
            values = [value(o) for o in sorted(by_pred[pred], key=Term.sort_key)]
            node[_local(pred)] = values[0] if len(values) == 1 else values
        return node

    def value(obj: Term):
        if obj.is_literal:
            return _literal_value(obj)
        if obj in subjects_set and obj not in emitted:
            return node_object(obj)
        if obj.is_iri:
            return {"@id": obj.value}
        return {"@id": f"_:{obj.value}"}

    subjects_set = set(subjects)
    roots = [s for s in subjects if s not in objects] or subjects
    top = [node_object(s) for s in roots if s not in emitted]
    # Subjects only reachable through cycles still need a home.
    top.extend(node_object(s) for s in subjects if s not in emitted)

    doc: dict = {"@context": CONTEXT}
    if len(top) == 1:
        doc.update(top[0])
    elif top:
        doc["@graph"] = top
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
