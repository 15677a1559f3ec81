"""Canonical blank-node labeling and graph isomorphism.

Blank nodes are colored by iterated hashing of their neighborhood
(predicate, direction, and the other end's ground form or current color)
until the partition stabilizes. Remaining ties are broken by
individuating each member of the first tied class in turn and keeping
the lexicographically smallest resulting document, so automorphic graphs
still canonicalize deterministically. Intended for the small graphs this
toolkit handles; worst-case behavior on adversarial graphs is exponential.
"""

from __future__ import annotations

import hashlib
from .graph import Graph
from .terms import Term, Triple


def _h(*parts: str) -> str:
    return hashlib.sha256("\x1f".join(parts).encode("utf-8")).hexdigest()


def _signature(g: Graph, colors: dict[str, str]) -> dict[str, str]:
    sigs: dict[str, list[str]] = {label: [] for label in colors}

    def end_repr(term: Term) -> str:
        if term.is_blank:
            return "~" + colors[term.value]
        return term.n3()

    for t in g:
        if t.subject.is_blank:
            sigs[t.subject.value].append(_h("out", t.predicate.value, end_repr(t.object)))
        if t.object.is_blank:
            sigs[t.object.value].append(_h("in", t.predicate.value, end_repr(t.subject)))
    return {label: _h(colors[label], *sorted(parts)) for label, parts in sigs.items()}


def _refine(g: Graph, colors: dict[str, str]) -> dict[str, str]:
    while True:
        new = _signature(g, colors)
        if _partition(new) == _partition(colors):
            return new
        colors = new


def _partition(colors: dict[str, str]) -> list[tuple[str, ...]]:
    groups: dict[str, list[str]] = {}
    for label, color in colors.items():
        groups.setdefault(color, []).append(label)
    return sorted(tuple(sorted(v)) for v in groups.values())


def _relabeled_lines(g: Graph, colors: dict[str, str]) -> list[str]:
    order = sorted(colors, key=lambda lb: (colors[lb], lb))
    names = {label: f"c{i}" for i, label in enumerate(order)}

    def rewrite(term: Term) -> Term:
        if term.is_blank:
            return Term(term.kind, names[term.value])
        return term

    return sorted(
        Triple(rewrite(t.subject), t.predicate, rewrite(t.object)).n3() for t in g
    )


def _canonical_lines(g: Graph, colors: dict[str, str]) -> list[str]:
    colors = _refine(g, colors)
    groups: dict[str, list[str]] = {}
    for label, color in colors.items():
        groups.setdefault(color, []).append(label)
    tied = sorted((c for c, members in groups.items() if len(members) > 1))
    if not tied:
        return _relabeled_lines(g, colors)
    # Individuate each member of the first tied class; keep the smallest doc.
    members = sorted(groups[tied[0]])
    best: list[str] | None = None
    for label in members:
        trial = dict(colors)
        trial[label] = _h("pick", trial[label])
        lines = _canonical_lines(g, trial)
        if best is None or lines < best:
            best = lines
    assert best is not None
    return best


def canonical_ntriples(g: Graph) -> str:
    """Deterministic N-Triples document with canonical blank labels.

    Two graphs are isomorphic exactly when their canonical documents are
    byte-identical.
    """
    colors = {label: _h("init") for label in g.blank_labels()}
    return "\n".join(_canonical_lines(g, colors))


def isomorphic(a: Graph, b: Graph) -> bool:
    if len(a) != len(b):
        return False
    return canonical_ntriples(a) == canonical_ntriples(b)
