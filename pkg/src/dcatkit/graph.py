"""Triple store with per-position pattern indexes and merge semantics.

A graph is a set of triples plus a prefix map. Triples are indexed by
subject, predicate, and object so that ``match`` only scans the smallest
candidate set. Graphs are built single-writer and may be frozen, after
which concurrent readers are safe (reads never mutate internal state).
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .terms import Term, Triple


class FrozenGraphError(RuntimeError):
    """Mutation attempted on a frozen graph."""


class Graph:
    __slots__ = ("_triples", "_by_s", "_by_p", "_by_o", "prefixes", "_frozen")

    def __init__(self, triples: Iterable[Triple] = (), prefixes: dict[str, str] | None = None):
        self._triples: set[Triple] = set()
        self._by_s: dict[Term, set[Triple]] = {}
        self._by_p: dict[Term, set[Triple]] = {}
        self._by_o: dict[Term, set[Triple]] = {}
        self.prefixes: dict[str, str] = dict(prefixes or {})
        self._frozen = False
        for t in triples:
            self.add(t)

    # -- construction -------------------------------------------------

    def add(self, triple: Triple) -> None:
        """Insert a triple; duplicates leave the graph unchanged."""
        if self._frozen:
            raise FrozenGraphError("graph is frozen")
        if triple in self._triples:
            return
        self._triples.add(triple)
        self._by_s.setdefault(triple.subject, set()).add(triple)
        self._by_p.setdefault(triple.predicate, set()).add(triple)
        self._by_o.setdefault(triple.object, set()).add(triple)

    def update(self, triples: Iterable[Triple]) -> None:
        for t in triples:
            self.add(t)

    def bind(self, prefix: str, namespace: str) -> None:
        if self._frozen:
            raise FrozenGraphError("graph is frozen")
        self.prefixes[prefix] = namespace

    def freeze(self) -> "Graph":
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    def copy(self) -> "Graph":
        """Unfrozen copy with the same triples and prefixes."""
        return Graph(self._triples, self.prefixes)

    # -- queries ------------------------------------------------------

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, triple: Triple) -> bool:
        return triple in self._triples

    def match(self, s: Term | None = None, p: Term | None = None, o: Term | None = None) -> set[Triple]:
        """Triples matching every bound position; all-unbound returns all."""
        candidates: set[Triple] | None = None
        for term, index in ((s, self._by_s), (p, self._by_p), (o, self._by_o)):
            if term is None:
                continue
            found = index.get(term, set())
            if candidates is None or len(found) < len(candidates):
                candidates = found
        if candidates is None:
            return set(self._triples)
        out = set()
        for t in candidates:
            if s is not None and t.subject != s:
                continue
            if p is not None and t.predicate != p:
                continue
            if o is not None and t.object != o:
                continue
            out.add(t)
        return out

    def subjects(self, p: Term | None = None, o: Term | None = None) -> list[Term]:
        """Distinct matching subjects in deterministic order."""
        return _sorted_terms({t.subject for t in self.match(None, p, o)})

    def objects(self, s: Term | None = None, p: Term | None = None) -> list[Term]:
        """Distinct matching objects in deterministic order."""
        return _sorted_terms({t.object for t in self.match(s, p, None)})

    def value(self, s: Term | None = None, p: Term | None = None) -> Term | None:
        """First matching object in deterministic order, or None."""
        objs = self.objects(s, p)
        return objs[0] if objs else None

    def blank_labels(self) -> set[str]:
        labels = set()
        for t in self._triples:
            if t.subject.is_blank:
                labels.add(t.subject.value)
            if t.object.is_blank:
                labels.add(t.object.value)
        return labels

    def sorted_triples(self) -> list[Triple]:
        return sorted(self._triples, key=Triple.sort_key)


def _sorted_terms(terms: set[Term]) -> list[Term]:
    return sorted(terms, key=Term.sort_key)


def _fresh_label(used: set[str], counter: int) -> tuple[str, int]:
    while True:
        label = f"b{counter}"
        counter += 1
        if label not in used:
            used.add(label)
            return label, counter


def extend(dest: Graph, src: Graph, bnode_policy: str = "rename") -> dict[str, str]:
    """Add all of ``src`` into ``dest``; returns the blank-label mapping.

    Under ``rename`` every blank label from ``src`` gets a fresh label so
    that labels shared across documents never coalesce. ``dest`` prefix
    bindings win on conflict.
    """
    if bnode_policy not in ("rename", "keep"):
        raise ValueError(f"unknown bnode policy: {bnode_policy!r}")
    mapping: dict[str, str] = {}
    if bnode_policy == "rename":
        used = dest.blank_labels() | src.blank_labels()
        counter = 0
        for label in sorted(src.blank_labels()):
            mapping[label], counter = _fresh_label(used, counter)

    def rewrite(term: Term) -> Term:
        if term.is_blank and term.value in mapping:
            return Term(term.kind, mapping[term.value])
        return term

    for t in src:
        if mapping:
            dest.add(Triple(rewrite(t.subject), t.predicate, rewrite(t.object)))
        else:
            dest.add(t)
    for prefix, ns in src.prefixes.items():
        dest.prefixes.setdefault(prefix, ns)
    return mapping


def merge(a: Graph, b: Graph, bnode_policy: str = "rename") -> Graph:
    """Union of two graphs; ``a``'s prefix bindings win on conflict."""
    out = Graph(prefixes=a.prefixes)
    extend(out, a, "keep")
    extend(out, b, bnode_policy)
    return out
