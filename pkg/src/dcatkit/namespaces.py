"""Namespace constants for the vocabularies the toolkit reads and writes."""

from __future__ import annotations

from .terms import Term, make_iri


class Namespace:
    """Attribute access mints IRI terms inside one namespace.

    ``DCAT.Dataset`` is the term ``<http://www.w3.org/ns/dcat#Dataset>``.
    """

    __slots__ = ("base",)

    def __init__(self, base: str):
        object.__setattr__(self, "base", base)

    def __getattr__(self, local: str) -> Term:
        if local.startswith("__"):
            raise AttributeError(local)
        return make_iri(self.base + local)

    def __getitem__(self, local: str) -> Term:
        return make_iri(self.base + local)

    def __contains__(self, term: Term) -> bool:
        return term.is_iri and term.value.startswith(self.base)

    def local(self, term: Term) -> str:
        return term.value[len(self.base):]

    def __repr__(self) -> str:  # pragma: no cover
        return f"Namespace({self.base!r})"


RDF = Namespace("http://www.w3.org/1999/02/22-rdf-syntax-ns#")
RDFS = Namespace("http://www.w3.org/2000/01/rdf-schema#")
XSD = Namespace("http://www.w3.org/2001/XMLSchema#")
DCAT = Namespace("http://www.w3.org/ns/dcat#")
DCTERMS = Namespace("http://purl.org/dc/terms/")
FOAF = Namespace("http://xmlns.com/foaf/0.1/")
SKOS = Namespace("http://www.w3.org/2004/02/skos/core#")
PROV = Namespace("http://www.w3.org/ns/prov#")
ADMS = Namespace("http://www.w3.org/ns/adms#")
DQV = Namespace("http://www.w3.org/ns/dqv#")
ODRL = Namespace("http://www.w3.org/ns/odrl/2/")
LOCN = Namespace("http://www.w3.org/ns/locn#")
TIME = Namespace("http://www.w3.org/2006/time#")
GEOSPARQL = Namespace("http://www.opengis.net/ont/geosparql#")
SDO = Namespace("https://schema.org/")
VCARD = Namespace("http://www.w3.org/2006/vcard/ns#")

#: Prefix bindings used for shipped data and default serializations.
WELL_KNOWN_PREFIXES: dict[str, str] = {
    "rdf": RDF.base,
    "rdfs": RDFS.base,
    "xsd": XSD.base,
    "dcat": DCAT.base,
    "dcterms": DCTERMS.base,
    "foaf": FOAF.base,
    "skos": SKOS.base,
    "prov": PROV.base,
    "adms": ADMS.base,
    "dqv": DQV.base,
    "odrl": ODRL.base,
    "locn": LOCN.base,
    "time": TIME.base,
    "geo": GEOSPARQL.base,
    "vcard": VCARD.base,
    "schema": SDO.base,
}
