"""JSON documents for complexes, posets and certificates.

Complex document: {"vertices": [...], "order": [[u, v], ...] (optional,
u <= v generators), "facets": [[...], ...]}.  Poset document:
{"elements": [...], "relations": [[a, b], ...]} with a <= b.  Labels are
strings, numbers, or nested lists (product and subdivision names).
Serialization is canonical: fixed key order, canonically sorted lists,
two-space indent, trailing newline.
"""

import json

from .complexes import OrderedComplex, from_facets
from .errors import EmptyFacet, ParseError, UnknownVertex, ValidationError
from .posets import poset_from_relations
from .util import ckey, freeze, thaw


def canonical_json(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def complex_to_doc(K):
    """Serialize a plain or ordered complex."""
    order_pairs = None
    if isinstance(K, OrderedComplex):
        order_pairs = [[thaw(a), thaw(b)] for a, b in K.order.covers()]
        K = K.base
    doc = {
        "vertices": [thaw(v) for v in K.vertices],
        "facets": [list(map(thaw, f)) for f in K.facet_names()],
    }
    if order_pairs is not None:
        doc["order"] = order_pairs
    return doc


def complex_from_doc(doc):
    """Parse and validate a complex document."""
    try:
        vertices = [freeze(v) for v in doc["vertices"]]
        facets = [[freeze(v) for v in f] for f in doc["facets"]]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed complex document: {exc}") from exc
    try:
        K = from_facets(vertices, facets)
    except (UnknownVertex, EmptyFacet) as exc:
        # a facet referencing an undeclared vertex is a document defect
        raise ParseError(str(exc)) from exc
    if "order" not in doc:
        return K
    try:
        pairs = [(freeze(a), freeze(b)) for a, b in doc["order"]]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed order field: {exc}") from exc
    order = poset_from_relations(vertices, pairs)
    return OrderedComplex(K, order)


def poset_to_doc(P):
    return {
        "elements": [thaw(x) for x in P.elements],
        "relations": [[thaw(a), thaw(b)] for a, b in P.covers()],
    }


def poset_from_doc(doc):
    try:
        elements = [freeze(x) for x in doc["elements"]]
        relations = [(freeze(a), freeze(b)) for a, b in doc["relations"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed poset document: {exc}") from exc
    return poset_from_relations(elements, relations)


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def save_json(path, doc):
    with open(path, "w") as fh:
        fh.write(canonical_json(doc))


def parse_complex(path):
    """File -> validated (possibly ordered) complex."""
    doc = load_json(path)
    try:
        return complex_from_doc(doc)
    except ParseError:
        raise
    except Exception as exc:
        raise ValidationError(f"{path}: {exc}") from exc


def parse_poset(path):
    doc = load_json(path)
    try:
        return poset_from_doc(doc)
    except ParseError:
        raise
    except Exception as exc:
        raise ValidationError(f"{path}: {exc}") from exc


def map_table_to_doc(table):
    """A vertex/element map as a canonically sorted pair list."""
    return [
        [thaw(k), thaw(v)]
        for k, v in sorted(table.items(), key=lambda kv: ckey(kv[0]))
    ]


def map_table_from_doc(rows):
    try:
        return {freeze(k): freeze(v) for k, v in rows}
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed map table: {exc}") from exc
