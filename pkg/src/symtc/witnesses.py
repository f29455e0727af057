"""Certificate types: contiguity chains, combinatorial homotopies, sections.

Every certificate is self-contained: it carries its source and target, the
naming depth of the source's vertices/elements (how many subdivision levels
sit above the base power), and whether the symmetric conditions are claimed.
``projection_endpoints`` marks certificates whose final maps are claimed to
be the canonical projection family of a tower; the checker can then recompute
those endpoints from the names alone.
"""

from dataclasses import dataclass

from .errors import ParseError
from .io import (
    complex_from_doc,
    complex_to_doc,
    map_table_from_doc,
    map_table_to_doc,
    poset_from_doc,
    poset_to_doc,
)
from .posets import multi_fence
from .util import ckey, freeze, thaw


@dataclass
class ContiguityChain:
    """Map tuples T^0 .. T^c; T^0 diagonal, consecutive tuples 1-contiguous."""

    n: int
    depth: int
    symmetric: bool
    source: object  # SimplicialComplex
    target: object  # OrderedComplex (order needed to recompute projections)
    levels: list  # levels[l][j-1] : vertex map dict
    projection_endpoints: bool = False

    @property
    def c(self):
        return len(self.levels) - 1

    def to_doc(self):
        return {
            "type": "contiguity_chain",
            "n": self.n,
            "depth": self.depth,
            "symmetric": self.symmetric,
            "projection_endpoints": self.projection_endpoints,
            "source": complex_to_doc(self.source),
            "target": complex_to_doc(self.target),
            "levels": [
                [map_table_to_doc(m) for m in level] for level in self.levels
            ],
        }

    @classmethod
    def from_doc(cls, doc):
        try:
            return cls(
                n=int(doc["n"]),
                depth=int(doc["depth"]),
                symmetric=bool(doc["symmetric"]),
                projection_endpoints=bool(doc.get("projection_endpoints", False)),
                source=complex_from_doc(doc["source"]),
                target=complex_from_doc(doc["target"]),
                levels=[
                    [map_table_from_doc(m) for m in level]
                    for level in doc["levels"]
                ],
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed contiguity chain: {exc}") from exc


def fence_point_to_doc(t):
    l, j = t
    return 0 if l == 0 else [l, j]


def fence_point_from_doc(t):
    if t == 0:
        return (0, 0)
    l, j = t
    return (int(l), int(j))


@dataclass
class CombinatorialHomotopy:
    """An order preserving table H : Q x J_{n,m} -> P interpolating n maps."""

    n: int
    m: int
    depth: int
    symmetric: bool
    source: object  # FinitePoset Q
    target: object  # FinitePoset P
    table: dict  # (x, t) -> p  with t a fence point
    projection_endpoints: bool = False

    def fence(self):
        return multi_fence(self.n, self.m)

    def endpoint_maps(self):
        """The maps f_j(x) = H(x, m_j)."""
        J = self.fence()
        return [
            {x: self.table[(x, J.end(j))] for x in self.source.elements}
            for j in range(1, self.n + 1)
        ]

    def to_doc(self):
        rows = sorted(
            ([thaw(x), fence_point_to_doc(t), thaw(v)] for (x, t), v in self.table.items()),
            key=lambda row: (ckey(freeze(row[0])), ckey(freeze(row[1]))),
        )
        return {
            "type": "combinatorial_homotopy",
            "n": self.n,
            "m": self.m,
            "depth": self.depth,
            "symmetric": self.symmetric,
            "projection_endpoints": self.projection_endpoints,
            "source": poset_to_doc(self.source),
            "target": poset_to_doc(self.target),
            "table": rows,
        }

    @classmethod
    def from_doc(cls, doc):
        try:
            table = {
                (freeze(x), fence_point_from_doc(t)): freeze(v)
                for x, t, v in doc["table"]
            }
            return cls(
                n=int(doc["n"]),
                m=int(doc["m"]),
                depth=int(doc["depth"]),
                symmetric=bool(doc["symmetric"]),
                projection_endpoints=bool(doc.get("projection_endpoints", False)),
                source=poset_from_doc(doc["source"]),
                target=poset_from_doc(doc["target"]),
                table=table,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed combinatorial homotopy: {exc}") from exc


@dataclass
class SectionWitness:
    """A family of fence paths s(x) with q_{n,m}(s(x)) = (rho_1(x), ...)."""

    n: int
    m: int
    depth: int
    symmetric: bool
    source: object  # FinitePoset Q
    target: object  # FinitePoset P
    paths: dict  # x -> {fence point -> p}
    projection_endpoints: bool = False

    def fence(self):
        return multi_fence(self.n, self.m)

    def to_doc(self):
        J = self.fence()
        points = list(J.poset.elements)
        rows = []
        for x in self.source.elements:
            gamma = self.paths[x]
            rows.append([thaw(x), [thaw(gamma[t]) for t in points]])
        return {
            "type": "section_witness",
            "n": self.n,
            "m": self.m,
            "depth": self.depth,
            "symmetric": self.symmetric,
            "projection_endpoints": self.projection_endpoints,
            "source": poset_to_doc(self.source),
            "target": poset_to_doc(self.target),
            "points": [fence_point_to_doc(t) for t in points],
            "paths": rows,
        }

    @classmethod
    def from_doc(cls, doc):
        try:
            points = [fence_point_from_doc(t) for t in doc["points"]]
            paths = {}
            for x, values in doc["paths"]:
                if len(values) != len(points):
                    raise ParseError("path length does not match point list")
                paths[freeze(x)] = {
                    t: freeze(v) for t, v in zip(points, values)
                }
            return cls(
                n=int(doc["n"]),
                m=int(doc["m"]),
                depth=int(doc["depth"]),
                symmetric=bool(doc["symmetric"]),
                projection_endpoints=bool(doc.get("projection_endpoints", False)),
                source=poset_from_doc(doc["source"]),
                target=poset_from_doc(doc["target"]),
                paths=paths,
            )
        except ParseError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed section witness: {exc}") from exc


CERT_TYPES = {
    "contiguity_chain": ContiguityChain,
    "combinatorial_homotopy": CombinatorialHomotopy,
    "section_witness": SectionWitness,
}


def certificate_from_doc(doc):
    try:
        kind = doc["type"]
    except (KeyError, TypeError) as exc:
        raise ParseError("certificate document lacks a type field") from exc
    if kind not in CERT_TYPES:
        raise ParseError(f"unknown certificate type {kind!r}")
    return CERT_TYPES[kind].from_doc(doc)
