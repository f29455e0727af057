"""Finite (ordered) simplicial complexes, simplicial maps and their validation.

Simplices are stored as frozensets of vertex labels; a complex keeps its full
simplex set (the downward closure of the declared facets plus all singleton
vertices) so that "is this set a simplex" is a set lookup.  All instances are
immutable after construction.
"""

from itertools import combinations

from .errors import EmptyFacet, NotASubcomplex, UnknownVertex, UnorderedInput
from .util import ckey, csorted, name_of


def closure_of(facets):
    """Downward closure: every nonempty subset of every facet."""
    out = set()
    for f in facets:
        f = tuple(f)
        for k in range(1, len(f) + 1):
            for sub in combinations(f, k):
                out.add(frozenset(sub))
    return out


class SimplicialComplex:
    """Vertex set plus a family of nonempty subsets closed under subsets."""

    __slots__ = ("vertices", "simplices", "_facets", "_key")

    def __init__(self, vertices, facets=(), simplices=None):
        vertices = tuple(csorted(set(vertices)))
        if simplices is None:
            simplices = closure_of(facets)
        simplices = frozenset(frozenset(s) for s in simplices) | frozenset(
            frozenset([v]) for v in vertices
        )
        self.vertices = vertices
        self.simplices = simplices
        self._facets = None
        self._key = (vertices, tuple(csorted(name_of(s) for s in simplices)))

    @property
    def facets(self):
        """Maximal simplices.  Computed lazily.

        Because the simplex set is downward closed, a simplex is maximal
        iff no single-vertex extension of it is a simplex.
        """
        if self._facets is None:
            vs = self.vertices
            self._facets = frozenset(
                s
                for s in self.simplices
                if not any(v not in s and (s | {v}) in self.simplices for v in vs)
            )
        return self._facets

    def is_simplex(self, s):
        return frozenset(s) in self.simplices

    def dim(self):
        return max(len(s) for s in self.simplices) - 1

    def simplex_names(self):
        """All simplices as canonical sorted tuples, canonically ordered."""
        return csorted(name_of(s) for s in self.simplices)

    def facet_names(self):
        return csorted(name_of(s) for s in self.facets)

    def star(self, v):
        """Combinatorial star: the simplices containing vertex v."""
        if v not in set(self.vertices):
            raise UnknownVertex(f"vertex {v!r} not in complex")
        return frozenset(s for s in self.simplices if v in s)

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return (
            f"SimplicialComplex({len(self.vertices)} vertices, "
            f"{len(self.simplices)} simplices)"
        )


def from_facets(vertices, facets):
    """Build and validate a complex from declared vertices and facets."""
    vset = set(vertices)
    facets = list(facets)
    for f in facets:
        if len(f) == 0:
            raise EmptyFacet("facets must be nonempty")
        for v in f:
            if v not in vset:
                raise UnknownVertex(
                    f"facet {sorted(f, key=ckey)!r} uses undeclared vertex {v!r}"
                )
    return SimplicialComplex(vset, facets)


def euler_characteristic(K):
    """Alternating sum of simplex counts by dimension."""
    K = base_of(K)
    return sum((-1) ** (len(s) - 1) for s in K.simplices)


class OrderedComplex:
    """A complex with a vertex partial order, total on every simplex.

    ``order`` is a FinitePoset over exactly the vertex set.
    """

    __slots__ = ("base", "order")

    def __init__(self, base, order):
        if tuple(order.elements) != tuple(base.vertices):
            raise UnorderedInput("vertex order must cover exactly the vertex set")
        for s in base.simplices:
            members = list(s)
            for a, b in combinations(members, 2):
                if not (order.le(a, b) or order.le(b, a)):
                    raise UnorderedInput(
                        f"simplex {name_of(s)!r} is not totally ordered: "
                        f"{a!r} and {b!r} incomparable"
                    )
        self.base = base
        self.order = order

    @property
    def vertices(self):
        return self.base.vertices

    @property
    def facets(self):
        return self.base.facets

    @property
    def simplices(self):
        return self.base.simplices

    def is_simplex(self, s):
        return self.base.is_simplex(s)

    def simplex_names(self):
        return self.base.simplex_names()

    def facet_names(self):
        return self.base.facet_names()

    def max_vertex(self, s):
        """Largest vertex of a simplex under the vertex order."""
        return self.order.max_of(s)

    def __eq__(self, other):
        return (
            isinstance(other, OrderedComplex)
            and self.base == other.base
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.base, self.order))

    def __repr__(self):
        return f"Ordered{self.base!r}"


class SimplicialMap:
    """A vertex function whose simplex images are required to be simplices."""

    __slots__ = ("source", "target", "vertex_map")

    def __init__(self, source, target, vertex_map):
        self.source = base_of(source)
        self.target = base_of(target)
        self.vertex_map = dict(vertex_map)

    def __call__(self, v):
        return self.vertex_map[v]

    def image(self, s):
        return frozenset(self.vertex_map[v] for v in s)

    def compose(self, other):
        """self after other (other's target feeds self's source)."""
        return SimplicialMap(
            other.source,
            self.target,
            {v: self.vertex_map[w] for v, w in other.vertex_map.items()},
        )

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialMap)
            and self.source == other.source
            and self.target == other.target
            and self.vertex_map == other.vertex_map
        )

    def __hash__(self):
        return hash(
            (self.source, self.target, tuple(csorted(self.vertex_map.items())))
        )


def base_of(K):
    """The underlying SimplicialComplex of a plain or ordered complex."""
    return K.base if isinstance(K, OrderedComplex) else K


def identity_map(K):
    K = base_of(K)
    return SimplicialMap(K, K, {v: v for v in K.vertices})


def validate_simplicial_map(f, report=False):
    """True iff every simplex of the source maps to a simplex of the target.

    Degenerate images (lower dimension) are fine.  With ``report=True``
    returns ``(ok, offending_simplex_or_None)``.
    """
    for v in f.source.vertices:
        if v not in f.vertex_map:
            bad = frozenset([v])
            return (False, bad) if report else False
    for s in f.source.simplices:
        if not f.target.is_simplex(f.image(s)):
            return (False, s) if report else False
    return (True, None) if report else True


def is_subcomplex(L, K):
    """True iff every simplex of L is a simplex of K."""
    L, K = base_of(L), base_of(K)
    return L.simplices <= K.simplices


def restrict_map(f, L):
    """Restrict a simplicial map to a subcomplex of its source."""
    Lb = base_of(L)
    if not is_subcomplex(Lb, f.source):
        raise NotASubcomplex("restriction domain is not a subcomplex of the source")
    return SimplicialMap(Lb, f.target, {v: f.vertex_map[v] for v in Lb.vertices})


def subcomplex_from_simplices(K, simplices):
    """The subcomplex of K spanned by the downward closure of ``simplices``."""
    K = base_of(K)
    simplices = frozenset(frozenset(s) for s in simplices)
    for s in simplices:
        if not K.is_simplex(s):
            raise NotASubcomplex(
                f"{name_of(s)!r} is not a simplex of the ambient complex"
            )
    verts = set()
    for s in simplices:
        verts |= s
    return SimplicialComplex(verts, simplices)
