"""The permutation action on powers and their iterated subdivisions.

A permutation acts on base vertices/elements (n-tuples) by
``(g . x)_j = x_{g(j)}`` and on a subdivision name (a canonical tuple of
previous-level names) memberwise, re-sorting canonically.  ``depth`` counts
how many naming levels sit above the tuple level: 0 for K^n / P^n itself,
1 for its first subdivision, and so on.

Equivariant tuples (f_1, ..., f_n) with f_j(g.x) = f_{g(j)}(x) are in
bijection with single maps f_1 invariant under the subgroup generated by
all (1, g(j)) g (1, j); the tuple is recovered by f_j(x) = f_1((1, j).x).
"""

from dataclasses import dataclass
from itertools import permutations as ipermutations

from .errors import LevelMismatch, NotEquivariant, NotGInvariant
from .util import csorted, name_of


class Permutation:
    """A permutation of {1, ..., n}; composition is (g*h)(j) = g(h(j))."""

    __slots__ = ("n", "images")

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {images}")
        self.n = n
        self.images = images

    def __call__(self, j):
        return self.images[j - 1]

    def __mul__(self, other):
        if self.n != other.n:
            raise LevelMismatch("permutation arities differ")
        return Permutation(tuple(self(other(j)) for j in range(1, self.n + 1)))

    def inverse(self):
        inv = [0] * self.n
        for j in range(1, self.n + 1):
            inv[self(j) - 1] = j
        return Permutation(inv)

    def is_identity(self):
        return self.images == tuple(range(1, self.n + 1))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation{self.images}"


def identity(n):
    return Permutation(range(1, n + 1))


def transposition(n, a, b):
    images = list(range(1, n + 1))
    images[a - 1], images[b - 1] = b, a
    return Permutation(images)


def symmetric_group(n):
    """All of Sigma_n, materialized in lexicographic order (keep n small)."""
    if n > 6:
        raise LevelMismatch("materializing Sigma_n is limited to n <= 6")
    return [Permutation(p) for p in ipermutations(range(1, n + 1))]


def mulclose(gens):
    """Closure of a generator set under composition."""
    els = set(gens)
    frontier = list(els)
    while frontier:
        new = []
        for a in list(els):
            for b in frontier:
                c = a * b
                if c not in els:
                    els.add(c)
                    new.append(c)
        frontier = new
    return sorted(els, key=lambda g: g.images)


@dataclass(frozen=True)
class GroupConstraint:
    """The subgroup of Sigma_n that single reduced maps must respect."""

    n: int
    elements: tuple

    def is_trivial(self):
        return all(g.is_identity() for g in self.elements)


def tuple_constraint_group(n):
    """Subgroup generated by (1, g(j)) g (1, j) over all g, j.

    A single map constant on this subgroup's vertex orbits expands to an
    equivariant n-tuple, and conversely.  Trivial for n = 2.
    """
    gens = [identity(n)]
    for g in symmetric_group(n):
        for j in range(1, n + 1):
            w = transposition(n, 1, g(j)) * g * transposition(n, 1, j)
            gens.append(w)
    return GroupConstraint(n=n, elements=tuple(mulclose(gens)))


# -- the induced action on names ---------------------------------------------


def act_name(g, x, depth):
    """Apply g to a vertex/element name at the given naming depth."""
    if depth == 0:
        if not isinstance(x, tuple) or len(x) != g.n:
            raise LevelMismatch(f"expected an {g.n}-tuple at depth 0, got {x!r}")
        return tuple(x[g(j) - 1] for j in range(1, g.n + 1))
    if not isinstance(x, tuple):
        raise LevelMismatch(f"expected a chain name at depth {depth}, got {x!r}")
    return name_of(act_name(g, m, depth - 1) for m in x)


def act_simplex(g, s, depth):
    """Apply g to a simplex (a set of names) memberwise."""
    return frozenset(act_name(g, v, depth) for v in s)


def act_fence_point(g, t):
    """The action on J_{n,m}: l_j goes to l_{g(j)}, the basepoint is fixed."""
    l, j = t
    if l == 0:
        return t
    return (l, g(j))


def orbit(group, x, depth):
    """The orbit of a name under a list of permutations."""
    return frozenset(act_name(g, x, depth) for g in group)


def symmetrize_simplices(simplices, group, depth):
    """Smallest invariant, downward closed family containing the input."""
    from itertools import combinations

    out = set()
    for s in simplices:
        for g in group:
            img = act_simplex(g, s, depth)
            members = tuple(img)
            for k in range(1, len(members) + 1):
                for sub in combinations(members, k):
                    out.add(frozenset(sub))
    return frozenset(out)


def symmetrize_open(P, S, group, depth):
    """Smallest invariant open (down-set) of P containing the subset."""
    out = set()
    for x in S:
        for g in group:
            out |= P.down_set(act_name(g, x, depth))
    return frozenset(out)


def orbit_partition(group, names, depth):
    """Orbits of a family of names, canonically ordered by their least member."""
    names = list(names)
    seen = set()
    parts = []
    for x in csorted(names):
        if x in seen:
            continue
        orb = orbit(group, x, depth) & set(names)
        seen |= orb
        parts.append(tuple(csorted(orb)))
    return parts


def orbit_partition_simplices(group, simplices, depth):
    """Orbits of a family of simplices (frozensets of names)."""
    simplices = set(simplices)
    seen = set()
    parts = []
    for s in sorted(simplices, key=name_of):
        if s in seen:
            continue
        orb = frozenset(act_simplex(g, s, depth) for g in group)
        seen |= orb
        parts.append(tuple(sorted(orb, key=name_of)))
    return parts


def is_invariant_simplices(simplices, group, depth):
    """Is a set of simplices closed under the action?"""
    simplices = set(simplices)
    for g in group:
        for s in simplices:
            if act_simplex(g, s, depth) not in simplices:
                return False
    return True


def is_invariant_elements(elements, group, depth):
    elements = set(elements)
    for g in group:
        for x in elements:
            if act_name(g, x, depth) not in elements:
                return False
    return True


# -- equivariant tuples ------------------------------------------------------


class EquivariantTuple:
    """n maps with a common acted source, satisfying f_j(g.x) = f_{g(j)}(x).

    Maps are plain dicts from source names to target values; the source and
    target objects ride along for context only.
    """

    __slots__ = ("n", "depth", "maps", "source", "target")

    def __init__(self, n, depth, maps, source=None, target=None):
        if len(maps) != n:
            raise LevelMismatch(f"expected {n} maps, got {len(maps)}")
        self.n = n
        self.depth = depth
        self.maps = [dict(m) for m in maps]
        self.source = source
        self.target = target

    def domain(self):
        return list(self.maps[0].keys())

    def check(self, exhaustive=True):
        return check_equivariant_tuple(
            self.maps, self.n, self.depth, domain=self.domain(),
            exhaustive=exhaustive,
        )

    def reduce(self):
        return reduce_tuple(self.maps, self.n, self.depth, domain=self.domain())


def check_equivariant_tuple(maps, n, depth, domain=None, exhaustive=True):
    """Check f_j(g.x) = f_{g(j)}(x); returns (ok, violation_or_None).

    With ``exhaustive=False`` only the transposition generators (1, j) plus
    one non-generator guard are checked, which suffices since the relation
    is multiplicative in g.
    """
    if len(maps) != n:
        raise LevelMismatch(f"expected {n} maps, got {len(maps)}")
    if domain is None:
        domain = maps[0].keys()
    if exhaustive:
        group = symmetric_group(n)
    else:
        group = [transposition(n, 1, j) for j in range(2, n + 1)]
        if n >= 3:
            group.append(Permutation([2, 3, 1] + list(range(4, n + 1))))
    for g in group:
        for j in range(1, n + 1):
            fj, fgj = maps[j - 1], maps[g(j) - 1]
            for x in domain:
                gx = act_name(g, x, depth)
                if fj[gx] != fgj[x]:
                    return False, (g, x, j)
    return True, None


def reduce_tuple(maps, n, depth, domain=None):
    """An equivariant tuple is determined by its first map.

    Returns (f_1, GroupConstraint); raises NotEquivariant otherwise.
    """
    ok, viol = check_equivariant_tuple(maps, n, depth, domain=domain)
    if not ok:
        g, x, j = viol
        raise NotEquivariant(
            f"tuple violates equivariance at g={g!r}, x={x!r}, j={j}"
        )
    return dict(maps[0]), tuple_constraint_group(n)


def expand_map(f1, n, depth, domain=None):
    """Rebuild the tuple from a constraint-group-invariant single map."""
    if domain is None:
        domain = list(f1.keys())
    G = tuple_constraint_group(n)
    for g in G.elements:
        for x in domain:
            if f1[act_name(g, x, depth)] != f1[x]:
                raise NotGInvariant(
                    f"map not invariant under {g!r} at {x!r}"
                )
    maps = []
    for j in range(1, n + 1):
        t = transposition(n, 1, j)
        maps.append({x: f1[act_name(t, x, depth)] for x in domain})
    return maps


def is_sigma_invariant_map(f, n, depth, domain=None):
    """Is a single map invariant under all of Sigma_n (diagonal candidate)?"""
    if domain is None:
        domain = list(f.keys())
    for g in symmetric_group(n):
        for x in domain:
            if f[act_name(g, x, depth)] != f[x]:
                return False
    return True
