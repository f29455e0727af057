"""Finite posets viewed as finite T0 spaces.

Order is stored as a full boolean matrix after reflexive-transitive closure,
so comparability queries are O(1).  Open sets are down-sets: the minimal open
set containing x is ``U_x = {y : y <= x}``.
"""

from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from .complexes import OrderedComplex, SimplicialComplex
from .errors import (
    BadArity,
    CycleDetected,
    SizeLimitExceeded,
    UnknownElement,
)
from .util import csorted, name_of


class FinitePoset:
    """Immutable finite poset over canonically sorted elements."""

    __slots__ = ("elements", "index", "leq", "_key")

    def __init__(self, elements, leq_matrix):
        elements = tuple(csorted(set(elements)))
        n = len(elements)
        leq = np.array(leq_matrix, dtype=bool).reshape(n, n).copy()
        leq.setflags(write=False)
        self.elements = elements
        self.index = {e: i for i, e in enumerate(elements)}
        self.leq = leq
        self._key = (elements, leq.tobytes())

    # -- basic queries ---------------------------------------------------

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.index

    def _i(self, x):
        try:
            return self.index[x]
        except KeyError:
            raise UnknownElement(f"element {x!r} not in poset") from None

    def le(self, a, b):
        return bool(self.leq[self._i(a), self._i(b)])

    def lt(self, a, b):
        return a != b and self.le(a, b)

    def comparable(self, a, b):
        i, j = self._i(a), self._i(b)
        return bool(self.leq[i, j] or self.leq[j, i])

    def down_set(self, x):
        """U_x = {y : y <= x}."""
        i = self._i(x)
        return frozenset(
            self.elements[j] for j in np.flatnonzero(self.leq[:, i])
        )

    def up_set(self, x):
        i = self._i(x)
        return frozenset(
            self.elements[j] for j in np.flatnonzero(self.leq[i, :])
        )

    def is_open(self, S):
        """A subset is open iff it is downward closed."""
        S = frozenset(S)
        for x in S:
            if not self.down_set(x) <= S:
                return False
        return True

    def down_closure(self, S):
        out = set()
        for x in S:
            out |= self.down_set(x)
        return frozenset(out)

    def maximal_of(self, S=None):
        """Maximal elements of a subset (default: of the whole poset)."""
        S = list(self.elements) if S is None else csorted(S)
        return [
            x for x in S if not any(self.lt(x, y) for y in S)
        ]

    def minimal_of(self, S=None):
        S = list(self.elements) if S is None else csorted(S)
        return [
            x for x in S if not any(self.lt(y, x) for y in S)
        ]

    def max_of(self, S):
        """The maximum of a totally ordered subset."""
        best = None
        for x in S:
            if best is None or self.le(best, x):
                best = x
            elif not self.le(x, best):
                raise CycleDetected(f"subset is not totally ordered at {x!r}")
        if best is None:
            raise UnknownElement("max of empty subset")
        return best

    def covers(self):
        """Hasse diagram pairs (a, b) with a < b and nothing in between."""
        lt = self.leq & ~np.eye(len(self.elements), dtype=bool)
        between = lt @ lt
        child = lt & ~between
        return [
            (self.elements[i], self.elements[j])
            for i, j in zip(*np.nonzero(child))
        ]

    def is_connected(self):
        n = len(self.elements)
        if n == 0:
            return True
        comp = self.leq | self.leq.T
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        frontier = [0]
        while frontier:
            nxt = np.flatnonzero(comp[frontier].any(axis=0) & ~seen)
            seen[nxt] = True
            frontier = list(nxt)
        return bool(seen.all())

    def restrict(self, S):
        """Induced sub-poset on a subset of elements."""
        S = csorted(set(S))
        idx = [self._i(x) for x in S]
        return FinitePoset(S, self.leq[np.ix_(idx, idx)])

    def __eq__(self, other):
        return isinstance(other, FinitePoset) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"FinitePoset({len(self.elements)} elements)"


def poset_from_relations(elements, generators):
    """Reflexive-transitive closure of generating pairs (a, b) meaning a <= b."""
    elements = tuple(csorted(set(elements)))
    index = {e: i for i, e in enumerate(elements)}
    n = len(elements)
    leq = np.eye(n, dtype=bool)
    for a, b in generators:
        if a not in index:
            raise UnknownElement(f"relation uses unknown element {a!r}")
        if b not in index:
            raise UnknownElement(f"relation uses unknown element {b!r}")
        leq[index[a], index[b]] = True
    # Warshall closure
    changed = True
    while changed:
        nxt = leq | (leq @ leq)
        changed = bool((nxt != leq).any())
        leq = nxt
    cyc = leq & leq.T & ~np.eye(n, dtype=bool)
    if cyc.any():
        i, j = map(int, np.argwhere(cyc)[0])
        raise CycleDetected(
            f"antisymmetry violated: {elements[i]!r} <= {elements[j]!r} <= {elements[i]!r}"
        )
    return FinitePoset(elements, leq)


def principal_down_set(P, x):
    return P.down_set(x)


def is_open(P, S):
    return P.is_open(S)


def power_poset(P, n):
    """P^n with componentwise order; elements are n-tuples."""
    if n < 1:
        raise BadArity("power requires n >= 1")
    elements = [tuple(t) for t in iproduct(P.elements, repeat=n)]
    elements = csorted(elements)
    m = len(elements)
    idx = np.array(
        [[P.index[t[k]] for k in range(n)] for t in elements], dtype=int
    )
    leq = np.ones((m, m), dtype=bool)
    for k in range(n):
        leq &= P.leq[np.ix_(idx[:, k], idx[:, k])]
    return FinitePoset(elements, leq)


class MonotoneMap:
    """An order preserving map between finite posets."""

    __slots__ = ("source", "target", "mapping")

    def __init__(self, source, target, mapping):
        self.source = source
        self.target = target
        self.mapping = dict(mapping)

    def __call__(self, x):
        return self.mapping[x]

    def is_monotone(self):
        els = self.source.elements
        for a in els:
            fa = self.mapping.get(a)
            if fa is None or fa not in self.target:
                return False
            for b in self.source.up_set(a):
                if not self.target.le(fa, self.mapping[b]):
                    return False
        return True

    def compose(self, other):
        """self after other."""
        return MonotoneMap(
            other.source,
            self.target,
            {x: self.mapping[y] for x, y in other.mapping.items()},
        )

    def le(self, other):
        """Pointwise order on the mapping poset."""
        return all(
            self.target.le(self.mapping[x], other.mapping[x])
            for x in self.source.elements
        )

    def __eq__(self, other):
        return (
            isinstance(other, MonotoneMap)
            and self.source == other.source
            and self.target == other.target
            and self.mapping == other.mapping
        )

    def __hash__(self):
        return hash(
            (self.source, self.target, tuple(csorted(self.mapping.items())))
        )


def monotone_value_tuples(Q, P, budget=None, classes=None, allowed=None,
                          first_only=False):
    """All monotone maps Q -> P as value-index tuples, in canonical order.

    ``classes`` optionally partitions Q's element indices; maps are required
    to be constant on each class (used for group-invariant enumeration).
    ``allowed[i]`` restricts the values element i may take.  Raises
    SizeLimitExceeded when more than ``budget`` maps exist.
    """
    nq, npp = len(Q.elements), len(P.elements)
    if classes is None:
        classes = [[i] for i in range(nq)]
    leq_q, leq_p = Q.leq, P.leq
    out = []
    values = [-1] * nq

    def ok(cls, v):
        for i in cls:
            if allowed is not None and v not in allowed[i]:
                return False
            for j in range(nq):
                w = values[j]
                if w < 0:
                    continue
                if leq_q[i, j] and not leq_p[v, w]:
                    return False
                if leq_q[j, i] and not leq_p[w, v]:
                    return False
        return True

    def rec(ci):
        if ci == len(classes):
            out.append(tuple(values))
            if budget is not None and len(out) > budget:
                raise SizeLimitExceeded(
                    f"more than {budget} monotone maps"
                )
            return first_only
        for v in range(npp):
            if ok(classes[ci], v):
                for i in classes[ci]:
                    values[i] = v
                if rec(ci + 1):
                    return True
                for i in classes[ci]:
                    values[i] = -1
        return False

    rec(0)
    return out


def enumerate_monotone_maps(Q, P, budget=None):
    """Stream every monotone map Q -> P exactly once, canonically ordered."""
    for vals in monotone_value_tuples(Q, P, budget=budget):
        yield MonotoneMap(
            Q,
            P,
            {Q.elements[i]: P.elements[v] for i, v in enumerate(vals)},
        )


def mapping_poset(Q, P, budget=None):
    """The poset of monotone maps Q -> P under pointwise order.

    Elements are value tuples over Q.elements (canonical order).
    """
    tuples = monotone_value_tuples(Q, P, budget=budget)
    elements = [tuple(P.elements[v] for v in vals) for vals in tuples]
    m = len(elements)
    leq = np.ones((m, m), dtype=bool)
    arr = np.array(tuples, dtype=int).reshape(m, len(Q.elements))
    for k in range(len(Q.elements)):
        leq &= P.leq[np.ix_(arr[:, k], arr[:, k])]
    return FinitePoset(elements, leq)


# -- chains, order complex, face poset --------------------------------------


def all_chains(P):
    """Every nonempty chain of P, as frozensets."""
    els = list(P.elements)
    chains = []

    def extend(chain, last):
        chains.append(frozenset(chain))
        for y in els:
            if y != last and P.lt(last, y):
                chain.append(y)
                extend(chain, y)
                chain.pop()

    for x in els:
        extend([x], x)
    return chains


def order_complex(P):
    """K(P): simplices are the nonempty chains of P, ordered by P itself."""
    chains = all_chains(P)
    base = SimplicialComplex(P.elements, simplices=chains)
    return OrderedComplex(base, P)


def face_poset(K):
    """X(K): simplices of K ordered by face inclusion.

    Elements are canonical sorted vertex tuples.
    """
    if isinstance(K, OrderedComplex):
        K = K.base
    named = {name_of(s): s for s in K.simplices}
    elements = csorted(named)
    n = len(elements)
    sets = [named[e] for e in elements]
    leq = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            leq[i, j] = sets[i] <= sets[j]
    return FinitePoset(elements, leq)


def sd_poset(P):
    """Barycentric subdivision of a finite space: X(K(P))."""
    return face_poset(order_complex(P))


# -- fences ------------------------------------------------------------------


def fence(m):
    """J_m: points 0..m with the zigzag order 0 <= 1 >= 2 <= ..."""
    if m < 0:
        raise BadArity("fence length must be >= 0")
    gens = []
    for l in range(1, m + 1):
        if l % 2 == 1:
            gens.append((l - 1, l))
        else:
            gens.append((l, l - 1))
    return poset_from_relations(range(m + 1), gens)


BASEPOINT = (0, 0)


@dataclass(frozen=True)
class MultiFence:
    """J_{n,m}: n fences of length m glued at the basepoint (0, 0).

    Points are (0, 0) and (l, j) for 1 <= l <= m, 1 <= j <= n.  The terminal
    relation's direction is determined by the parity of m.
    """

    n: int
    m: int
    poset: FinitePoset

    def point(self, l, j):
        if l == 0:
            return BASEPOINT
        if not (1 <= l <= self.m and 1 <= j <= self.n):
            raise UnknownElement(f"no point ({l}, {j}) in J_{{{self.n},{self.m}}}")
        return (l, j)

    def points(self):
        return self.poset.elements

    def end(self, j):
        """m_j, the far end of the j-th fence (the basepoint when m = 0)."""
        return self.point(self.m, j)


def multi_fence(n, m):
    """J_{n,m}, a poset of nm + 1 points."""
    if n < 2:
        raise BadArity("multi fence requires n >= 2")
    if m < 0:
        raise BadArity("multi fence requires m >= 0")
    points = [BASEPOINT] + [(l, j) for l in range(1, m + 1) for j in range(1, n + 1)]
    gens = []
    for j in range(1, n + 1):
        prev = BASEPOINT
        for l in range(1, m + 1):
            cur = (l, j)
            if l % 2 == 1:
                gens.append((prev, cur))
            else:
                gens.append((cur, prev))
            prev = cur
    P = poset_from_relations(points, gens)
    return MultiFence(n, m, P)


def fence_map_check(H, Q, J, P):
    """Order preservation of a table H : Q x J -> P on the product order.

    Monotone in each variable separately implies monotone on the product.
    """
    for q in Q.elements:
        for t in J.poset.elements:
            if (q, t) not in H or H[(q, t)] not in P:
                return False
    for q in Q.elements:
        for t1 in J.poset.elements:
            for t2 in J.poset.elements:
                if J.poset.le(t1, t2) and not P.le(H[(q, t1)], H[(q, t2)]):
                    return False
    for t in J.poset.elements:
        for q1 in Q.elements:
            for q2 in Q.elements:
                if Q.le(q1, q2) and not P.le(H[(q1, t)], H[(q2, t)]):
                    return False
    return True
