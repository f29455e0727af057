"""Decision procedures with certificates.

Two graph searches underlie everything:

* simplicial side: nodes are simplicial maps L -> K, edges join 1-contiguous
  maps (the union of the two images of every simplex is a simplex);
* finite-space side: nodes are monotone maps Q -> P, edges join pointwise
  comparable maps.  Reflexivity lets a zigzag repeat nodes, so plain
  connectivity in the comparability graph is equivalent to the alternating
  fence formulation; emitted certificates are re-normalized to alternating
  form.

In symmetric mode an equivariant n-tuple is represented by its first map,
constant on the orbits of the tuple constraint group; componentwise
conditions on tuples reduce to the same condition on first maps (the other
components differ by precomposition with a bijection of the invariant
source), and the goal is any node invariant under the full symmetric group,
which expands to a diagonal tuple.

Modes: "exact" enumerates the whole node space (budgeted) and is complete,
so a "no" carries an exhaustion record.  "bounded" explores single-orbit
value moves from the start; it yields sound "yes" answers and "unknown"
otherwise, never "no".  "auto" tries cheap distance <= 2 connections first
and falls back to exact.
"""

from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .actions import (
    act_name,
    check_equivariant_tuple,
    is_invariant_elements,
    is_invariant_simplices,
    orbit_partition,
    symmetric_group,
    transposition,
    tuple_constraint_group,
)
from .complexes import base_of
from .errors import BudgetExceeded, NotEquivariant, SourceMismatch
from .util import csorted
from .witnesses import CombinatorialHomotopy, ContiguityChain


def one_contiguous(phi, psi):
    """True iff phi(s) union psi(s) is a simplex of the target for every s.

    Checking facets suffices: images of faces are subsets of facet images
    and the simplex set is downward closed.
    """
    if phi.source != psi.source or phi.target != psi.target:
        raise SourceMismatch("maps must share source and target")
    tgt = phi.target
    for s in phi.source.facets:
        if not tgt.is_simplex(phi.image(s) | psi.image(s)):
            return False
    return True


@dataclass
class SearchResult:
    status: str  # "yes" | "no" | "unknown"
    witness: object = None
    record: dict = field(default_factory=dict)

    @property
    def yes(self):
        return self.status == "yes"


def _check_tuple_inputs(maps, n):
    if len(maps) != n:
        raise SourceMismatch(f"expected {n} maps, got {len(maps)}")
    src, tgt = maps[0].source, maps[0].target
    for f in maps[1:]:
        if f.source != src or f.target != tgt:
            raise SourceMismatch("tuple maps must share source and target")
    return src, tgt


def _bfs(neighbors, start, stop_when, budget):
    """Deterministic BFS.  Returns (parents, visit order, hit or None)."""
    parents = {start: None}
    order = [start]
    if stop_when(start):
        return parents, order, start
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in neighbors(cur):
            if nxt in parents:
                continue
            parents[nxt] = cur
            order.append(nxt)
            if budget is not None and len(order) > budget:
                raise BudgetExceeded(f"search explored more than {budget} nodes")
            if stop_when(nxt):
                return parents, order, nxt
            queue.append(nxt)
    return parents, order, None


def _path_to(parents, end):
    path = [end]
    while parents[path[-1]] is not None:
        path.append(parents[path[-1]])
    path.reverse()
    return path


def _index_classes(names, name_index, group, depth):
    return [
        [name_index[x] for x in part]
        for part in orbit_partition(group, names, depth)
    ]


def _constant_on(values, classes):
    return all(all(values[i] == values[cls[0]] for i in cls) for cls in classes)


def _invariant_rows(arr, classes):
    ok = np.ones(arr.shape[0], dtype=bool)
    for cls in classes:
        for i in cls[1:]:
            ok &= arr[:, i] == arr[:, cls[0]]
    return ok


# ---------------------------------------------------------------------------
# simplicial map space
# ---------------------------------------------------------------------------


class _SimplicialSpace:
    """Enumeration and 1-contiguity tests over simplicial maps L -> K."""

    def __init__(self, source, target, classes=None):
        source, target = base_of(source), base_of(target)
        self.source = source
        self.target = target
        self.sverts = list(source.vertices)
        self.svi = {v: i for i, v in enumerate(self.sverts)}
        self.tverts = list(target.vertices)
        self.tvi = {v: i for i, v in enumerate(self.tverts)}
        self.facets = [
            tuple(sorted(self.svi[v] for v in f))
            for f in sorted(source.facets, key=lambda s: csorted(s))
        ]
        if len(self.tverts) > 20:
            raise BudgetExceeded(
                "contiguity search targets are limited to 20 vertices"
            )
        lut = np.zeros(1 << len(self.tverts), dtype=bool)
        for s in target.simplices:
            mask = 0
            for v in s:
                mask |= 1 << self.tvi[v]
            lut[mask] = True
        self.lut = lut
        if classes is None:
            classes = [[i] for i in range(len(self.sverts))]
        self.classes = classes
        self._facets_of_vertex = [[] for _ in self.sverts]
        for fi, f in enumerate(self.facets):
            for i in f:
                self._facets_of_vertex[i].append(fi)

    def enumerate_maps(self, budget=None, classes=None, extra_ok=None,
                       first_only=False):
        """Valid maps constant on classes, as value tuples in lex order."""
        classes = self.classes if classes is None else classes
        nv, nt = len(self.sverts), len(self.tverts)
        values = [-1] * nv
        fmasks = [0] * len(self.facets)
        out = []

        def rec(ci):
            if ci == len(classes):
                out.append(tuple(values))
                if budget is not None and len(out) > budget:
                    raise BudgetExceeded(f"more than {budget} simplicial maps")
                return first_only
            touched = sorted(
                {fi for i in classes[ci] for fi in self._facets_of_vertex[i]}
            )
            for w in range(nt):
                old = [fmasks[fi] for fi in touched]
                for i in classes[ci]:
                    values[i] = w
                ok = True
                for fi in touched:
                    mask = 0
                    for i in self.facets[fi]:
                        if values[i] >= 0:
                            mask |= 1 << values[i]
                    if not self.lut[mask]:
                        ok = False
                    fmasks[fi] = mask
                if ok and extra_ok is not None:
                    ok = extra_ok(values, touched, fmasks)
                if ok and rec(ci + 1):
                    return True
                for i in classes[ci]:
                    values[i] = -1
                for fi, m in zip(touched, old):
                    fmasks[fi] = m
            return False

        rec(0)
        return out

    def full_masks(self, values):
        out = []
        for f in self.facets:
            mask = 0
            for i in f:
                mask |= 1 << values[i]
            out.append(mask)
        return out

    def facet_mask_array(self, arr):
        """(N, F) int64 facet image masks for an (N, |V|) value array."""
        n = arr.shape[0]
        out = np.zeros((n, len(self.facets)), dtype=np.int64)
        for fi, f in enumerate(self.facets):
            m = np.zeros(n, dtype=np.int64)
            for i in f:
                m |= np.int64(1) << arr[:, i].astype(np.int64)
            out[:, fi] = m
        return out

    def contiguous_rows(self, fmask_arr, i):
        union = fmask_arr | fmask_arr[i]
        return self.lut[union].all(axis=1)

    def pair_contiguous(self, a, b):
        for f in self.facets:
            mask = 0
            for i in f:
                mask |= (1 << a[i]) | (1 << b[i])
            if not self.lut[mask]:
                return False
        return True

    def values_of(self, vertex_map):
        return tuple(self.tvi[vertex_map[v]] for v in self.sverts)

    def map_of(self, values):
        return {v: self.tverts[w] for v, w in zip(self.sverts, values)}

    def bridge(self, a, b, budget=None):
        """A class-constant map 1-contiguous with both a and b, or None."""
        am = self.full_masks(a)
        bm = self.full_masks(b)

        def extra_ok(values, touched, fmasks):
            for fi in touched:
                if not (self.lut[fmasks[fi] | am[fi]]
                        and self.lut[fmasks[fi] | bm[fi]]):
                    return False
            return True

        found = self.enumerate_maps(
            budget=budget, extra_ok=extra_ok, first_only=True
        )
        return found[0] if found else None


QUICK_ENUM_BUDGET = 2_000


def _simplicial_quick(space, sigma_classes, start, budget):
    """A path of length <= 2 from an invariant map to start, or None.

    Constant maps come first (always simplicial and invariant); a full
    enumeration of invariant maps is attempted only within a small budget,
    because the exact stage will decide anyway.
    """
    candidates = [
        tuple([w] * len(space.sverts)) for w in range(len(space.tverts))
    ]
    try:
        candidates += space.enumerate_maps(
            budget=QUICK_ENUM_BUDGET, classes=sigma_classes
        )
    except BudgetExceeded:
        pass
    seen = set()
    candidates = [c for c in candidates if not (c in seen or seen.add(c))]
    for phi in candidates:
        if phi == start:
            return [start]
        if space.pair_contiguous(phi, start):
            return [phi, start]
    for phi in candidates:
        mid = space.bridge(phi, start, budget=budget)
        if mid is not None:
            return [phi, mid, start]
    return None


def _simplicial_bounded(space, start, is_goal, budget):
    """Single-class move BFS; sound yes only."""

    def neighbors(cur):
        out = []
        for cls in space.classes:
            for w in range(len(space.tverts)):
                if w == cur[cls[0]]:
                    continue
                nxt = list(cur)
                for i in cls:
                    nxt[i] = w
                nxt = tuple(nxt)
                ok = True
                for f in space.facets:
                    mask_new = 0
                    mask_union = 0
                    for i in f:
                        mask_new |= 1 << nxt[i]
                        mask_union |= (1 << nxt[i]) | (1 << cur[i])
                    if not (space.lut[mask_new] and space.lut[mask_union]):
                        ok = False
                        break
                if ok:
                    out.append(nxt)
        return out

    parents, order, hit = _bfs(neighbors, start, is_goal, budget)
    if hit is None:
        return None, len(order)
    return _path_to(parents, hit), len(order)


# ---------------------------------------------------------------------------
# symmetric / plain contiguity deciders
# ---------------------------------------------------------------------------


def sym_contiguous(maps, n, depth, mode="exact", budget=50_000,
                   target_ordered=None):
    """Decide symmetric contiguity of an equivariant tuple of simplicial maps.

    Returns SearchResult; a yes carries a ContiguityChain from a diagonal
    invariant tuple to the given tuple.
    """
    source, target = _check_tuple_inputs(maps, n)
    if not is_invariant_simplices(source.simplices, symmetric_group(n), depth):
        raise NotEquivariant("source is not an invariant subcomplex")
    tables = [f.vertex_map for f in maps]
    ok, viol = check_equivariant_tuple(tables, n, depth, domain=source.vertices)
    if not ok:
        raise NotEquivariant(f"tuple is not equivariant: violated at {viol!r}")

    G = tuple_constraint_group(n)
    space = _SimplicialSpace(source, target)
    g_classes = _index_classes(space.sverts, space.svi, G.elements, depth)
    sigma_classes = _index_classes(
        space.sverts, space.svi, symmetric_group(n), depth
    )
    space.classes = g_classes
    start = space.values_of(tables[0])

    def chain_of(path_values):
        levels = []
        for vals in path_values:
            f1 = space.map_of(vals)
            levels.append([
                {v: f1[act_name(transposition(n, 1, j), v, depth)]
                 for v in space.sverts}
                for j in range(1, n + 1)
            ])
        return ContiguityChain(
            n=n, depth=depth, symmetric=True, source=source,
            target=target_ordered if target_ordered is not None else target,
            levels=levels,
        )

    def is_diag(vals):
        return _constant_on(vals, sigma_classes)

    if is_diag(start):
        return SearchResult("yes", chain_of([start]), {"stage": "start"})

    if mode in ("auto", "bounded"):
        quick = _simplicial_quick(space, sigma_classes, start, budget)
        if quick is not None:
            return SearchResult("yes", chain_of(quick), {"stage": "quick"})
        if mode == "bounded":
            path, explored = _simplicial_bounded(space, start, is_diag, budget)
            if path is not None:
                return SearchResult(
                    "yes", chain_of(list(reversed(path))),
                    {"stage": "bounded", "explored": explored},
                )
            return SearchResult(
                "unknown", record={"stage": "bounded", "explored": explored}
            )

    nodes = space.enumerate_maps(budget=budget)
    index = {v: i for i, v in enumerate(nodes)}
    if start not in index:
        raise NotEquivariant("tuple's first map is not constraint-invariant")
    arr = np.array(nodes, dtype=np.int64).reshape(len(nodes), -1)
    fmask_arr = space.facet_mask_array(arr)
    diag = _invariant_rows(arr, sigma_classes)

    def neighbors(i):
        row = space.contiguous_rows(fmask_arr, i)
        return [int(j) for j in np.flatnonzero(row) if j != i]

    parents, order, hit = _bfs(
        neighbors, index[start], lambda i: bool(diag[i]), budget
    )
    record = {
        "total_nodes": len(nodes),
        "explored": len(order),
        "diagonal_nodes": int(diag.sum()),
        "stage": "exact",
    }
    if hit is None:
        record["exhausted_component"] = True
        return SearchResult("no", record=record)
    path = [nodes[i] for i in _path_to(parents, hit)]
    return SearchResult("yes", chain_of(list(reversed(path))), record)


def plain_contiguous(maps, depth=0, mode="exact", budget=50_000,
                     target_ordered=None):
    """Do the maps lie in one contiguity class?  Witness: chain from a
    diagonal tuple (no invariance requirement) to the given tuple."""
    n = len(maps)
    source, target = _check_tuple_inputs(maps, n)
    space = _SimplicialSpace(source, target)
    starts = [space.values_of(f.vertex_map) for f in maps]

    def chain_of(branch_paths):
        c = max(len(p) for p in branch_paths)
        levels = []
        for l in range(c):
            levels.append([
                space.map_of(p[l] if l < len(p) else p[-1])
                for p in branch_paths
            ])
        return ContiguityChain(
            n=n, depth=depth, symmetric=False, source=source,
            target=target_ordered if target_ordered is not None else target,
            levels=levels,
        )

    if all(s == starts[0] for s in starts):
        return SearchResult("yes", chain_of([[s] for s in starts]),
                            {"stage": "start"})

    if mode in ("auto", "bounded"):
        quick = _plain_quick_simplicial(space, starts, budget)
        if quick is not None:
            return SearchResult("yes", chain_of(quick), {"stage": "quick"})
        if mode == "bounded":
            return SearchResult("unknown", record={"stage": "bounded"})

    nodes = space.enumerate_maps(budget=budget)
    index = {v: i for i, v in enumerate(nodes)}
    arr = np.array(nodes, dtype=np.int64).reshape(len(nodes), -1)
    fmask_arr = space.facet_mask_array(arr)

    def neighbors(i):
        row = space.contiguous_rows(fmask_arr, i)
        return [int(j) for j in np.flatnonzero(row) if j != i]

    remaining = {index[s] for s in starts}

    def stop(i):
        remaining.discard(i)
        return not remaining

    parents, order, hit = _bfs(neighbors, index[starts[0]], stop, budget)
    record = {
        "total_nodes": len(nodes),
        "explored": len(order),
        "stage": "exact",
    }
    if hit is None:
        record["exhausted_component"] = True
        return SearchResult("no", record=record)
    branch_paths = [
        [nodes[i] for i in _path_to(parents, index[s])] for s in starts
    ]
    return SearchResult("yes", chain_of(branch_paths), record)


def _plain_quick_simplicial(space, starts, budget):
    """A common meeting map at distance <= 1 from every start, or None.

    Candidates: the given maps themselves and the constant maps (always
    simplicial).
    """
    candidates = list(starts)
    candidates += [tuple([w] * len(space.sverts)) for w in range(len(space.tverts))]
    for cand in candidates:
        if all(
            cand == s or space.pair_contiguous(cand, s) for s in starts
        ):
            return [[cand] if s == cand else [cand, s] for s in starts]
    return None


# ---------------------------------------------------------------------------
# monotone map space
# ---------------------------------------------------------------------------


class _MonotoneSpace:
    """Enumeration and comparability tests over monotone maps Q -> P."""

    def __init__(self, Q, P, classes=None):
        self.Q = Q
        self.P = P
        self.els = list(Q.elements)
        self.ei = {x: i for i, x in enumerate(self.els)}
        self.tels = list(P.elements)
        self.ti = {x: i for i, x in enumerate(self.tels)}
        if classes is None:
            classes = [[i] for i in range(len(self.els))]
        self.classes = classes

    def enumerate_maps(self, budget=None, classes=None, allowed=None,
                       first_only=False):
        """Monotone maps constant on classes; ``allowed[i]`` restricts values."""
        classes = self.classes if classes is None else classes
        leq_q, leq_p = self.Q.leq, self.P.leq
        nq, npp = len(self.els), len(self.tels)
        values = [-1] * nq
        out = []

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
                    raise BudgetExceeded(f"more than {budget} monotone maps")
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

    def le_rows(self, arr, i, reverse=False):
        """Boolean rows: node i <= node j pointwise (or >= with reverse)."""
        row = np.broadcast_to(arr[i], arr.shape)
        if reverse:
            return self.P.leq[arr, row].all(axis=1)
        return self.P.leq[row, arr].all(axis=1)

    def pair_le(self, a, b):
        return all(self.P.leq[x, y] for x, y in zip(a, b))

    def values_of(self, mapping):
        return tuple(self.ti[mapping[x]] for x in self.els)

    def map_of(self, values):
        return {x: self.tels[v] for x, v in zip(self.els, values)}

    def bound_map(self, a, b, upper=True, budget=None):
        """A class-constant monotone map above (below) both a and b, or None."""
        npp = len(self.tels)
        allowed = []
        for i in range(len(self.els)):
            if upper:
                s = {
                    v for v in range(npp)
                    if self.P.leq[a[i], v] and self.P.leq[b[i], v]
                }
            else:
                s = {
                    v for v in range(npp)
                    if self.P.leq[v, a[i]] and self.P.leq[v, b[i]]
                }
            if not s:
                return None
            allowed.append(s)
        found = self.enumerate_maps(
            budget=budget, allowed=allowed, first_only=True
        )
        return found[0] if found else None


def _alternate(path, le):
    """Re-normalize a comparability path to the fence's alternating form.

    Position l of the result relates to position l-1 by <= when l is odd and
    by >= when l is even, matching 0 <= 1 >= 2 <= ...
    """
    seq = [path[0]]
    for u, w in zip(path, path[1:]):
        while True:
            need_up = len(seq) % 2 == 1
            if (need_up and le(u, w)) or (not need_up and le(w, u)):
                seq.append(w)
                break
            seq.append(u)  # repeat; valid in either direction
    return seq


def _monotone_quick(space, sigma_classes, start, budget):
    """Constant maps first, then a budget-bounded invariant enumeration."""
    candidates = [
        tuple([v] * len(space.els)) for v in range(len(space.tels))
    ]
    try:
        candidates += space.enumerate_maps(
            budget=QUICK_ENUM_BUDGET, classes=sigma_classes
        )
    except BudgetExceeded:
        pass
    seen = set()
    candidates = [c for c in candidates if not (c in seen or seen.add(c))]
    for phi in candidates:
        if phi == start:
            return [start]
        if space.pair_le(phi, start) or space.pair_le(start, phi):
            return [phi, start]
    for phi in candidates:
        mid = space.bound_map(phi, start, upper=True, budget=budget)
        if mid is not None:
            return [phi, mid, start]
        mid = space.bound_map(phi, start, upper=False, budget=budget)
        if mid is not None:
            return [phi, mid, start]
    return None


def _monotone_bounded(space, start, is_goal, budget):
    """Single-class move BFS along comparabilities; sound yes only."""
    leq_p = space.P.leq
    npp = len(space.tels)

    def neighbors(cur):
        out = []
        for cls in space.classes:
            for w in range(npp):
                if w == cur[cls[0]]:
                    continue
                if not (leq_p[cur[cls[0]], w] or leq_p[w, cur[cls[0]]]):
                    continue
                nxt = list(cur)
                for i in cls:
                    nxt[i] = w
                nxt = tuple(nxt)
                ok = True
                for i in cls:
                    for j in range(len(space.els)):
                        if space.Q.leq[i, j] and not leq_p[nxt[i], nxt[j]]:
                            ok = False
                            break
                        if space.Q.leq[j, i] and not leq_p[nxt[j], nxt[i]]:
                            ok = False
                            break
                    if not ok:
                        break
                # the move must itself be a comparability step
                if ok and not (
                    all(leq_p[a, b] for a, b in zip(cur, nxt))
                    or all(leq_p[b, a] for a, b in zip(cur, nxt))
                ):
                    ok = False
                if ok:
                    out.append(nxt)
        return out

    parents, order, hit = _bfs(neighbors, start, is_goal, budget)
    if hit is None:
        return None, len(order)
    return _path_to(parents, hit), len(order)


# ---------------------------------------------------------------------------
# symmetric / plain combinatorial homotopy deciders
# ---------------------------------------------------------------------------


def sym_comb_homotopic(maps, n, depth, mode="exact", budget=50_000):
    """Decide symmetric combinatorial homotopy of an equivariant tuple of
    monotone maps on an invariant open source.  Witness: a table over
    J_{n,m} with m the re-normalized path length."""
    if len(maps) != n:
        raise SourceMismatch(f"expected {n} maps, got {len(maps)}")
    Q, P = maps[0].source, maps[0].target
    for f in maps[1:]:
        if f.source != Q or f.target != P:
            raise SourceMismatch("tuple maps must share source and target")
    if not is_invariant_elements(Q.elements, symmetric_group(n), depth):
        raise NotEquivariant("source is not an invariant subset")
    tables = [f.mapping for f in maps]
    ok, viol = check_equivariant_tuple(tables, n, depth, domain=Q.elements)
    if not ok:
        raise NotEquivariant(f"tuple is not equivariant: violated at {viol!r}")

    G = tuple_constraint_group(n)
    space = _MonotoneSpace(Q, P)
    g_classes = _index_classes(space.els, space.ei, G.elements, depth)
    sigma_classes = _index_classes(space.els, space.ei, symmetric_group(n), depth)
    space.classes = g_classes
    start = space.values_of(tables[0])

    def homotopy_of(path):
        seq = _alternate(list(reversed(path)), space.pair_le)
        m = len(seq) - 1
        table = {}
        for x in Q.elements:
            table[(x, (0, 0))] = space.map_of(seq[0])[x]
        for l in range(1, m + 1):
            fl = space.map_of(seq[l])
            for j in range(1, n + 1):
                t = transposition(n, 1, j)
                for x in Q.elements:
                    table[(x, (l, j))] = fl[act_name(t, x, depth)]
        return CombinatorialHomotopy(
            n=n, m=m, depth=depth, symmetric=True,
            source=Q, target=P, table=table,
        )

    def is_diag(vals):
        return _constant_on(vals, sigma_classes)

    if is_diag(start):
        return SearchResult("yes", homotopy_of([start]), {"stage": "start"})

    if mode in ("auto", "bounded"):
        quick = _monotone_quick(space, sigma_classes, start, budget)
        if quick is not None:
            return SearchResult(
                "yes", homotopy_of(list(reversed(quick))), {"stage": "quick"}
            )
        if mode == "bounded":
            path, explored = _monotone_bounded(space, start, is_diag, budget)
            if path is not None:
                return SearchResult(
                    "yes", homotopy_of(path),
                    {"stage": "bounded", "explored": explored},
                )
            return SearchResult(
                "unknown", record={"stage": "bounded", "explored": explored}
            )

    nodes = space.enumerate_maps(budget=budget)
    index = {v: i for i, v in enumerate(nodes)}
    if start not in index:
        raise NotEquivariant("tuple's first map is not constraint-invariant")
    arr = np.array(nodes, dtype=np.intp).reshape(len(nodes), -1)
    diag = _invariant_rows(arr, sigma_classes)

    def neighbors(i):
        row = space.le_rows(arr, i) | space.le_rows(arr, i, reverse=True)
        return [int(j) for j in np.flatnonzero(row) if j != i]

    parents, order, hit = _bfs(
        neighbors, index[start], lambda i: bool(diag[i]), budget
    )
    record = {
        "total_nodes": len(nodes),
        "explored": len(order),
        "diagonal_nodes": int(diag.sum()),
        "stage": "exact",
    }
    if not Q.is_connected():
        record["disconnected_source"] = True
    if hit is None:
        record["exhausted_component"] = True
        return SearchResult("no", record=record)
    path = [nodes[i] for i in _path_to(parents, hit)]
    return SearchResult("yes", homotopy_of(path), record)


def plain_comb_homotopic(maps, depth=0, mode="exact", budget=50_000):
    """Are the monotone maps combinatorially homotopic (common fence start)?"""
    n = len(maps)
    Q, P = maps[0].source, maps[0].target
    for f in maps[1:]:
        if f.source != Q or f.target != P:
            raise SourceMismatch("tuple maps must share source and target")
    space = _MonotoneSpace(Q, P)
    starts = [space.values_of(f.mapping) for f in maps]

    def homotopy_of(branch_paths):
        seqs = [_alternate(p, space.pair_le) for p in branch_paths]
        m = max(len(s) - 1 for s in seqs)
        seqs = [s + [s[-1]] * (m - (len(s) - 1)) for s in seqs]
        table = {}
        for x in Q.elements:
            table[(x, (0, 0))] = space.map_of(seqs[0][0])[x]
        for j in range(1, n + 1):
            for l in range(1, m + 1):
                fl = space.map_of(seqs[j - 1][l])
                for x in Q.elements:
                    table[(x, (l, j))] = fl[x]
        return CombinatorialHomotopy(
            n=n, m=m, depth=depth, symmetric=False,
            source=Q, target=P, table=table,
        )

    if all(s == starts[0] for s in starts):
        return SearchResult(
            "yes", homotopy_of([[s] for s in starts]), {"stage": "start"}
        )

    if mode in ("auto", "bounded"):
        quick = _plain_quick_monotone(space, starts, budget)
        if quick is not None:
            return SearchResult("yes", homotopy_of(quick), {"stage": "quick"})
        if mode == "bounded":
            return SearchResult("unknown", record={"stage": "bounded"})

    nodes = space.enumerate_maps(budget=budget)
    index = {v: i for i, v in enumerate(nodes)}
    arr = np.array(nodes, dtype=np.intp).reshape(len(nodes), -1)

    def neighbors(i):
        row = space.le_rows(arr, i) | space.le_rows(arr, i, reverse=True)
        return [int(j) for j in np.flatnonzero(row) if j != i]

    remaining = {index[s] for s in starts}

    def stop(i):
        remaining.discard(i)
        return not remaining

    parents, order, hit = _bfs(neighbors, index[starts[0]], stop, budget)
    record = {
        "total_nodes": len(nodes),
        "explored": len(order),
        "stage": "exact",
    }
    if hit is None:
        record["exhausted_component"] = True
        return SearchResult("no", record=record)
    branch_paths = [
        [nodes[i] for i in _path_to(parents, index[s])] for s in starts
    ]
    return SearchResult("yes", homotopy_of(branch_paths), record)


def _plain_quick_monotone(space, starts, budget):
    """A common meeting map comparable with every start, or None.

    Candidates: the given maps and the constant maps (always monotone).
    """
    candidates = list(starts)
    candidates += [tuple([v] * len(space.els)) for v in range(len(space.tels))]
    for cand in candidates:
        if all(
            cand == s or space.pair_le(cand, s) or space.pair_le(s, cand)
            for s in starts
        ):
            return [[cand] if s == cand else [cand, s] for s in starts]
    return None
