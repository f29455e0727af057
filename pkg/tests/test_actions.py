from itertools import product

import pytest

from symtc.actions import (
    Permutation,
    act_fence_point,
    act_name,
    act_simplex,
    check_equivariant_tuple,
    expand_map,
    identity,
    is_invariant_simplices,
    is_sigma_invariant_map,
    orbit,
    orbit_partition,
    reduce_tuple,
    symmetric_group,
    transposition,
    tuple_constraint_group,
)
from symtc.constructions import build_tower, ordered_power, totalize
from symtc.errors import NotEquivariant, NotGInvariant


def test_act_tuple():
    g = transposition(2, 1, 2)
    assert act_name(g, ("a", "b"), 0) == ("b", "a")
    assert act_name(identity(2), ("a", "b"), 0) == ("a", "b")


def test_act_chain_name():
    g = transposition(2, 1, 2)
    chain = ((("a", "b"),), (("a", "b"), ("b", "b")))
    want = ((("b", "a"),), (("b", "a"), ("b", "b")))
    assert act_name(g, chain, 2) == want


def test_act_fixed_point():
    g = transposition(2, 1, 2)
    assert act_name(g, ("a", "a"), 0) == ("a", "a")


def test_composition_convention():
    # the coordinate-permuting action composes contravariantly:
    # acting by g then by g' equals acting by g o g'
    n = 3
    x = ("x1", "x2", "x3")
    for g in symmetric_group(n):
        for h in symmetric_group(n):
            lhs = act_name(h, act_name(g, x, 0), 0)
            rhs = act_name(g * h, x, 0)
            assert lhs == rhs
    e = identity(n)
    assert act_name(e, x, 0) == x


def test_orbit():
    group = symmetric_group(2)
    assert orbit(group, ("a", "b"), 0) == frozenset([("a", "b"), ("b", "a")])
    assert orbit(group, ("a", "a"), 0) == frozenset([("a", "a")])


def test_symmetrize_square_facet(edge):
    power = ordered_power(totalize(edge), 2)
    sq = power.result
    group = symmetric_group(2)
    facet = frozenset([("a", "a"), ("a", "b"), ("b", "b")])
    orb = {act_simplex(g, facet, 0) for g in group}
    # the swap sends one triangle to the other; together with faces they
    # exhaust the square
    simplices = set()
    for s in orb:
        for k in range(1, len(s) + 1):
            from itertools import combinations

            for sub in combinations(s, k):
                simplices.add(frozenset(sub))
    assert simplices == set(sq.simplices)


def test_is_invariant(edge):
    power = ordered_power(totalize(edge), 2)
    sq = power.result
    group = symmetric_group(2)
    assert is_invariant_simplices(sq.simplices, group, 0)
    one_facet = {frozenset([("a", "a"), ("a", "b"), ("b", "b")])}
    assert not is_invariant_simplices(one_facet, group, 0)


def test_constraint_group_n2_trivial():
    assert tuple_constraint_group(2).is_trivial()


def test_constraint_group_n3_is_stabilizer():
    G = tuple_constraint_group(3)
    images = {g.images for g in G.elements}
    assert images == {(1, 2, 3), (1, 3, 2)}  # the stabilizer of index 1


def test_equivariance_characterization_exhaustive():
    """Expansion of f1 is equivariant iff f1 is constraint-group invariant.

    Verified exhaustively for n = 2, 3 on small tuple domains.
    """
    for n, base in ((2, [0, 1]), (3, [0, 1])):
        dom = [tuple(t) for t in product(base, repeat=n)]
        G = tuple_constraint_group(n)
        Sn = symmetric_group(n)
        for bits in product([0, 1], repeat=len(dom)):
            f1 = dict(zip(dom, bits))
            ginv = all(
                f1[act_name(g, x, 0)] == f1[x]
                for g in G.elements
                for x in dom
            )
            maps = [
                {x: f1[act_name(transposition(n, 1, j), x, 0)] for x in dom}
                for j in range(1, n + 1)
            ]
            ok, _ = check_equivariant_tuple(maps, n, 0, domain=dom)
            assert ok == ginv


def test_reduce_expand_round_trip():
    n = 2
    dom = [tuple(t) for t in product([0, 1], repeat=n)]
    for bits in product([0, 1], repeat=len(dom)):
        f1 = dict(zip(dom, bits))
        maps = expand_map(f1, n, 0, domain=dom)
        f1_back, G = reduce_tuple(maps, n, 0, domain=dom)
        assert f1_back == f1
        assert expand_map(f1_back, n, 0, domain=dom) == maps


def test_reduce_rejects_nonequivariant():
    dom = [(0, 0), (0, 1), (1, 0), (1, 1)]
    maps = [{x: 0 for x in dom}, {x: 0 for x in dom}]
    maps[1][(0, 1)] = 1  # breaks f_2(gx) = f_1(x)
    with pytest.raises(NotEquivariant):
        reduce_tuple(maps, 2, 0, domain=dom)


def test_expand_rejects_noninvariant_for_n3():
    dom = [tuple(t) for t in product([0, 1], repeat=3)]
    f1 = {x: 0 for x in dom}
    f1[(0, 0, 1)] = 1  # not invariant under the stabilizer swap (23)
    with pytest.raises(NotGInvariant):
        expand_map(f1, 3, 0, domain=dom)


def test_diagonal_tuple_is_sigma_invariant():
    dom = [tuple(t) for t in product([0, 1], repeat=2)]
    f = {x: max(x) for x in dom}
    assert is_sigma_invariant_map(f, 2, 0, domain=dom)
    assert not is_sigma_invariant_map({x: x[0] for x in dom}, 2, 0, domain=dom)


def test_functoriality_act_then_subdivide(edge):
    """Acting on a subdivision vertex equals subdividing the acted simplex."""
    tower = build_tower(edge, 2, 1)
    g = transposition(2, 1, 2)
    for v in tower.levels[1].vertices:
        # v is a simplex of the square, named canonically
        acted = act_name(g, v, 1)
        memberwise = tuple(
            sorted(
                (act_name(g, m, 0) for m in v),
                key=lambda t: (t,),
            )
        )
        assert frozenset(acted) == frozenset(memberwise)


def test_orbit_partition_deterministic():
    group = symmetric_group(2)
    names = [("a", "b"), ("b", "a"), ("a", "a")]
    parts = orbit_partition(group, names, 0)
    assert parts == [(("a", "a"),), (("a", "b"), ("b", "a"))]


def test_fence_point_action():
    g = transposition(2, 1, 2)
    assert act_fence_point(g, (1, 1)) == (1, 2)
    assert act_fence_point(g, (0, 0)) == (0, 0)


def test_permutation_algebra():
    g = Permutation([2, 3, 1])
    assert (g * g.inverse()).is_identity()
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])


def test_symmetrize_simplices(edge):
    from symtc.actions import symmetrize_simplices
    from symtc.constructions import ordered_power, totalize

    sq = ordered_power(totalize(edge), 2).result
    group = symmetric_group(2)
    facet = frozenset([("a", "a"), ("a", "b"), ("b", "b")])
    assert symmetrize_simplices([facet], group, 0) == sq.simplices


def test_symmetrize_open(v_poset):
    from symtc.actions import symmetrize_open
    from symtc.posets import power_poset

    L = power_poset(v_poset, 2)
    group = symmetric_group(2)
    S = symmetrize_open(L, [("p", "q")], group, 0)
    assert S == frozenset([("p", "q"), ("q", "p")])
    assert L.is_open(S)
    big = symmetrize_open(L, [("r", "p")], group, 0)
    assert L.is_open(big)
    assert ("p", "r") in big


def test_equivariant_tuple_class():
    from symtc.actions import EquivariantTuple

    dom = [tuple(t) for t in product([0, 1], repeat=2)]
    f1 = {x: max(x) for x in dom}
    maps = [
        {x: f1[act_name(transposition(2, 1, j), x, 0)] for x in dom}
        for j in (1, 2)
    ]
    T = EquivariantTuple(2, 0, maps)
    ok, _ = T.check()
    assert ok
    reduced, G = T.reduce()
    assert reduced == maps[0]
    assert G.is_trivial()
