"""Property-based checks of the structural invariants."""

from itertools import combinations

from hypothesis import given, settings, strategies as st

from symtc.actions import act_name, symmetric_group
from symtc.complexes import euler_characteristic, from_facets
from symtc.constructions import barycentric_subdivide, totalize
from symtc.errors import CycleDetected
from symtc.io import (
    complex_from_doc,
    complex_to_doc,
    poset_from_doc,
    poset_to_doc,
)
from symtc.posets import (
    enumerate_monotone_maps,
    face_poset,
    order_complex,
    poset_from_relations,
    sd_poset,
)

# -- strategies --------------------------------------------------------------

VERTS = ["a", "b", "c", "d", "e"]


@st.composite
def small_complexes(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    verts = VERTS[:n]
    n_facets = draw(st.integers(min_value=1, max_value=4))
    facets = [
        draw(
            st.lists(
                st.sampled_from(verts), min_size=1, max_size=3, unique=True
            )
        )
        for _ in range(n_facets)
    ]
    return from_facets(verts, facets)


@st.composite
def small_posets(draw):
    n = draw(st.integers(min_value=1, max_value=5))
    els = list(range(n))
    pairs = [(a, b) for a in els for b in els if a != b]
    chosen = draw(
        st.lists(st.sampled_from(pairs), max_size=5, unique=True)
        if pairs
        else st.just([])
    )
    try:
        return poset_from_relations(els, chosen)
    except CycleDetected:
        return poset_from_relations(els, [])


# -- complexes ---------------------------------------------------------------


@given(small_complexes())
@settings(max_examples=60, deadline=None)
def test_downward_closure(K):
    for s in K.simplices:
        members = tuple(s)
        for k in range(1, len(members) + 1):
            for sub in combinations(members, k):
                assert K.is_simplex(sub)


@given(small_complexes())
@settings(max_examples=60, deadline=None)
def test_complex_doc_round_trip(K):
    doc = complex_to_doc(K)
    assert complex_from_doc(doc) == K
    assert complex_to_doc(complex_from_doc(doc)) == doc


@given(small_complexes())
@settings(max_examples=30, deadline=None)
def test_subdivision_preserves_euler(K):
    sd = barycentric_subdivide(totalize(K))
    assert euler_characteristic(sd) == euler_characteristic(K)
    assert len(sd.vertices) == len(K.simplices)


@given(small_complexes())
@settings(max_examples=30, deadline=None)
def test_face_poset_order_complex_adjunction(K):
    assert face_poset(order_complex(face_poset(K))) == sd_poset(face_poset(K))


# -- posets ------------------------------------------------------------------


@given(small_posets())
@settings(max_examples=60, deadline=None)
def test_poset_doc_round_trip(P):
    doc = poset_to_doc(P)
    assert poset_from_doc(doc) == P


@given(small_posets())
@settings(max_examples=60, deadline=None)
def test_down_sets_are_open(P):
    for x in P.elements:
        U = P.down_set(x)
        assert P.is_open(U)
        for y in U:
            assert P.down_set(y) <= U


@given(small_posets(), st.integers(min_value=0, max_value=2))
@settings(max_examples=40, deadline=None)
def test_open_union_intersection(P, seed):
    opens = [P.down_set(x) for x in P.elements]
    for A in opens:
        for B in opens:
            assert P.is_open(A | B)
            assert P.is_open(A & B)


@given(small_posets())
@settings(max_examples=25, deadline=None)
def test_monotone_stream_unique_and_monotone(P):
    small = poset_from_relations([0, 1], [(0, 1)])
    seen = set()
    for f in enumerate_monotone_maps(P, small, budget=5_000):
        key = tuple(f.mapping[x] for x in P.elements)
        assert key not in seen
        seen.add(key)
        assert f.is_monotone()


@given(small_posets())
@settings(max_examples=25, deadline=None)
def test_adjunction_property(P):
    assert face_poset(order_complex(P)) == sd_poset(P)


# -- the permutation action --------------------------------------------------


@given(
    st.integers(min_value=2, max_value=3),
    st.lists(st.integers(min_value=0, max_value=3), min_size=3, max_size=3),
)
@settings(max_examples=60, deadline=None)
def test_action_group_law(n, coords):
    x = tuple(coords[:n]) if n <= len(coords) else tuple(coords) + (0,)
    x = (x + (0,) * n)[:n]
    for g in symmetric_group(n):
        for h in symmetric_group(n):
            assert act_name(h, act_name(g, x, 0), 0) == act_name(g * h, x, 0)


@given(small_posets())
@settings(max_examples=20, deadline=None)
def test_order_complex_simplices_are_chains(P):
    oc = order_complex(P)
    for s in oc.base.simplices:
        for a in s:
            for b in s:
                assert P.le(a, b) or P.le(b, a)
