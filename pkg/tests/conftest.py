import pytest

from symtc.complexes import from_facets
from symtc.posets import poset_from_relations


@pytest.fixture
def point_complex():
    return from_facets("a", [("a",)])


@pytest.fixture
def edge():
    """Delta^1 with vertices a < b."""
    return from_facets("ab", [("a", "b")])


@pytest.fixture
def triangle():
    """The full 2-simplex on a, b, c."""
    return from_facets("abc", [("a", "b", "c")])


@pytest.fixture
def hollow_triangle():
    """The boundary of the 2-simplex: a 3-cycle."""
    return from_facets("abc", [("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def square_cycle():
    """A 4-cycle graph complex."""
    return from_facets("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])


@pytest.fixture
def point_poset():
    return poset_from_relations("a", [])


@pytest.fixture
def chain2():
    return poset_from_relations([0, 1], [(0, 1)])


@pytest.fixture
def chain3():
    return poset_from_relations([0, 1, 2], [(0, 1), (1, 2)])


@pytest.fixture
def v_poset():
    """p <= r >= q: the 3-point model with a maximum."""
    return poset_from_relations("pqr", [("p", "r"), ("q", "r")])


@pytest.fixture
def circle_poset():
    """The 4-point circle model: a, b < c, d."""
    return poset_from_relations(
        "abcd", [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
    )
