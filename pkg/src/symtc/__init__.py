"""Symmetric simplicial and combinatorial complexity of finite complexes and
finite posets, with machine-checkable certificates."""

from .actions import (
    EquivariantTuple,
    GroupConstraint,
    Permutation,
    act_name,
    act_simplex,
    check_equivariant_tuple,
    expand_map,
    orbit,
    reduce_tuple,
    symmetric_group,
    symmetrize_open,
    symmetrize_simplices,
    tuple_constraint_group,
)
from .complexes import (
    OrderedComplex,
    SimplicialComplex,
    SimplicialMap,
    euler_characteristic,
    from_facets,
    is_subcomplex,
    restrict_map,
    validate_simplicial_map,
)
from .complexity import (
    INFINITY,
    ComplexityResult,
    GoodPiece,
    cc_plain,
    cc_sigma,
    sc_plain,
    sc_sigma,
    stabilize_over_r,
    tc_sigma_finite,
    tc_sigma_finite_sections,
)
from .constructions import (
    ProductComplex,
    SubdivisionTower,
    barycentric_subdivide,
    build_tower,
    iota,
    ordered_power,
    poset_tower,
    projection_pi,
    projection_rho,
    tau,
    totalize,
)
from .posets import (
    FinitePoset,
    MonotoneMap,
    MultiFence,
    enumerate_monotone_maps,
    face_poset,
    fence,
    fence_map_check,
    is_open,
    mapping_poset,
    multi_fence,
    order_complex,
    poset_from_relations,
    power_poset,
    principal_down_set,
    sd_poset,
)
from .search import (
    SearchResult,
    one_contiguous,
    plain_comb_homotopic,
    plain_contiguous,
    sym_comb_homotopic,
    sym_contiguous,
)
from .translate import (
    contiguity_to_homotopy,
    homotopy_from_section,
    homotopy_to_contiguity,
    retract_section,
    section_from_homotopy,
)
from .verify import validate
from .witnesses import (
    CombinatorialHomotopy,
    ContiguityChain,
    SectionWitness,
    certificate_from_doc,
)

__version__ = "0.1.0"
