"""Exact search for vertex orders, (lex) shellings and vertex decompositions
of small simplicial complexes."""

from .core import (
    Complex,
    DualGraph,
    Face,
    build_complex,
    complete_skeleton,
    deletion,
    dimension,
    dual_graph,
    f_vector,
    faces,
    format_complex,
    is_pure,
    is_strongly_connected,
    link,
    parse_complex,
    relabel,
)
from .corpus import (
    EXAMPLE_IDS,
    brute_force_shellable,
    enumerate_complexes,
    example,
    gap_free_facet,
    nonshellable_interval,
)
from .decompose import (
    Leaf,
    LeafKind,
    Node,
    certificate_to_shelling,
    complete_shelling,
    is_shedding_vertex,
    is_shelling_completable,
    is_vertex_decomposable,
    shedding_order_certificate,
    verify_shedding_order,
)
from .orders import (
    OrderClass,
    OrderViolation,
    VertexOrder,
    check_order,
    count_orders,
    find_order,
    is_interval,
    is_semi_closed,
    is_unit_interval,
    iter_orders,
)
from .shelling import (
    ShellingCertificate,
    ShellingFailure,
    census_lex_orders,
    find_shelling,
    is_lex_shellable_under,
    is_shelling,
    lex_facet_order,
)

__all__ = [name for name in dir() if not name.startswith("_")]
