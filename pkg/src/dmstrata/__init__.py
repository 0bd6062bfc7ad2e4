"""Combinatorics of the boundary stratification of moduli of stable curves."""

from .canonical import (
    CanonicalForm,
    are_isomorphic,
    automorphism_count,
    automorphism_count_extended,
    canonical_form,
    canonical_graph,
)
from .enumeration import enumerate_strata, one_step_degenerations
from .fn_coords import ChartDims, chart_dims, verify_dimension_identities
from .nerve import boundary_matrices, euler_characteristic, homology, order_complex, smith_normal_form
from .stable_graph import (
    ContractionMove,
    StableGraph,
    add_nonseparating_node,
    contract_edge,
    contract_set,
    smooth_graph,
    split_vertex,
    total_genus,
    validate,
)
from .strata import (
    StrataPoset,
    build_poset,
    closure_contains,
    compose_contractions,
    count_contraction_subsets,
    isotropy_rank,
)

__version__ = "0.1.0"
