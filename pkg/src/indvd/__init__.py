"""r-independence complexes of graphs and vertex decompositions of Ind_r for trees."""

from .complex import (
    EMPTY,
    VOID,
    SimplicialComplex,
    canonical_key,
    deletion,
    f_vector,
    from_facets,
    is_face,
    is_simplex,
    join,
    link,
    simplex,
)
from .graph import (
    Graph,
    RootedTree,
    closed_neighborhood,
    connected_components,
    delete,
    enumerate_labeled_trees,
    induced,
    is_tree,
    random_tree,
    root_at,
)
from .oracle import (
    JoinNode,
    NonVDWitness,
    ShedNode,
    ShellingOrder,
    SimplexLeaf,
    certificate_link,
    is_shedding,
    restriction_sets,
    shelling_from_vd,
    vd_check,
    verify_certificate,
    verify_shelling,
)
from .rind import ind_complex, is_r_independent, link_by_graph
from .topology import BettiVector, boundary_rank, reduced_betti, sphere_counts
from .tree_vd import (
    LinkState,
    decompose,
    expand_link_state,
    find_shedding_vertex,
    link_shedding_vertex,
    shedding_characterization,
    survey_link_shedding,
)

__version__ = "0.1.0"
