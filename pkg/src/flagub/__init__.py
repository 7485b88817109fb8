"""Clique complexes of graphs and the extremal machinery around them."""

from .complex import (
    HomologyProfile,
    ManifoldCertificate,
    SimplicialComplex,
    clique_complex,
    homology,
    is_eulerian,
    is_homology_manifold,
    is_homology_sphere,
    is_weak_pseudomanifold,
    read_complex,
)
from .constructions import (
    balanced_sizes,
    cycle,
    cycle_join,
    graph_join,
    j_graph,
    j_star,
    k3r,
    multipartite,
    natural_partition,
    radical_graph,
    suspension,
    turan,
)
from .errors import FlagubError
from .extremal import (
    ExtremalConstants,
    MoveLog,
    PartitionCertificate,
    build_extremal_partition,
    check_extremal,
    closeness_to_turan,
    find_k3r_greedy,
    is_radical,
    maximize_clique_fn,
    radical_implies_j,
    zykov_ratios,
)
from .facevectors import (
    CliqueFunction,
    FaceVectorSet,
    eval_clique_function,
    f_to_h,
    gamma_to_h,
    h_to_f,
    h_to_g,
    h_to_gamma,
    multipartite_clique_count,
    sigma_shift_delta,
)
from .graph import (
    Clique,
    CliqueVector,
    Graph,
    clique_vector,
    contains_k3r,
    find_clique,
    iter_cliques,
    link_graph,
    maximal_cliques,
    read_graph,
    write_graph,
)
from .harness import (
    VerificationReport,
    growth_probe,
    non_uniqueness_variant,
    search_pseudomanifolds,
    verify_even_dim,
    verify_ratio_chain,
    verify_upper_bounds,
)
from .iso import are_isomorphic, canonical_form, find_isomorphism

__version__ = "0.1.0"
