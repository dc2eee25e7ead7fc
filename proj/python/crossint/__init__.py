"""Cross-intersecting family bounds, checked through fragments of bipartite graphs."""

from ._core import (
    BipartiteGraph,
    HypothesisError,
    alpha,
    binomial,
    build_circulant_graph,
    build_permutation_graph,
    build_set_graph,
    build_subspace_graph,
    cross_bound_permutations,
    cross_bound_sets,
    cross_bound_subspaces,
    derangements,
    enumerate_max_nontrivial,
    epsilon,
    fragments,
    gaussian_binomial,
    hilton_bound,
    hm_ft_bound,
    is_fragment,
    max_independent_set,
    max_matching,
    permutation_degree,
    run_cli,
    set_degree,
    subspace_degree,
    two_fragment_graph,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
