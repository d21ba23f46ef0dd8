"""Graphs, the constructors used for edge ideals, and graph-class tests."""

from .classes import (
    colon_edge_ideal,
    cone_edges,
    find_cone_edge,
    in_class_g,
    in_class_gprime,
)
from .core import (
    Graph,
    GraphFormatError,
    RootedTree,
    components,
    delete_edge,
    delete_vertices,
    distances_from,
    edge_ideal,
    has_induced_cycle_mod,
    independence_complex,
    induced_cycle_supports,
    induced_matching_number,
    induced_subgraph,
    is_chordal,
    is_connected,
    is_cycle,
    is_disjoint_union_of_edges,
    is_forest,
    is_unicyclic,
    is_vertex_cover,
    min_vertex_cover_size,
    parse_edge_list,
    read_edge_list,
    t_path_ideal,
    two_core,
    vertex_covers,
)
from .enumerate import (
    canonical_form,
    canonical_graph,
    enumerate_graphs,
    graphs_up_to,
    rooted_trees,
    unicyclic_graphs,
)
from .families import (
    clique_sum,
    complete,
    complete_multipartite,
    cone,
    cone_along,
    cycle,
    disjoint_union,
    fan,
    jahangir,
    jahangir_cover,
    join,
    parse_family,
    path,
    star,
    wheel,
)
