import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bettiforge.graphs import (
    Graph,
    GraphFormatError,
    RootedTree,
    canonical_form,
    clique_sum,
    colon_edge_ideal,
    complete,
    complete_multipartite,
    cone_along,
    cycle,
    delete_edge,
    disjoint_union,
    edge_ideal,
    enumerate_graphs,
    fan,
    find_cone_edge,
    has_induced_cycle_mod,
    in_class_g,
    in_class_gprime,
    induced_matching_number,
    induced_subgraph,
    is_chordal,
    is_connected,
    is_disjoint_union_of_edges,
    is_unicyclic,
    jahangir,
    join,
    min_vertex_cover_size,
    parse_edge_list,
    parse_family,
    path,
    rooted_trees,
    star,
    t_path_ideal,
    unicyclic_graphs,
    wheel,
)
from bettiforge.graphs.classes import cone_edges
from bettiforge.ideals import SquarefreeIdeal, colon_by_monomial
from oracles import from_nx, induced_matching_brute, to_nx


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def relabel(g: Graph, perm) -> Graph:
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# ---- constructors ----------------------------------------------------------


def test_edge_ideal_examples():
    assert edge_ideal(path(2)).generators == (0b11,)
    assert len(edge_ideal(cycle(5)).generators) == 5
    assert edge_ideal(Graph.empty(4)).generators == ()


def test_wheel_3_is_k4():
    assert canonical_form(wheel(3)) == canonical_form(complete(4))


def test_family_shapes():
    assert nx.is_isomorphic(to_nx(wheel(6)), nx.wheel_graph(7))
    assert nx.is_isomorphic(to_nx(complete_multipartite([2, 3])), nx.complete_multipartite_graph(2, 3))
    assert nx.is_isomorphic(to_nx(star(4)), nx.star_graph(4))
    assert jahangir(3).n == 7 and jahangir(3).num_edges == 9
    assert jahangir(3).adj[6] == 0b010101
    f = fan(2, 4)
    assert f.n == 6 and f.num_edges == 3 + 8
    assert not f.has_edge(4, 5)


@pytest.mark.parametrize("bad", [lambda: cycle(2), lambda: jahangir(1), lambda: fan(0, 3), lambda: fan(1, 1)])
def test_family_errors(bad):
    with pytest.raises(ValueError):
        bad()


def test_parse_family():
    assert parse_family("cycle:5") == cycle(5)
    assert parse_family("fan:2,5") == fan(2, 5)
    assert parse_family("kpartite:2,2,2") == complete_multipartite([2, 2, 2])
    for bad in ["cycle", "blob:3", "fan:2", "cycle:a"]:
        with pytest.raises(ValueError):
            parse_family(bad)


def test_join_properties():
    g, h = cycle(4), path(3)
    j = join(g, h)
    assert induced_subgraph(j, g.vertex_mask) == g
    assert all(j.has_edge(u, g.n + v) for u in range(g.n) for v in range(h.n))


def test_clique_sum():
    g = clique_sum(cycle(4), complete(3), {0: 0, 1: 1})
    assert g.n == 5 and g.num_edges == 4 + 2
    with pytest.raises(ValueError):
        clique_sum(cycle(4), complete(3), {0: 0, 1: 2})


def test_disjoint_union_and_components():
    g = disjoint_union(path(2), path(2))
    assert is_disjoint_union_of_edges(g)
    assert not is_connected(g)


def test_edge_list_round_trip_and_errors():
    g = wheel(5)
    assert parse_edge_list(g.to_text()) == g
    for text, line in [("", 1), ("3\n0 3\n", 2), ("3\n1 1\n", 2), ("3\n0 1\n0 1\n", 3), ("3\n0\n", 2)]:
        with pytest.raises(GraphFormatError, match=f"line {line}"):
            parse_edge_list(text)


# ---- invariants --------------------------------------------------------------


def test_induced_cycle_mod_examples():
    assert has_induced_cycle_mod(cycle(5), 2, 3, 3)
    assert not has_induced_cycle_mod(cycle(6), 2, 3, 3)
    chorded = Graph.from_edges(6, cycle(6).edges() + [(0, 3)])
    assert not has_induced_cycle_mod(chorded, 2, 3, 3)
    assert has_induced_cycle_mod(chorded, 1, 3, 3)


def test_find_cone_edge_examples():
    assert find_cone_edge(path(2)) == (0, 1)
    assert find_cone_edge(cycle(5)) is None
    assert find_cone_edge(path(3)) == (0, 1)


def test_colon_edge_examples():
    assert colon_edge_ideal(path(3), (0, 1)) == SquarefreeIdeal.of(3, [[2]])
    s = star(3)
    assert colon_edge_ideal(s, (0, 3)) == SquarefreeIdeal.of(4, [[1], [2]])
    assert colon_edge_ideal(path(2), (0, 1)).generators == ()
    with pytest.raises(ValueError):
        colon_edge_ideal(cycle(5), (0, 1))


def test_t_path_ideal_examples():
    chain = RootedTree(3, 0, (None, 0, 1))
    assert t_path_ideal(chain, 3) == SquarefreeIdeal.of(3, [[0, 1, 2]])
    assert t_path_ideal(chain, 2) == SquarefreeIdeal.of(3, [[0, 1], [1, 2]])
    assert t_path_ideal(chain, 1) == SquarefreeIdeal.variables(3, range(3))
    cherry = RootedTree(3, 0, (None, 0, 0))
    assert t_path_ideal(cherry, 2) == SquarefreeIdeal.of(3, [[0, 1], [0, 2]])
    with pytest.raises(ValueError):
        t_path_ideal(cherry, 3)


def test_rooted_tree_validation():
    with pytest.raises(ValueError):
        RootedTree(3, 0, (None, 2, 1))
    with pytest.raises(ValueError):
        RootedTree(2, 0, (1, 0))


def test_class_membership_examples():
    assert in_class_g(Graph.from_edges(5, cycle(4).edges() + [(3, 4)]))
    assert in_class_g(cycle(5)) and not in_class_gprime(cycle(5))
    assert in_class_gprime(cycle(6))
    assert in_class_gprime(path(6))


@settings(max_examples=60, deadline=None)
@given(graphs(6))
def test_induced_matching_against_brute_force(g):
    assert induced_matching_number(g) == induced_matching_brute(g)
    assert induced_matching_number(g) <= min_vertex_cover_size(g)


@settings(max_examples=60, deadline=None)
@given(graphs(7))
def test_min_vertex_cover_against_networkx(g):
    h = nx.complement(to_nx(g))
    # a minimum vertex cover is the complement of a maximum independent set
    alpha = max((len(c) for c in nx.find_cliques(h)), default=0)
    assert min_vertex_cover_size(g) == g.n - alpha


@settings(max_examples=60, deadline=None)
@given(graphs(7))
def test_chordality_against_networkx(g):
    assert is_chordal(g) == nx.is_chordal(to_nx(g))


@settings(max_examples=60, deadline=None)
@given(graphs(7), st.randoms(use_true_random=False))
def test_canonical_form_is_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    assert canonical_form(relabel(g, perm)) == canonical_form(g)


def test_canonical_form_of_relabelled_c4():
    assert canonical_form(Graph.from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)])) == canonical_form(cycle(4))


# ---- enumeration -------------------------------------------------------------


def _atlas_counts(connected: bool):
    counts = {}
    for h in nx.graph_atlas_g()[1:]:
        if connected and not nx.is_connected(h):
            continue
        counts[h.number_of_nodes()] = counts.get(h.number_of_nodes(), 0) + 1
    return [counts[n] for n in range(1, 8)]


def test_enumeration_counts_match_atlas():
    assert [len(list(enumerate_graphs(n))) for n in range(1, 8)] == _atlas_counts(False)
    assert [len(list(enumerate_graphs(n, connected=True))) for n in range(1, 8)] == _atlas_counts(True)


def test_small_connected_counts():
    assert len(list(enumerate_graphs(3, connected=True))) == 2
    assert len(list(enumerate_graphs(4, connected=True))) == 6


def test_enumeration_is_isomorphism_free():
    reps = [to_nx(g) for g in enumerate_graphs(5)]
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            assert not nx.is_isomorphic(reps[i], reps[j])


def test_labelled_enumeration():
    assert len(list(enumerate_graphs(4, up_to_iso=False))) == 2 ** 6
    with pytest.raises(ValueError):
        next(enumerate_graphs(8, up_to_iso=False))
    with pytest.raises(ValueError):
        next(enumerate_graphs(10))


def test_unicyclic_counts():
    # one representative per class, each connected with exactly one cycle
    counts = []
    for n in range(3, 9):
        gs = unicyclic_graphs(n)
        assert all(is_unicyclic(g) for g in gs)
        counts.append(len(gs))
    brute = [sum(1 for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)
                 and h.number_of_edges() == n) for n in range(3, 8)]
    assert counts[:5] == brute
    assert counts[5] == 89


def test_rooted_tree_counts():
    assert [len(rooted_trees(n)) for n in range(1, 9)] == [1, 1, 2, 4, 9, 20, 48, 115]


def test_filters():
    chordal5 = list(enumerate_graphs(5, chordal=True))
    assert all(nx.is_chordal(to_nx(g)) for g in chordal5)
    assert len(list(enumerate_graphs(5, unicyclic=True))) == 5


# ---- class G audits ------------------------------------------------------------


def test_class_g_is_hereditary_up_to_7():
    for n in range(1, 8):
        for g in enumerate_graphs(n, in_g=True):
            for w in range(1, (1 << n) - 1):
                assert in_class_g(induced_subgraph(g, w)), (g.edges(), w)


def test_chordal_graphs_have_cone_edges_and_lie_in_g():
    for n in range(2, 8):
        for g in enumerate_graphs(n, chordal=True):
            if g.num_edges:
                assert find_cone_edge(g) is not None
            assert in_class_g(g)


def test_trees_and_unicyclic_graphs_in_g():
    for n in range(2, 8):
        for g in enumerate_graphs(n, connected=True):
            if g.num_edges == n - 1:
                assert in_class_g(g)
    for n in range(3, 9):
        assert all(in_class_g(g) for g in unicyclic_graphs(n))


def test_colon_identity_exhaustive_up_to_7():
    for n in range(2, 8):
        for g in enumerate_graphs(n):
            for x, y in cone_edges(g):
                rest = edge_ideal(delete_edge(g, (x, y)))
                assert colon_edge_ideal(g, (x, y)) == colon_by_monomial(rest, (1 << x) | (1 << y))


def test_networkx_round_trip():
    rnd = random.Random(7)
    for _ in range(20):
        h = nx.gnp_random_graph(6, 0.5, seed=rnd.randrange(1000))
        assert nx.is_isomorphic(to_nx(from_nx(h)), h)


def test_cone_along_requires_subset():
    with pytest.raises(ValueError):
        cone_along(path(2), 0b100)
