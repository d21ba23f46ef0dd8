"""Membership in the recursive graph classes and the edge colon identity.

``in_class_g`` decides the class closed under: cycles are in; a graph that
is not a cycle is in if some edge ``{x, y}`` with ``N(x) <= N[y]`` can be
deleted leaving a graph that is in.  Disconnected graphs are decided
componentwise and edgeless components are accepted.
"""

from __future__ import annotations

from ..ideals import SquarefreeIdeal, ideal_sum
from ..simplicial import bits
from .core import (
    Graph,
    components,
    delete_edge,
    delete_vertices,
    edge_ideal,
    has_induced_cycle_mod,
    induced_subgraph,
    is_cycle,
)
from .enumerate import MAX_CANON_N, canonical_form

_MEMO: dict[tuple[int, int], bool] = {}


def cone_edges(g: Graph) -> list[tuple[int, int]]:
    """Ordered edges ``(x, y)`` with ``N(x) <= N[y]``, lexicographic."""
    out = []
    for x in range(g.n):
        for y in bits(g.adj[x]):
            if g.adj[x] & ~g.closed_neighbors(y) == 0:
                out.append((x, y))
    return out


def find_cone_edge(g: Graph) -> tuple[int, int] | None:
    edges = cone_edges(g)
    return edges[0] if edges else None


def _connected_in_g(g: Graph) -> bool:
    if g.num_edges == 0 or is_cycle(g):
        return True
    key = canonical_form(g) if g.n <= MAX_CANON_N else None
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    result = False
    tried = set()
    for x, y in cone_edges(g):
        e = (min(x, y), max(x, y))
        if e in tried:
            continue
        tried.add(e)
        if in_class_g(delete_edge(g, e)):
            result = True
            break
    if key is not None:
        _MEMO[key] = result
    return result


def in_class_g(g: Graph) -> bool:
    return all(_connected_in_g(induced_subgraph(g, c)) for c in components(g))


def in_class_gprime(g: Graph) -> bool:
    """In the class above with no induced cycle of length 5, 8, 11, ..."""
    return in_class_g(g) and not has_induced_cycle_mod(g, 2, 3, 3)


def colon_edge_ideal(g: Graph, e: tuple[int, int]) -> SquarefreeIdeal:
    """``I(G \\ e) : x_x x_y`` as ``I(G \\ N[y]) + (N_{G\\e}(y))``.

    Requires ``N(x) <= N[y]``.
    """
    x, y = e
    if not g.has_edge(x, y):
        raise ValueError(f"({x}, {y}) is not an edge")
    if g.adj[x] & ~g.closed_neighbors(y):
        raise ValueError(f"N({x}) is not contained in N[{y}]")
    rest = edge_ideal(delete_vertices(g, g.closed_neighbors(y)))
    nbrs = g.adj[y] & ~(1 << x)
    return ideal_sum(rest, SquarefreeIdeal.variables(g.n, bits(nbrs)))


def clear_memo() -> None:
    _MEMO.clear()
