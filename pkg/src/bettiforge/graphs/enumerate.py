"""Canonical forms and exhaustive enumeration of small graphs and rooted trees.

The canonical form is the lexicographically largest upper-triangle adjacency
bit string over all vertex orders that respect an isomorphism-invariant
colour refinement.  Cells are ordered by colour and permuted by brute force
inside each cell, which is fine for ``n <= 9``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterator

from ..simplicial import bits, popcount
from .core import Graph, RootedTree, is_chordal, is_connected, is_unicyclic
from .families import cycle

MAX_CANON_N = 9


def _refine(g: Graph) -> list[int]:
    """Stable colour refinement; colours are ranks of invariant signatures."""
    colour = [popcount(a) for a in g.adj]
    while True:
        sig = [(colour[v], tuple(sorted(colour[u] for u in bits(g.adj[v])))) for v in range(g.n)]
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def _encode(g: Graph, order) -> int:
    """Adjacency bits of ``g`` listed in ``order`` (pairs i<j, row-major)."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    code = 0
    for i, v in enumerate(order):
        row = 0
        for u in bits(g.adj[v]):
            j = pos[u]
            if j > i:
                row |= 1 << (g.n - 1 - j)
        code = (code << (g.n - 1 - i)) | row
    return code


def canonical_form(g: Graph) -> tuple[int, int]:
    """``(n, code)``; equal exactly for isomorphic graphs."""
    if g.n > MAX_CANON_N:
        raise ValueError(f"canonical form supports at most {MAX_CANON_N} vertices, got {g.n}")
    return _canon(g.n, g.adj)


@lru_cache(maxsize=1 << 17)
def _canon(n: int, adj: tuple[int, ...]) -> tuple[int, int]:
    g = Graph.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "adj", adj)
    colour = _refine(g)
    cells = [[v for v in range(n) if colour[v] == c] for c in sorted(set(colour))]
    best = -1
    for parts in product(*(permutations(c) for c in cells)):
        order = [v for p in parts for v in p]
        code = _encode(g, order)
        if code > best:
            best = code
    return (n, best)


def from_canonical(form: tuple[int, int]) -> Graph:
    """Rebuild the canonical representative labelled by its canonical order."""
    n, code = form
    edges = []
    shift = n * (n - 1) // 2
    for i in range(n):
        for j in range(i + 1, n):
            shift -= 1
            if code >> shift & 1:
                edges.append((i, j))
    return Graph.from_edges(n, edges)


def canonical_graph(g: Graph) -> Graph:
    return from_canonical(canonical_form(g))


def _labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for sel in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[k] for k in range(len(pairs)) if sel >> k & 1])


@lru_cache(maxsize=None)
def _iso_classes(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class, by vertex extension."""
    if n == 0:
        return (Graph.empty(0),)
    seen = {}
    for base in _iso_classes(n - 1):
        for nb in range(1 << (n - 1)):
            adj = [a | ((nb >> v & 1) << (n - 1)) for v, a in enumerate(base.adj)] + [nb]
            form = _canon(n, tuple(adj))
            if form not in seen:
                seen[form] = from_canonical(form)
    return tuple(seen[k] for k in sorted(seen))


def enumerate_graphs(
    n: int,
    *,
    up_to_iso: bool = True,
    connected: bool = False,
    chordal: bool = False,
    unicyclic: bool = False,
    in_g: bool = False,
) -> Iterator[Graph]:
    """Stream graphs on exactly ``n`` vertices passing the requested filters."""
    if up_to_iso and n > MAX_CANON_N:
        raise ValueError(f"isomorphism-free enumeration supports n <= {MAX_CANON_N}")
    if not up_to_iso and n > 7:
        raise ValueError("labelled enumeration supports n <= 7")
    if unicyclic and up_to_iso:
        source = iter(unicyclic_graphs(n))
    else:
        source = iter(_iso_classes(n)) if up_to_iso else _labeled_graphs(n)
    from .classes import in_class_g

    for g in source:
        if connected and not is_connected(g):
            continue
        if unicyclic and not is_unicyclic(g):
            continue
        if chordal and not is_chordal(g):
            continue
        if in_g and not in_class_g(g):
            continue
        yield g


def graphs_up_to(n_max: int, n_min: int = 1, **filters) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from enumerate_graphs(n, **filters)


def _add_leaf(g: Graph, v: int) -> Graph:
    adj = list(g.adj) + [1 << v]
    adj[v] |= 1 << g.n
    return Graph(g.n + 1, tuple(adj))


@lru_cache(maxsize=None)
def unicyclic_graphs(n: int) -> tuple[Graph, ...]:
    """Connected graphs with exactly one cycle on ``n`` vertices, up to isomorphism.

    Every such graph is a cycle or has a leaf whose removal leaves a smaller
    one, so growing cycles by leaves reaches all of them.
    """
    if n < 3:
        return ()
    found = {canonical_form(cycle(n)): cycle(n)}
    for smaller in unicyclic_graphs(n - 1):
        for v in range(smaller.n):
            h = _add_leaf(smaller, v)
            form = canonical_form(h)
            if form not in found:
                found[form] = h
    return tuple(found[k] for k in sorted(found))


def rooted_canonical(tree: RootedTree) -> str:
    """AHU encoding of the rooted tree."""
    def enc(v: int) -> str:
        return "(" + "".join(sorted(enc(c) for c in tree.children(v))) + ")"

    return enc(tree.root)


@lru_cache(maxsize=None)
def rooted_trees(n: int) -> tuple[RootedTree, ...]:
    """Rooted trees on ``n`` vertices with root ``0``, up to rooted isomorphism."""
    if n < 1:
        return ()
    if n == 1:
        return (RootedTree(1, 0, (None,)),)
    found: dict[str, RootedTree] = {}
    for t in rooted_trees(n - 1):
        for v in range(t.n):
            grown = RootedTree(n, 0, t.parent + (v,))
            key = rooted_canonical(grown)
            if key not in found:
                found[key] = grown
    return tuple(found[k] for k in sorted(found))
