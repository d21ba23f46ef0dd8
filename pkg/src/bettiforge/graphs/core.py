"""Finite simple graphs on ``{0, ..., n-1}`` stored as neighbour bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from ..ideals import SquarefreeIdeal
from ..simplicial import SimplicialComplex, VertexMask, bits, compress, popcount


class GraphFormatError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[VertexMask, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for {self.n} vertices")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def vertex_mask(self) -> VertexMask:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_masks(self) -> list[VertexMask]:
        return [(1 << u) | (1 << v) for u, v in self.edges()]

    @property
    def num_edges(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> VertexMask:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> VertexMask:
        return self.adj[v] | (1 << v)

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def to_text(self) -> str:
        lines = [str(self.n)] + [f"{u} {v}" for u, v in self.edges()]
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def edge_ideal(g: Graph) -> SquarefreeIdeal:
    return SquarefreeIdeal(g.n, tuple(sorted(g.edge_masks())))


def independence_complex(g: Graph) -> SimplicialComplex:
    return SimplicialComplex(g.n, tuple(sorted(g.edge_masks())))


def induced_subgraph(g: Graph, w: VertexMask) -> Graph:
    """``G[w]`` relabelled to ``0..|w|-1`` in increasing vertex order."""
    return Graph(popcount(w), tuple(compress(g.adj[v] & w, w) for v in bits(w)))


def restrict_edges(g: Graph, w: VertexMask) -> Graph:
    """``G[w]`` on the original vertex set: edges outside ``w`` dropped, no relabelling."""
    return Graph(g.n, tuple((g.adj[v] & w) if w >> v & 1 else 0 for v in range(g.n)))


def delete_vertices(g: Graph, s: VertexMask) -> Graph:
    """``G \\ s`` keeping the ground set (vertices of ``s`` become isolated)."""
    return restrict_edges(g, g.vertex_mask & ~s)


def delete_edge(g: Graph, e) -> Graph:
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def components(g: Graph) -> list[VertexMask]:
    """Vertex masks of connected components, ordered by smallest vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_cycle(g: Graph) -> bool:
    """Connected, at least 3 vertices, every vertex of degree 2."""
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in range(g.n))


def is_vertex_cover(g: Graph, u: VertexMask) -> bool:
    return all(e & u for e in g.edge_masks())


def vertex_covers(g: Graph) -> list[VertexMask]:
    return [u for u in range(1 << g.n) if is_vertex_cover(g, u)]


def min_vertex_cover_size(g: Graph) -> int:
    """Exact minimum vertex cover by subset enumeration (smallest size first)."""
    edges = g.edge_masks()
    for k in range(g.n + 1):
        for c in combinations(range(g.n), k):
            m = sum(1 << v for v in c)
            if all(e & m for e in edges):
                return k
    return g.n


def induced_matching_number(g: Graph) -> int:
    """Largest induced matching, by exhaustive search over edge sets.

    Edge sets are grown in increasing edge order; a set is kept only if its
    edges are pairwise disjoint with no edge of ``g`` joining two of them.
    """
    edges = g.edge_masks()
    nb = [g.adj[v] for v in range(g.n)]

    def closed(e: int) -> int:
        u, v = bits(e)
        return nb[u] | nb[v] | e

    best = 0

    def grow(start: int, used: int, blocked: int, size: int):
        nonlocal best
        best = max(best, size)
        for idx in range(start, len(edges)):
            e = edges[idx]
            # e must avoid used vertices and have no neighbour among them
            if e & blocked:
                continue
            grow(idx + 1, used | e, blocked | closed(e), size + 1)

    grow(0, 0, 0, 0)
    return best


def has_induced_cycle_mod(g: Graph, residue: int, modulus: int, min_len: int = 3) -> bool:
    if modulus < 1:
        raise ValueError("modulus must be at least 1")
    return any(
        popcount(w) % modulus == residue % modulus
        for w in induced_cycle_supports(g, min_len)
    )


def induced_cycle_supports(g: Graph, min_len: int = 3) -> list[VertexMask]:
    """Vertex sets inducing a cycle, by subset enumeration."""
    out = []
    for w in range(1, 1 << g.n):
        k = popcount(w)
        if k < max(3, min_len):
            continue
        vs = bits(w)
        if any(popcount(g.adj[v] & w) != 2 for v in vs):
            continue
        if is_connected(induced_subgraph(g, w)):
            out.append(w)
    return out


def is_chordal(g: Graph) -> bool:
    """Perfect elimination test: repeatedly strip simplicial vertices."""
    alive = g.vertex_mask
    while alive:
        for v in bits(alive):
            nb = g.adj[v] & alive
            if all((g.adj[u] | (1 << u)) & nb == nb for u in bits(nb)):
                alive &= ~(1 << v)
                break
        else:
            return False
    return True


def is_unicyclic(g: Graph) -> bool:
    """Connected with exactly one cycle."""
    return g.n >= 3 and is_connected(g) and g.num_edges == g.n


def is_forest(g: Graph) -> bool:
    return g.num_edges == g.n - len(components(g))


def two_core(g: Graph) -> VertexMask:
    """Vertices left after repeatedly deleting vertices of degree <= 1."""
    alive = g.vertex_mask
    changed = True
    while changed:
        changed = False
        for v in bits(alive):
            if popcount(g.adj[v] & alive) <= 1:
                alive &= ~(1 << v)
                changed = True
    return alive


def distances_from(g: Graph, s: VertexMask) -> list[int | None]:
    dist: list[int | None] = [None] * g.n
    frontier = s
    seen = s
    d = 0
    while frontier:
        nxt = 0
        for v in bits(frontier):
            dist[v] = d
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return dist


def is_disjoint_union_of_edges(g: Graph) -> bool:
    """True iff every vertex has degree exactly 1 (isolated vertices excluded)."""
    return g.num_edges > 0 and all(g.degree(v) == 1 for v in range(g.n))


@dataclass(frozen=True)
class RootedTree:
    """Rooted tree; ``parent[root]`` is ``None``.  Edges point away from the root."""

    n: int
    root: int
    parent: tuple[int | None, ...]

    def __post_init__(self):
        if len(self.parent) != self.n or not 0 <= self.root < self.n:
            raise ValueError("parent table does not match the vertex count")
        if self.parent[self.root] is not None:
            raise ValueError("the root has no parent")
        for v in range(self.n):
            seen = set()
            u = v
            while u != self.root:
                if u in seen:
                    raise ValueError(f"parent relation has a cycle through {v}")
                seen.add(u)
                p = self.parent[u]
                if p is None or not 0 <= p < self.n:
                    raise ValueError(f"vertex {u} has no valid parent")
                u = p

    def children(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.parent[u] == v]

    def level(self, v: int) -> int:
        d = 0
        while v != self.root:
            v = self.parent[v]
            d += 1
        return d

    @property
    def height(self) -> int:
        return max(self.level(v) for v in range(self.n))

    def underlying_graph(self) -> Graph:
        return Graph.from_edges(self.n, [(p, v) for v, p in enumerate(self.parent) if p is not None])


def t_path_ideal(tree: RootedTree, length: int) -> SquarefreeIdeal:
    """Ideal of directed paths with ``length`` vertices in a rooted tree."""
    if not 1 <= length <= tree.height + 1:
        raise ValueError(f"path length {length} outside 1..{tree.height + 1}")
    gens = []
    for end in range(tree.n):
        m = 0
        v: int | None = end
        for _ in range(length):
            if v is None:
                break
            m |= 1 << v
            v = tree.parent[v]
        else:
            gens.append(m)
    return SquarefreeIdeal.of(tree.n, gens)


def parse_edge_list(text: str) -> Graph:
    """Edge-list format: ``n`` then ``u v`` per line, 0-indexed."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append((lineno, line))
    if not lines:
        raise GraphFormatError("line 1: empty graph file (expected the vertex count)")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise GraphFormatError(f"line {lineno}: expected the vertex count, got {head!r}") from None
    if n < 0:
        raise GraphFormatError(f"line {lineno}: vertex count must be nonnegative")
    edges = []
    seen = set()
    for lineno, line in lines[1:]:
        toks = line.split()
        if len(toks) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected integer vertices, got {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError(f"line {lineno}: vertex outside 0..{n - 1}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop at {u}")
        if (min(u, v), max(u, v)) in seen:
            raise GraphFormatError(f"line {lineno}: repeated edge {u} {v}")
        seen.add((min(u, v), max(u, v)))
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def read_edge_list(path) -> Graph:
    return parse_edge_list(Path(path).read_text())
