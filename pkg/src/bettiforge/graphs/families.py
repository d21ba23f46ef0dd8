"""Named graph families and the operations that build new graphs from old.

Vertex numbering is fixed so that golden outputs stay stable:

* ``path(n)``, ``cycle(n)``: vertices ``0..n-1`` in path/cyclic order.
* ``star(k)``: leaves ``0..k-1``, centre ``k``.
* ``cone_along(g, U)``, ``wheel``, ``jahangir``: apex appended last.
* ``fan(m, n)``: path on ``0..n-1``, apexes ``n..n+m-1``.
* ``complete_multipartite``: parts occupy consecutive blocks.
* ``join``/``disjoint_union``/``clique_sum``: vertices of ``g`` first, then
  the (remaining) vertices of ``h`` in their original order.
"""

from __future__ import annotations

import re

from ..simplicial import VertexMask, mask_of
from .core import Graph


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_multipartite(parts) -> Graph:
    parts = list(parts)
    if not parts or any(p < 1 for p in parts):
        raise ValueError("part sizes must be positive")
    label = []
    for idx, p in enumerate(parts):
        label += [idx] * p
    n = len(label)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if label[i] != label[j]])


def star(k: int) -> Graph:
    if k < 1:
        raise ValueError("star needs at least one leaf")
    return Graph.from_edges(k + 1, [(i, k) for i in range(k)])


def cone_along(g: Graph, u: VertexMask) -> Graph:
    """``x *_U G``: a new vertex ``g.n`` joined to every vertex of ``u``."""
    if u & ~g.vertex_mask:
        raise ValueError("cone set must lie inside the vertex set")
    adj = [a | ((u >> v & 1) << g.n) for v, a in enumerate(g.adj)]
    adj.append(u)
    return Graph(g.n + 1, tuple(adj))


def cone(g: Graph) -> Graph:
    return cone_along(g, g.vertex_mask)


def wheel(n: int) -> Graph:
    """``x * C_n`` on ``n + 1`` vertices."""
    return cone(cycle(n))


def jahangir_cover(n: int) -> VertexMask:
    """Every other vertex of ``C_{2n}`` (0, 2, 4, ...): a vertex cover of size ``n``."""
    return mask_of(range(0, 2 * n, 2))


def jahangir(n: int) -> Graph:
    """``J_{2,n} = x *_U C_{2n}`` with ``U`` the alternate-vertex cover."""
    if n < 2:
        raise ValueError("Jahangir graph needs n >= 2")
    return cone_along(cycle(2 * n), jahangir_cover(n))


def fan(m: int, n: int) -> Graph:
    """``F_{m,n}``: ``m`` apexes, each joined to every vertex of ``P_n``."""
    if m < 1 or n < 2:
        raise ValueError("fan graph needs m >= 1 and n >= 2")
    g = path(n)
    base = g.vertex_mask
    for _ in range(m):
        g = cone_along(g, base)
    return g


def disjoint_union(g: Graph, h: Graph) -> Graph:
    adj = list(g.adj) + [a << g.n for a in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def join(g: Graph, h: Graph) -> Graph:
    gm = g.vertex_mask
    hm = h.vertex_mask << g.n
    adj = [a | hm for a in g.adj] + [(a << g.n) | gm for a in h.adj]
    return Graph(g.n + h.n, tuple(adj))


def clique_sum(g: Graph, h: Graph, identify: dict[int, int]) -> Graph:
    """Glue ``h`` onto ``g`` identifying vertex ``b`` of ``h`` with ``identify[b]`` of ``g``.

    Both identified vertex sets must induce complete subgraphs.
    """
    hs = sorted(identify)
    gs = [identify[b] for b in hs]
    if len(set(gs)) != len(gs):
        raise ValueError("identification must be injective")
    for vs, gr, name in ((gs, g, "g"), (hs, h, "h")):
        for i, a in enumerate(vs):
            for b in vs[i + 1:]:
                if not gr.has_edge(a, b):
                    raise ValueError(f"identified vertices do not form a clique in {name}")
    rest = [b for b in range(h.n) if b not in identify]
    where = dict(identify)
    for k, b in enumerate(rest):
        where[b] = g.n + k
    edges = g.edges() + [(where[a], where[b]) for a, b in h.edges()]
    edges = {(min(a, b), max(a, b)) for a, b in edges}
    return Graph.from_edges(g.n + len(rest), sorted(edges))


FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "complete": (complete, 1),
    "star": (star, 1),
    "wheel": (wheel, 1),
    "jahangir": (jahangir, 1),
    "fan": (fan, 2),
    "kpartite": (lambda *parts: complete_multipartite(parts), None),
    "empty": (Graph.empty, 1),
}

_SPEC = re.compile(r"^([a-z]+):(\d+(?:,\d+)*)$")


def parse_family(spec: str) -> Graph:
    """Build a graph from ``name:args``, e.g. ``cycle:5``, ``fan:2,5``, ``kpartite:2,2,2``."""
    m = _SPEC.match(spec.strip())
    if not m:
        raise ValueError(f"bad family spec {spec!r}; expected name:int[,int...]")
    name, args = m.group(1), [int(a) for a in m.group(2).split(",")]
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
    fn, arity = FAMILIES[name]
    if arity is not None and len(args) != arity:
        raise ValueError(f"family {name!r} takes {arity} argument(s), got {len(args)}")
    return fn(*args)


__all__ = [
    "path", "cycle", "complete", "complete_multipartite", "star", "cone_along", "cone",
    "wheel", "jahangir", "jahangir_cover", "fan", "disjoint_union", "join", "clique_sum",
    "parse_family", "FAMILIES",
]
