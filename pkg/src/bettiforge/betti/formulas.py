"""Betti tables assembled from smaller pieces.

Each function here rebuilds a table from the tables of simpler ideals; the
tests compare every one of them against a direct Hochster computation.
"""

from __future__ import annotations

from math import comb

from ..exactla import QQ, FieldSpec
from ..graphs.classes import colon_edge_ideal
from ..graphs.core import Graph, delete_edge, edge_ideal, is_vertex_cover
from ..simplicial import bits
from .hochster import hochster_betti
from .table import BettiTable


def mapping_cone_betti(g: Graph, e: tuple[int, int], f: FieldSpec = QQ) -> BettiTable:
    """``beta_{i,a}(G) = beta_{i,a}(G - e) + beta_{i-1, a - x - y}(I(G - e) : xy)``.

    Needs ``N(x) <= N[y]`` for ``e = (x, y)``; the colon is then the ideal
    returned by ``colon_edge_ideal``.
    """
    x, y = e
    colon = colon_edge_ideal(g, e)  # raises when the neighbourhood condition fails
    base = hochster_betti(edge_ideal(delete_edge(g, e)), f)
    shifted = hochster_betti(colon, f).shifted(1, (1 << x) | (1 << y), g.n)
    return base + shifted


def disjoint_sum_betti(b_i: BettiTable, b_j: BettiTable) -> BettiTable:
    """Table of ``R/(I + J)`` for ideals in disjoint sets of variables.

    The tensor product of the two minimal resolutions is minimal, so the
    table is the convolution over disjoint multidegrees.
    """
    out: dict = {}
    for (r, a), u in b_i.entries.items():
        for (s, c), v in b_j.entries.items():
            if a & c:
                raise ValueError("the two tables have overlapping multidegrees")
            key = (r + s, a | c)
            out[key] = out.get(key, 0) + u * v
    return BettiTable(max(b_i.ground_size, b_j.ground_size), out, b_i.field_char)


def cone_betti(b_h: BettiTable, b_star: BettiTable) -> BettiTable:
    """Table of the cone ``x *_U H`` with apex ``x`` the last vertex.

    ``b_h`` is the table of ``H`` on vertices ``0..n-1``; ``b_star`` is the
    table of the star joining ``x = n`` to ``U``, on ``n + 1`` vertices.  With
    ``U`` a vertex cover,
    ``beta_{i,a}(G) = beta_{i,a}(H) + beta_{i-1,a-x}(H) + beta_{i,a}(star)``
    for ``i >= 1``, where the middle term only counts for ``i - 1 >= 1``
    (it comes from ``x I(H)``, whose table starts at the generators).
    """
    n = b_h.ground_size
    if b_star.ground_size != n + 1:
        raise ValueError("the star table must live on one more vertex than H")
    apex = 1 << n
    out: dict = {(0, 0): 1}
    for (i, a), v in b_h.entries.items():
        if i >= 1:
            out[(i, a)] = out.get((i, a), 0) + v
            out[(i + 1, a | apex)] = out.get((i + 1, a | apex), 0) + v
    for (i, a), v in b_star.entries.items():
        if i >= 1:
            out[(i, a)] = out.get((i, a), 0) + v
    return BettiTable(n + 1, out, b_h.field_char)


def star_along(n: int, u: int) -> Graph:
    """The star joining the new vertex ``n`` to each vertex of ``u``, on ``n + 1`` vertices."""
    return Graph.from_edges(n + 1, [(v, n) for v in bits(u)])


def cone_formula(h: Graph, u: int, f: FieldSpec = QQ) -> BettiTable:
    """``cone_betti`` fed with direct tables for ``H`` and the star over ``u``."""
    if h.num_edges == 0:
        raise ValueError("H must have at least one edge")
    if not is_vertex_cover(h, u):
        raise ValueError(f"{bits(u)} is not a vertex cover of H")
    return cone_betti(hochster_betti(edge_ideal(h), f), hochster_betti(edge_ideal(star_along(h.n, u)), f))


def join_betti(b_g: BettiTable, b_h: BettiTable) -> dict[tuple[int, int], int]:
    """Graded table of ``R/I(G * H)`` from the tables of ``G`` (m vertices) and ``H`` (n vertices).

    ``beta_{i,j} = sum_{k=0}^{j-2} [C(n,k) beta_{i-k,j-k}(G) + C(m,k) beta_{i-k,j-k}(H)]``
    plus ``C(m+n, j) - C(m, j) - C(n, j)`` on the linear strand ``j = i + 1``:
    a vertex set meeting both sides induces a disconnected independence
    complex, which contributes one extra class in ``H~_0``.
    """
    m, n = b_g.ground_size, b_h.ground_size
    gg, gh = b_g.graded(), b_h.graded()
    out: dict[tuple[int, int], int] = {(0, 0): 1}

    def add(key, v):
        if v:
            out[key] = out.get(key, 0) + v

    for (i, j), v in gg.items():
        if j >= 2:
            for k in range(0, n + 1):
                add((i + k, j + k), comb(n, k) * v)
    for (i, j), v in gh.items():
        if j >= 2:
            for k in range(0, m + 1):
                add((i + k, j + k), comb(m, k) * v)
    for j in range(2, m + n + 1):
        add((j - 1, j), comb(m + n, j) - comb(m, j) - comb(n, j))
    return dict(sorted(out.items()))


def join_formula(g: Graph, h: Graph, f: FieldSpec = QQ) -> dict[tuple[int, int], int]:
    return join_betti(hochster_betti(edge_ideal(g), f), hochster_betti(edge_ideal(h), f))

