"""Independent reference implementations used only by the tests."""

from fractions import Fraction
from itertools import combinations

import networkx as nx

from bettiforge.graphs import Graph


def naive_rank(rows):
    """Plain Gauss-Jordan over exact rationals, no pivoting heuristics."""
    m = [[Fraction(v) for v in r] for r in rows]
    if not m:
        return 0
    r = 0
    for c in range(len(m[0])):
        piv = next((k for k in range(r, len(m)) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for k in range(len(m)):
            if k != r and m[k][c] != 0:
                f = m[k][c] / m[r][c]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        r += 1
    return r


def naive_rank_mod(rows, p):
    m = [[v % p for v in r] for r in rows]
    if not m:
        return 0
    r = 0
    for c in range(len(m[0])):
        piv = next((k for k in range(r, len(m)) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        for k in range(len(m)):
            if k != r and m[k][c]:
                f = m[k][c] * inv % p
                m[k] = [(a - f * b) % p for a, b in zip(m[k], m[r])]
        r += 1
    return r


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def faces_brute(n, nonfaces):
    """All faces as sorted vertex tuples, by testing every subset."""
    out = []
    for k in range(n + 1):
        for s in combinations(range(n), k):
            m = sum(1 << v for v in s)
            if not any(g & m == g for g in nonfaces):
                out.append(s)
    return out


def induced_matching_brute(g: Graph) -> int:
    edges = g.edges()
    best = 0
    for k in range(1, len(edges) + 1):
        found = False
        for es in combinations(edges, k):
            vs = [v for e in es for v in e]
            if len(set(vs)) < len(vs):
                continue
            sub = set(vs)
            if sum(1 for u, v in edges if u in sub and v in sub) == k:
                found = True
                break
        if not found:
            break
        best = k
    return best
