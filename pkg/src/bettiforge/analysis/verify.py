"""Exhaustive checks of the edge-ideal results over small graphs.

Every theorem is a pair: a stream of instances drawn from its hypothesis
class, and a check that returns ``None`` or a failure detail.  Instances are
plain picklable tuples so the checks can be spread over a process pool.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from ..betti.hochster import hochster_betti
from ..betti.table import BettiTable
from ..exactla import FieldSpec
from ..graphs.classes import in_class_gprime
from ..graphs.core import (
    Graph,
    distances_from,
    edge_ideal,
    induced_matching_number,
    is_disjoint_union_of_edges,
    t_path_ideal,
    two_core,
    vertex_covers,
)
from ..graphs.enumerate import enumerate_graphs, rooted_trees, unicyclic_graphs
from ..graphs.families import complete_multipartite, cone_along, cycle, fan, jahangir, join, wheel
from ..ideals import SquarefreeIdeal
from ..simplicial import bits, popcount
from .bounds import linear_and_beyond
from .strands import strand_report
from .subadd import check_subadditivity


@lru_cache(maxsize=1 << 14)
def graph_betti(g: Graph, p: int = 0) -> BettiTable:
    return hochster_betti(edge_ideal(g), FieldSpec(p))


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def _shell_text(text: str) -> str:
    return text.replace("\n", "\\n")


def repro_graph(g: Graph, command: str, p: int) -> str:
    return f"printf '{_shell_text(g.to_text())}' | bettiforge {command} --graph - --char {p}"


def repro_ideal(ideal: SquarefreeIdeal, command: str, p: int) -> str:
    return f"printf '{_shell_text(ideal.to_text())}' | bettiforge {command} --ideal - --char {p}"


# ---- checks -----------------------------------------------------------------
# Each check takes (instance, p) and returns None or (subject_json, detail, repro).


def _fail(g: Graph, detail: str, command: str, p: int):
    return _graph_json(g), detail, repro_graph(g, command, p)


def _pairs_fail(g, b, pairs, p, label):
    rep = check_subadditivity(b, pairs)
    if rep.holds:
        return None
    a, c, ta, tc, tac = rep.violations[0]
    return _fail(g, f"{label}: t_{a + c}={tac} > t_{a}+t_{c}={ta + tc}", "subadd", p)


def check_indsub(g: Graph, p: int):
    b = graph_betti(g, p)
    nu = induced_matching_number(g)
    pd = b.pdim()
    pairs = [(a, c) for c in range(1, nu + 1) for a in range(1, pd - c + 1)]
    return _pairs_fail(g, b, pairs, p, f"b <= nu={nu}")


def check_nug1(g: Graph, p: int):
    b = graph_betti(g, p)
    c = induced_matching_number(g) + 1
    pairs = [(a, c) for a in range(1, b.pdim() - c + 1)]
    return _pairs_fail(g, b, pairs, p, f"b = nu+1 = {c}")


def check_tb(g: Graph, p: int):
    b = graph_betti(g, p)
    nu = induced_matching_number(g)
    t = b.t(nu + 1)
    if t != 2 * nu + 1:
        return _fail(g, f"nu={nu}: t_{nu + 1}={t}, expected {2 * nu + 1}", "betti", p)
    return None


def check_kat(g: Graph, p: int):
    b = graph_betti(g, p)
    nu = induced_matching_number(g)
    for i in range(1, b.pdim() + 1):
        t = b.t(i)
        if (i <= nu and t != 2 * i) or (i > nu and t >= 2 * i):
            return _fail(g, f"nu={nu}: t_{i}={t}", "betti", p)
    return None


def check_hs(g: Graph, p: int):
    t = graph_betti(g, p).shifts()
    for a in range(2, len(t)):
        if t[a] > t[a - 1] + t[1]:
            return _fail(g, f"t_{a}={t[a]} > t_{a - 1}+t_1={t[a - 1] + t[1]}", "subadd", p)
    return None


def check_an(g: Graph, p: int):
    t = graph_betti(g, p).shifts()
    for a in range(1, len(t)):
        for i in (1, 2, 3):
            if a > i and t[a] > t[a - i] + t[i]:
                return _fail(g, f"t_{a}={t[a]} > t_{a - i}+t_{i}={t[a - i] + t[i]}", "subadd", p)
    return None


def check_subedge(g: Graph, p: int):
    return _pairs_fail(g, graph_betti(g, p), None, p, "in class G")


def check_greg(g: Graph, p: int):
    nu = induced_matching_number(g)
    reg = graph_betti(g, p).reg()
    if reg != nu:
        return _fail(g, f"reg={reg} but nu={nu}", "nu", p)
    return None


def _strand_fail(g: Graph, b: BettiTable, p: int, label: str = ""):
    rep = strand_report(b)
    if rep.connected:
        return None
    j = rep.disconnected()[0]
    return _fail(g, f"{label}{j}-strand {list(rep.strands[j].present)} has gaps", "strands", p)


def check_gprime_strand(g: Graph, p: int):
    return _strand_fail(g, graph_betti(g, p), p)


def check_two_strand(g: Graph, p: int):
    s = strand_report(graph_betti(g, p)).strands.get(2)
    if s is not None and not s.connected:
        return _fail(g, f"2-strand {list(s.present)} has gaps", "strands", p)
    return None


def check_strandvertex(inst, p: int):
    h, u = inst
    g = cone_along(h, u)
    before = strand_report(graph_betti(h, p)).strands
    after = strand_report(graph_betti(g, p)).strands
    for j, s in after.items():
        if not s.connected and (j not in before or before[j].connected):
            return _fail(g, f"cone over {bits(u)}: {j}-strand {list(s.present)} has gaps", "strands", p)
    return None


def check_cone_bound(inst, p: int):
    h, u = inst
    g = cone_along(h, u)
    c, d = linear_and_beyond(graph_betti(h, p))
    gc, gd = linear_and_beyond(graph_betti(g, p))
    if gc > c + 1 or gd > d:
        return _fail(g, f"cone over {bits(u)}: H has (c, d)=({c}, {d}), cone has ({gc}, {gd})", "betti --multigraded", p)
    return None


def check_strandjoin(inst, p: int):
    g, h = inst
    return _strand_fail(join(g, h), graph_betti(join(g, h), p), p, f"join of {g.n}+{h.n} vertices: ")


def check_uc(g: Graph, p: int):
    b = graph_betti(g, p)
    core = two_core(g)
    m = popcount(core)
    top, wit = b.max_multigraded(1)
    if m % 3:
        if top > 1:
            return _fail(g, f"girth {m}: max multigraded {top}", "betti --multigraded", p)
        return None
    if top > 2:
        return _fail(g, f"girth {m}: max multigraded {top}", "betti --multigraded", p)
    k = m // 3
    if all(d is not None and d <= 2 for d in distances_from(g, core)):
        # the value 2 must occur exactly at (2k, cycle support)
        if (top, wit) != (2, [(2 * k, core)]):
            shown = [(i, bits(a)) for i, a in wit]
            return _fail(g, f"girth {m}: max {top} at {shown}, expected 2 only at ({2 * k}, {bits(core)})", "betti --multigraded", p)
    return None


def _bound_check(g: Graph, bound: int, p: int, label: str):
    top, wit = graph_betti(g, p).max_multigraded(1)
    if top > bound:
        i, a = wit[0]
        return _fail(g, f"{label}: beta_{i},{bits(a)} = {top} > {bound}", "betti --multigraded", p)
    return None


def check_family_bound(inst, p: int):
    label, g, bound = inst
    return _bound_check(g, bound, p, label)


def check_rooted_tree(inst, p: int):
    tree, t = inst
    ideal = t_path_ideal(tree, t)
    rep = check_subadditivity(hochster_betti(ideal, FieldSpec(p)))
    if rep.holds:
        return None
    a, c, ta, tc, tac = rep.violations[0]
    subject = {"n": tree.n, "edges": [[tree.parent[v], v] for v in range(tree.n) if v != tree.root], "t": t}
    return subject, f"t={t}: t_{a + c}={tac} > t_{a}+t_{c}={ta + tc}", repro_ideal(ideal, "subadd", p)


# ---- instance streams -------------------------------------------------------


def _all_graphs(n_max, **filters):
    for n in range(1, n_max + 1):
        yield from enumerate_graphs(n, **filters)


def _tb_graphs(n_max):
    for g in _all_graphs(n_max, connected=True):
        if g.num_edges and not is_disjoint_union_of_edges(g):
            yield g


def _gprime(n_max):
    return (g for g in _all_graphs(n_max) if in_class_gprime(g))


def _cover_pairs(n_max):
    for n in range(2, n_max):
        for h in enumerate_graphs(n):
            if h.num_edges:
                for u in vertex_covers(h):
                    yield (h, u)


def _strand_connected(g: Graph) -> bool:
    return strand_report(graph_betti(g, 0)).connected


def _join_pairs(n_max):
    graphs = [g for g in _all_graphs(n_max - 1) if _strand_connected(g)]
    for a in range(len(graphs)):
        for b in range(a, len(graphs)):
            if graphs[a].n + graphs[b].n <= n_max:
                yield (graphs[a], graphs[b])


def _unicyclic(n_max):
    for n in range(3, n_max + 1):
        yield from unicyclic_graphs(n)


def _jahangir_family(n_max):
    for n in range(3, n_max):
        c = cycle(n)
        for u in vertex_covers(c):
            yield (f"cone of C_{n} over {bits(u)}", cone_along(c, u), 2)
    for n in range(3, n_max):
        yield (f"W_{n}", wheel(n), 2)
    for n in range(2, (n_max - 1) // 2 + 1):
        yield (f"J_2,{n}", jahangir(n), 2)


def _fan_family(n_max):
    for m in range(1, n_max - 1):
        for n in range(2, n_max - m + 1):
            yield (f"F_{m},{n}", fan(m, n), 2)


def _kpartite_family(n_max):
    for k in range(2, n_max + 1):
        for parts in combinations_with_replacement(range(1, n_max + 1), k):
            if sum(parts) <= n_max:
                yield (f"K_{','.join(map(str, parts))}", complete_multipartite(parts), k - 1)


def _rooted(n_max):
    for n in range(1, n_max + 1):
        for tree in rooted_trees(n):
            for t in range(1, tree.height + 2):
                yield (tree, t)


@dataclass(frozen=True)
class Theorem:
    name: str
    statement: str
    default_n_max: int
    instances: object
    check: object


THEOREMS: dict[str, Theorem] = {
    t.name: t
    for t in [
        Theorem("indsub", "t_{a+b} <= t_a + t_b for b <= nu(G)", 7, _all_graphs, check_indsub),
        Theorem("nug1", "t_{a+b} <= t_a + t_b for b = nu(G) + 1", 7, _all_graphs, check_nug1),
        Theorem("tb", "t_{nu+1} = 2 nu + 1 unless G is a disjoint union of edges", 7, _tb_graphs, check_tb),
        Theorem("subedge", "subadditivity for graphs in class G", 7, lambda n: _all_graphs(n, in_g=True), check_subedge),
        Theorem("greg", "reg = nu for graphs in class G'", 7, _gprime, check_greg),
        Theorem("gprime_strand", "edge ideals of class G' are strand connected", 7, _gprime, check_gprime_strand),
        Theorem("strandvertex", "coning over a vertex cover keeps connected strands connected", 7, _cover_pairs, check_strandvertex),
        Theorem("cone_bound", "coning over a vertex cover raises linear multigraded values by at most 1", 7, _cover_pairs, check_cone_bound),
        Theorem("strandjoin", "the join of strand connected graphs is strand connected", 7, _join_pairs, check_strandjoin),
        Theorem("uc_multigraded", "multigraded values of unicyclic graphs are at most 1 or 2 by girth", 8, _unicyclic, check_uc),
        Theorem("jahangir_bound", "cones over vertex covers of cycles have multigraded values <= 2", 9, _jahangir_family, check_family_bound),
        Theorem("fan_bound", "fan graphs have multigraded values <= 2", 9, _fan_family, check_family_bound),
        Theorem("kpartite_bound", "complete k-partite graphs have multigraded values <= k - 1", 8, _kpartite_family, check_family_bound),
        Theorem("rooted_tree", "subadditivity for t-path ideals of rooted trees", 8, _rooted, check_rooted_tree),
        Theorem("kat", "t_i = 2i for i <= nu and t_i < 2i beyond", 7, _all_graphs, check_kat),
        Theorem("hs", "t_a <= t_{a-1} + t_1", 7, _all_graphs, check_hs),
        Theorem("an", "t_a <= t_{a-i} + t_i for i in 1, 2, 3", 7, _all_graphs, check_an),
        Theorem("two_strand", "the 2-strand of an edge ideal is connected", 7, _all_graphs, check_two_strand),
    ]
}

# graph-class enumeration is capped at 7 labelled / 9 up to isomorphism
MAX_N = {"uc_multigraded": 10, "jahangir_bound": 12, "fan_bound": 12, "kpartite_bound": 12, "rooted_tree": 10}


@dataclass
class VerifyReport:
    theorem: str
    n_max: int
    field_char: int
    instances: int = 0
    failures: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "n_max": self.n_max,
            "field_char": self.field_char,
            "instances": self.instances,
            "failures": self.failures,
            "elapsed_ms": self.elapsed_ms,
        }


def _run(check, chunk, p):
    return [r for r in (check(inst, p) for inst in chunk) if r is not None], len(chunk)


def verify_theorem(name: str, n_max: int | None = None, f: FieldSpec = FieldSpec(0), jobs: int = 1) -> VerifyReport:
    if name not in THEOREMS:
        raise KeyError(f"unknown theorem {name!r}; choose from {', '.join(sorted(THEOREMS))}")
    th = THEOREMS[name]
    n_max = th.default_n_max if n_max is None else n_max
    cap = MAX_N.get(name, 9)
    if n_max < 1 or n_max > cap:
        raise ValueError(f"n_max for {name} must be between 1 and {cap}")
    p = f.characteristic
    start = time.perf_counter()
    insts = list(th.instances(n_max))
    if jobs > 1 and len(insts) > jobs:
        chunks = [insts[k::jobs] for k in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run, [th.check] * jobs, chunks, [p] * jobs))
    else:
        parts = [_run(th.check, insts, p)]
    fails = sorted(
        ({"graph": s, "detail": d, "repro": r} for part, _ in parts for s, d, r in part),
        key=lambda x: (x["graph"]["n"], x["graph"]["edges"], x["detail"]),
    )
    rep = VerifyReport(name, n_max, p, sum(c for _, c in parts), fails)
    rep.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return rep
