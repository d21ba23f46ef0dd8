import json
from pathlib import Path

import jsonschema
import pytest

from bettiforge.analysis import (
    THEOREMS,
    check_linear_strand_extension,
    check_multigraded_bound,
    check_subadditivity,
    linear_and_beyond,
    max_multigraded,
    search_open_questions,
    strand_report,
    verify_theorem,
)
from bettiforge.betti import BettiTable, hochster_betti
from bettiforge.graphs import (
    Graph,
    canonical_form,
    complete,
    cycle,
    edge_ideal,
    enumerate_graphs,
    is_forest,
    path,
    rooted_trees,
    wheel,
)
from bettiforge.ideals import SquarefreeIdeal, ideal_sum

SCHEMAS = Path(__file__).resolve().parents[1] / "docs" / "schemas"


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def table(g):
    return hochster_betti(edge_ideal(g))


def disconn():
    return hochster_betti(ideal_sum(edge_ideal(cycle(5)).embed(8), SquarefreeIdeal.of(8, [[5, 6, 7]])))


# ---- strands ---------------------------------------------------------------------


def test_disconnected_two_strand():
    rep = strand_report(disconn())
    s = rep.strands[2]
    assert s.present == (1, 3) and s.gaps == (2,) and not s.connected
    assert rep.disconnected() == [2]
    jsonschema.validate(rep.to_json(), schema("strands"))


def test_single_edge_strand():
    rep = strand_report(table(path(2)))
    assert list(rep.strands) == [1]
    assert (rep.strands[1].q, rep.strands[1].p) == (1, 1) and rep.connected


def test_strand_report_accepts_graded_dict():
    assert strand_report(table(cycle(6)).graded()).to_json() == strand_report(table(cycle(6))).to_json()


def test_chordal_graphs_strand_connected():
    for n in range(1, 8):
        for g in enumerate_graphs(n, chordal=True):
            assert strand_report(table(g)).connected


# ---- linear strand extension ----------------------------------------------------------


def test_linear_extension_c6():
    chk = check_linear_strand_extension(edge_ideal(cycle(6)), 1)
    assert chk.holds
    assert chk.observed == {1: (1, 2, 3), 2: (2, 3, 4, 5)}


def test_linear_extension_k0_is_identity():
    chk = check_linear_strand_extension(edge_ideal(path(5)), 0)
    assert chk.holds and chk.quoted_holds
    assert chk.observed == {j: s.present for j, s in strand_report(table(path(5))).strands.items()}


def test_linear_extension_p5_two_variables():
    chk = check_linear_strand_extension(edge_ideal(path(5)), 2)
    assert chk.holds
    assert chk.observed[1] == (1, 2, 3, 4)
    # the narrower interval [q, p + min(k, q)] misses i = 4 when k > q
    assert not chk.quoted_holds


def test_linear_extension_single_generator():
    chk = check_linear_strand_extension(SquarefreeIdeal.of(2, [[0, 1]]), 2)
    assert chk.observed == {1: (1, 2, 3)}
    assert chk.predicted == {1: (1, 3)} and chk.quoted == {1: (1, 2)}


def test_linear_extension_exhaustive_small():
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            if g.num_edges:
                for k in range(0, 3):
                    assert check_linear_strand_extension(edge_ideal(g), k).holds


def test_linear_extension_rejects_negative_k():
    with pytest.raises(ValueError):
        check_linear_strand_extension(edge_ideal(path(3)), -1)


# ---- subadditivity -------------------------------------------------------------------


def test_disjoint_edges_subadditive_with_equality():
    for k in range(1, 4):
        b = table(Graph.from_edges(2 * k, [(2 * i, 2 * i + 1) for i in range(k)]))
        rep = check_subadditivity(b)
        assert rep.holds
        t = rep.shifts
        assert all(t[a + c] == t[a] + t[c] for a in range(1, k + 1) for c in range(1, k + 1 - a))


def test_subadditivity_flags_violations():
    fake = BettiTable(6, {(0, 0): 1, (1, 0b11): 1, (2, 0b111111): 1})
    rep = check_subadditivity(fake)
    assert not rep.holds and rep.violations == [(1, 1, 2, 2, 6)]
    jsonschema.validate(rep.to_json(), schema("subadd"))


def test_chordal_and_unicyclic_subadditive():
    for n in range(1, 8):
        for g in enumerate_graphs(n, chordal=True):
            assert check_subadditivity(table(g)).holds
    assert verify_theorem("uc_multigraded", 8).passed


# ---- multigraded bounds ------------------------------------------------------------------


def test_forests_have_multigraded_values_at_most_one():
    for n in range(1, 8):
        for g in enumerate_graphs(n):
            if is_forest(g):
                assert check_multigraded_bound(table(g), 1)
    for t in rooted_trees(8):
        assert check_multigraded_bound(table(t.underlying_graph()), 1)


def test_cycle_witnesses():
    assert max_multigraded(table(cycle(6))) == (2, [(4, 0b111111)])
    assert max_multigraded(table(cycle(5)))[0] == 1
    assert check_multigraded_bound(table(cycle(5)), 1)
    assert not check_multigraded_bound(table(cycle(6)), 1)


def test_linear_and_beyond():
    assert linear_and_beyond(table(cycle(3))) == (2, 0)
    assert linear_and_beyond(table(cycle(6))) == (1, 2)


# ---- harness --------------------------------------------------------------------------


@pytest.mark.parametrize("name", ["tb", "greg", "indsub"])
def test_named_examples_pass(name):
    rep = verify_theorem(name, 7)
    assert rep.passed and rep.instances > 0


@pytest.mark.parametrize("name", ["kat", "hs", "an", "two_strand", "strandvertex", "cone_bound", "strandjoin"])
def test_invariant_checks(name):
    assert verify_theorem(name).passed


def test_wheel_three_is_the_only_cone_over_a_cycle_above_two():
    rep = verify_theorem("jahangir_bound", 9)
    assert rep.failures
    k4 = canonical_form(complete(4))
    for f in rep.failures:
        g = Graph.from_edges(f["graph"]["n"], f["graph"]["edges"])
        assert canonical_form(g) == k4
        assert "= 3 > 2" in f["detail"]
    assert max_multigraded(table(wheel(3)))[0] == 3
    assert all(max_multigraded(table(wheel(n)))[0] <= 2 for n in range(4, 9))


def test_report_schema_and_determinism():
    a = verify_theorem("subedge", 5).to_json()
    b = verify_theorem("subedge", 5).to_json()
    jsonschema.validate(a, schema("verify"))
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_failures_carry_repro_commands():
    rep = verify_theorem("jahangir_bound", 4).to_json()
    jsonschema.validate(rep, schema("verify"))
    assert rep["failures"][0]["repro"].startswith("printf '4\\n")


def test_parallel_harness_matches_serial():
    a = verify_theorem("tb", 6, jobs=2).to_json()
    b = verify_theorem("tb", 6).to_json()
    a.pop("elapsed_ms"), b.pop("elapsed_ms")
    assert a == b


def test_harness_errors():
    with pytest.raises(KeyError):
        verify_theorem("nope", 5)
    with pytest.raises(ValueError):
        verify_theorem("tb", 0)
    with pytest.raises(ValueError):
        verify_theorem("tb", 11)


def test_every_theorem_runs_at_small_size():
    for name in sorted(THEOREMS):
        rep = verify_theorem(name, 4)
        assert rep.instances >= 0
        if name != "jahangir_bound":
            assert rep.passed, name


def test_search_small():
    rep = search_open_questions(5)
    jsonschema.validate(rep, schema("search"))
    assert [q["verdict"] for q in rep["questions"]] == ["no counterexample up to n = 5"] * 3
    with pytest.raises(ValueError):
        search_open_questions(0)


def test_degree_three_example_not_in_quadratic_search():
    # the gap example is not an edge ideal, so the graph scan never meets it
    ideal = ideal_sum(edge_ideal(cycle(5)).embed(8), SquarefreeIdeal.of(8, [[5, 6, 7]]))
    assert any(bin(g).count("1") == 3 for g in ideal.generators)
