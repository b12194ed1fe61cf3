import pytest

from app.algebra.groebner import ResourceCaps
from app.conjecture.checks import PRODUCT_DISCREPANCY, check_fixed_pair, check_theorem44, substitution_verdict
from app.conjecture.pairsets import (
    build_V_set,
    build_Vprime_set,
    build_W_set,
    check_prop41,
    clique_free_vertex,
    edge_identification_colorable,
    identify,
    in_V,
    in_W,
    labeled_graphs,
)
from app.conjecture.structure import PAPER_DISCREPANCY, StructuralOutcome, catalog, verify_A4, verify_prop43, verify_small_critical
from app.errors import ComputationAborted, ParameterError
from app.graphs.canonical import canonical_form, is_isomorphic
from app.graphs.coloring import chromatic_number, is_k_colorable
from app.graphs.graph import Graph, complete, cycle, join, relabel, tensor_product
from app.graphs.named import grotzsch, h0
from app.models import ProductEdges, V3Mode, Verdict


# ----- pair sets --------------------------------------------------------------


def test_labeled_graph_enumeration():
    assert len(list(labeled_graphs(3))) == 8
    assert list(labeled_graphs(1)) == [Graph(1)]


def test_identify_merges_an_edge():
    merged = identify(cycle(5), 1, 2)
    assert merged.n == 4
    assert is_isomorphic(merged, cycle(4))
    assert identify(complete(4), 1, 2) == complete(3)


def test_edge_identification_condition():
    assert edge_identification_colorable(cycle(5), 4)
    assert edge_identification_colorable(complete(4), 4)
    assert not edge_identification_colorable(complete(4), 3)
    assert not edge_identification_colorable(Graph(3, [(1, 2)]), 4)


def test_clique_free_vertex_modes():
    g = h0()
    assert clique_free_vertex(g, 4, V3Mode.LITERAL)
    assert clique_free_vertex(g, 4, V3Mode.VERTEX1)
    moved = relabel(g, [2, 1, 3, 4, 5, 6, 7])
    assert clique_free_vertex(moved, 4, V3Mode.LITERAL)
    assert not clique_free_vertex(moved, 4, V3Mode.VERTEX1)


def test_w_membership():
    assert in_W(complete(3), complete(3), 4)
    assert not in_W(complete(3), complete(3), 3)
    assert not in_W(cycle(5), cycle(5), 3, ProductEdges.FULL)
    assert in_W(complete(2), cycle(5), 3, ProductEdges.FULL)


def test_v_empty_at_three_vertices():
    v = build_V_set(3, 3, 3)
    assert len(v) == 0
    assert v.examined == 64
    assert not v.sampled


def test_w_set_on_two_vertices():
    w = build_W_set(3, 2, 2)
    assert w.examined == 4
    assert len(w) == 4
    for g, h in w:
        assert min(chromatic_number(g), chromatic_number(h)) <= 2


@pytest.mark.parametrize("k, n, nprime", [(3, 3, 3), (3, 4, 4), (4, 4, 4), (4, 3, 4)])
def test_v_prime_inside_v(k, n, nprime):
    v = build_V_set(k, n, nprime)
    vprime = build_Vprime_set(k, n, nprime)
    assert vprime.issubset(v)
    assert all(in_V(g, h, k) for g, h in v)


def test_pair_set_limits():
    with pytest.raises(ParameterError):
        build_W_set(3, 6, 2)
    with pytest.raises(ParameterError):
        build_W_set(1, 2, 2)


def test_prop41_at_three_vertices():
    report = check_prop41(3, 3, 3)
    assert report.holds and report.holds_prime
    assert report.v_size == 0
    assert report.examined == 64
    assert not report.sampled


def test_prop41_refuses_to_sample_unless_asked():
    with pytest.raises(ParameterError):
        check_prop41(3, 5, 5)
    report = check_prop41(3, 5, 5, allow_sampled=True, sample_size=40, seed=3)
    assert report.sampled
    assert report.examined == 40
    assert any(note.startswith("sampled") for note in report.notes)


# ----- algebraic checks -------------------------------------------------------


def test_theorem44_at_three_vertices_matches_prop41():
    outcome = check_theorem44(3, 3, 3)
    assert outcome.verdict == Verdict.TRUE
    assert "tilde_I" in outcome.stats
    assert check_prop41(3, 3, 3, v3_mode=V3Mode.VERTEX1).holds


def test_theorem44_can_compute_both_sides():
    outcome = check_theorem44(3, 3, 3, compute_both=True)
    assert outcome.verdict == Verdict.TRUE
    assert set(outcome.stats) == {"tilde_I", "tilde_J"}


def test_theorem44_rejects_small_k():
    with pytest.raises(ParameterError):
        check_theorem44(2, 3, 3)


def test_theorem44_aborts_on_caps():
    with pytest.raises(ComputationAborted):
        check_theorem44(3, 3, 3, caps=ResourceCaps(max_terms=2))


@pytest.mark.parametrize(
    "g, h, k, verdict",
    [
        (cycle(5), cycle(5), 3, Verdict.TRUE),
        (complete(3), complete(3), 4, Verdict.FALSE),
        (complete(2), cycle(5), 3, Verdict.FALSE),
        (cycle(5), cycle(7), 3, Verdict.TRUE),
    ],
)
def test_fixed_pair_verdicts(g, h, k, verdict):
    outcome = check_fixed_pair(g, h, k)
    assert outcome.verdict == verdict
    assert outcome.oracle["agrees"]
    assert outcome.oracle["product"] == "full"
    assert "L" in outcome.stats


@pytest.mark.parametrize(
    "g, h, k",
    [(complete(3), cycle(5), 3), (cycle(5), cycle(5), 3), (complete(2), complete(3), 3), (complete(3), complete(3), 3)],
)
def test_monotone_encoding_flags_disagreement_with_the_tensor_product(g, h, k):
    outcome = check_fixed_pair(g, h, k, product_edges=ProductEdges.MONOTONE)
    tensor_unit = not is_k_colorable(tensor_product(g, h), k - 1)
    assert outcome.oracle["agrees"]
    assert (PRODUCT_DISCREPANCY in outcome.notes) == ((outcome.verdict == Verdict.TRUE) != tensor_unit)


@pytest.mark.parametrize(
    "g, h, solvable",
    [(complete(2), complete(2), True), (complete(3), complete(3), False), (complete(3), complete(2), True)],
)
def test_substitution_agrees_with_w_membership(g, h, solvable):
    assert substitution_verdict(g, h, 3) is solvable


# ----- structural checks ------------------------------------------------------


@pytest.mark.parametrize("k", range(2, 11))
def test_prop43_identity(k):
    outcome = verify_prop43(k)
    assert outcome.passed, outcome.discrepancies
    assert outcome.details["value_at_one"] == k
    assert outcome.details["e_forced_zero"]


def test_prop43_needs_k_at_least_two():
    with pytest.raises(ParameterError):
        verify_prop43(1)


def test_catalog_entries():
    assert [name for name, _ in catalog(3, 7)] == ["C7"]
    assert catalog(3, 6) == []
    assert [name for name, _ in catalog(5, 7)] == ["K2+C5"]
    assert len(catalog(4, 7)) == 7
    assert catalog(4, 5) == []


def test_small_critical_odd_cycles():
    outcome = verify_small_critical(3, 7)
    assert outcome.passed, outcome.discrepancies
    found = {entry["order"]: entry["found"] for entry in outcome.details["orders"]}
    assert found[3] == [canonical_form(complete(3))]
    assert found[5] == [canonical_form(cycle(5))]
    assert found[7] == [canonical_form(cycle(7))]
    assert found[4] == found[6] == []


def test_small_critical_only_k4_up_to_five_vertices():
    outcome = verify_small_critical(4, 5)
    assert outcome.passed
    nonempty = [entry["order"] for entry in outcome.details["orders"] if entry["found"]]
    assert nonempty == [4]
    assert not any(entry["definitional"] for entry in outcome.details["orders"])


def test_small_critical_limits():
    with pytest.raises(ParameterError):
        verify_small_critical(0, 5)
    with pytest.raises(ParameterError):
        verify_small_critical(4, 9)


def test_structural_failures_are_flagged():
    outcome = StructuralOutcome("demo")
    outcome.fail("seven became six")
    assert not outcome.passed
    assert outcome.discrepancies == [f"{PAPER_DISCREPANCY}: seven became six"]


@pytest.mark.slow
def test_small_critical_order_six():
    outcome = verify_small_critical(4, 7)
    assert outcome.passed, outcome.discrepancies
    found = {entry["order"]: entry["found"] for entry in outcome.details["orders"]}
    assert found[6] == [canonical_form(join(complete(1), cycle(5)))]
    assert len(found[7]) == 7
    definitional = [entry["order"] for entry in outcome.details["orders"] if entry["definitional"]]
    assert definitional == [7]


@pytest.mark.slow
def test_small_critical_spot_checks_for_k5():
    outcome = verify_small_critical(5, 8)
    assert outcome.passed
    assert [check["graph"] for check in outcome.details["spot_checks"]][:2] == ["K5", "K2+C5"]


@pytest.mark.slow
def test_verify_a4():
    outcome = verify_A4()
    assert outcome.passed, outcome.discrepancies
    assert outcome.details["count"] == 7
    assert outcome.details["h0_identified"]
    assert len(outcome.details["triangle_free_vertex_classes"]) == 1
    assert min(outcome.details["min_degrees"]) >= 3


# ----- desk-scale runs --------------------------------------------------------


@pytest.mark.slow
@pytest.mark.parametrize("n, nprime", [(4, 4), (4, 5)])
def test_theorem44_desk(n, nprime):
    assert check_theorem44(3, n, nprime).verdict == Verdict.TRUE


@pytest.mark.slow
def test_theorem44_and_prop41_agree_at_four_vertices():
    assert check_theorem44(3, 4, 4).verdict == Verdict.TRUE
    assert check_prop41(3, 4, 4, v3_mode=V3Mode.VERTEX1).holds


@pytest.mark.slow
@pytest.mark.parametrize("h", [h0(), grotzsch()])
def test_h0_pairs(h):
    outcome = check_fixed_pair(h0(), h, 4)
    assert outcome.verdict == Verdict.TRUE
    assert outcome.oracle["agrees"]


@pytest.mark.slow
def test_c7_pair():
    assert check_fixed_pair(cycle(7), cycle(7), 3).verdict == Verdict.TRUE
