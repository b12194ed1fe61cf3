import pytest

from app.config import override_settings
from app.conjecture import suites
from app.conjecture.checks import CheckOutcome
from app.conjecture.suites import (
    ORACLE_MISMATCH,
    SUITES,
    TaskSpec,
    is_mismatch,
    product_chromatic_bounds,
    run_experiment_suite,
    run_task,
)
from app.errors import OracleMismatch, ParameterError
from app.graphs.named import load_graph
from app.models import Verdict


def test_suite_catalogue():
    assert set(SUITES) == {"thm44-desk", "pairs-desk", "cycles-desk", "structural", "section43", "thm37", "cross-oracle"}
    assert len(SUITES["cross-oracle"]) == 20
    assert sum(spec.parameters.get("random", 0) for spec in SUITES["cross-oracle"]) == 200
    assert len(SUITES["structural"]) == 13


def test_task_label():
    spec = TaskSpec(task="pair", parameters={"graph_g": "C5", "graph_h": "C5", "k": 3})
    assert spec.label() == "pair(graph_g=C5, graph_h=C5, k=3)"


def test_pair_task(config):
    record = run_task(TaskSpec(task="pair", parameters={"graph_g": "C5", "graph_h": "C5", "k": 3}), config)
    assert record.verdict == Verdict.TRUE
    assert record.oracle["agrees"]
    assert record.abort_cap is None
    assert record.elapsed_ms >= 0
    assert not is_mismatch(record)


def test_thm44_task_with_cross_check(config):
    record = run_task(TaskSpec(task="thm44", parameters={"k": 3, "n": 3, "nprime": 3, "cross_check": True}), config)
    assert record.verdict == Verdict.TRUE
    assert record.oracle["name"] == "pair-set-inclusion"
    assert record.oracle["agrees"]
    assert record.oracle["v_size"] == 0


def test_capped_task_becomes_an_aborted_record(config):
    capped = override_settings(config, max_terms=1)
    record = run_task(TaskSpec(task="thm44", parameters={"k": 3, "n": 3, "nprime": 3}), capped)
    assert record.verdict == Verdict.ABORTED
    assert record.abort_cap == "max_terms"
    assert "partial" in record.stats
    assert not is_mismatch(record)


def test_oracle_mismatch_becomes_a_flagged_record(config, monkeypatch):
    def disagree(parameters, config):
        raise OracleMismatch("made up", details={"algebraic": True})

    monkeypatch.setitem(suites.HANDLERS, "pair", disagree)
    record = run_task(TaskSpec(task="pair", parameters={}), config)
    assert record.verdict == Verdict.TRUE
    assert record.notes[0].startswith(ORACLE_MISMATCH)
    assert is_mismatch(record)


def test_parameter_errors_propagate(config):
    with pytest.raises(ParameterError):
        run_task(TaskSpec(task="nonsense"), config)
    with pytest.raises(ParameterError):
        run_task(TaskSpec(task="thm44", parameters={"k": 2, "n": 3, "nprime": 3}), config)
    with pytest.raises(ParameterError):
        run_task(TaskSpec(task="thm37", parameters={"k": 5}), config)


def test_structural_tasks(config):
    record = run_task(TaskSpec(task="prop43", parameters={"k": 5}), config)
    assert record.verdict == Verdict.TRUE
    assert record.oracle["name"] == "prop43(k=5)"
    record = run_task(TaskSpec(task="small-critical", parameters={"k": 3, "max_n": 5}), config)
    assert record.verdict == Verdict.TRUE


def test_small_cross_oracle_batch(config):
    record = run_task(TaskSpec(task="cross-oracle", parameters={"k": 3, "n": 2, "nprime": 3}), config)
    assert record.verdict == Verdict.TRUE
    assert record.oracle["pairs"] == 16
    assert record.oracle["mismatches"] == 0


def test_random_cross_oracle_batch_is_seeded(config):
    spec = TaskSpec(task="cross-oracle", parameters={"k": 3, "n": 3, "nprime": 3, "random": 10, "seed": 7})
    first, second = run_task(spec, config), run_task(spec, config)
    assert first.oracle["pairs"] == 10
    assert first.oracle["unit"] == second.oracle["unit"]


def test_unknown_suite(config, ledger):
    with pytest.raises(ParameterError):
        run_experiment_suite("nope", ledger=ledger, config=config)


def test_suite_records_are_appended_and_reproducible(config, ledger):
    first = run_experiment_suite("cycles-desk", ledger=ledger, config=config)
    second = run_experiment_suite("cycles-desk", ledger=ledger, config=config)
    assert [r.verdict for r in first] == [Verdict.TRUE] * 3
    assert [r.verdict for r in second] == [r.verdict for r in first]
    stored = list(ledger.read())
    assert len(stored) == 6
    assert [r.parameters for r in stored[:3]] == [spec.parameters for spec in SUITES["cycles-desk"]]


def test_suite_without_ledger(config):
    records = run_experiment_suite("cycles-desk", config=config)
    assert [r.verdict for r in records] == [Verdict.TRUE] * 3


@pytest.mark.slow
def test_thm44_desk_suite(config, ledger):
    records = run_experiment_suite("thm44-desk", ledger=ledger, config=config)
    assert [r.verdict for r in records] == [Verdict.TRUE, Verdict.TRUE]


@pytest.mark.slow
def test_structural_suite(config):
    records = run_experiment_suite("structural", config=config)
    assert all(r.verdict == Verdict.TRUE for r in records)


@pytest.mark.slow
def test_cross_oracle_suite(config):
    records = run_experiment_suite("cross-oracle", config=config)
    assert not any(is_mismatch(r) for r in records)
    assert all(r.verdict == Verdict.TRUE for r in records)


@pytest.mark.parametrize(
    "g, h, k, expected",
    [
        ("K3", "C5", 3, (True, True)),
        ("K2", "K3", 3, (False, True)),
        ("K4", "K4", 3, (True, False)),
    ],
)
def test_product_chromatic_bounds(g, h, k, expected):
    assert product_chromatic_bounds(load_graph(g), load_graph(h), k) == expected


def test_thm37_needs_both_bounds(config, monkeypatch):
    monkeypatch.setattr(suites, "product_chromatic_bounds", lambda g, h, k: (True, False))
    record = run_task(TaskSpec(task="thm37", parameters={"k": 6}), config)
    assert record.verdict == Verdict.FALSE
    assert "no lifted 6-colouring" in record.notes
    assert record.notes[0] == "product order 90"

    monkeypatch.setattr(suites, "product_chromatic_bounds", lambda g, h, k: (True, True))
    record = run_task(TaskSpec(task="thm37", parameters={"k": 6}), config)
    assert record.verdict == Verdict.TRUE
    assert record.notes == ["product order 90"]


def test_cross_oracle_uses_the_configured_strategy(config, monkeypatch):
    seen = []

    def fake_check(g, h, k, **kwargs):
        seen.append(kwargs["strategy"])
        return CheckOutcome(Verdict.TRUE)

    monkeypatch.setattr(suites, "check_fixed_pair", fake_check)
    sugar = override_settings(config, selection_strategy="sugar")
    record = run_task(TaskSpec(task="cross-oracle", parameters={"k": 3, "n": 2, "nprime": 2}), sugar)
    assert record.oracle["pairs"] == len(seen) == 4
    assert set(seen) == {"sugar"}


def test_suite_workers_write_the_log_file(config, tmp_path):
    log_file = tmp_path / "workers.log"
    parallel = override_settings(config, threads=2, log_file=str(log_file), log_level="INFO")
    records = run_experiment_suite("cycles-desk", config=parallel)
    assert [r.verdict for r in records] == [Verdict.TRUE] * 3
    assert "pair(graph_g=C5, graph_h=C7, k=3): true" in log_file.read_text(encoding="utf-8")
