import json

import jsonschema
import pytest
from pydantic import ValidationError

from app.config import Settings, get_caps, get_settings, override_settings
from app.errors import (
    EXIT_ABORTED,
    EXIT_ORACLE_MISMATCH,
    EXIT_PARAMETER,
    ComputationAborted,
    GraphParseError,
    OracleMismatch,
    ParameterError,
)
from app.ledger import Ledger, get_ledger
from app.models import Verdict
from app.schemas import REPORTS, ErrorReport, ExperimentRecord, VerdictReport, json_schema, to_payload


def _record(**overrides):
    fields = {"task": "pair", "parameters": {"graph_g": "C5", "graph_h": "C5", "k": 3}, "verdict": Verdict.TRUE}
    fields.update(overrides)
    return ExperimentRecord(**fields)


# ----- records ----------------------------------------------------------------


def test_record_line_uses_the_schema_alias():
    line = _record().to_line()
    assert line["schema"] == 1
    assert "schema_version" not in line
    assert line["verdict"] == "true"
    jsonschema.validate(line, json_schema(ExperimentRecord))


def test_abort_cap_required_exactly_for_aborted_records():
    with pytest.raises(ValidationError):
        _record(verdict=Verdict.ABORTED)
    with pytest.raises(ValidationError):
        _record(abort_cap="timeout")
    assert _record(verdict=Verdict.ABORTED, abort_cap="timeout").abort_cap == "timeout"


def test_record_schema_rejects_other_versions():
    line = _record().to_line()
    line["schema"] = 2
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate(line, json_schema(ExperimentRecord))


def test_every_report_publishes_a_schema():
    for name, model in REPORTS.items():
        assert "properties" in json_schema(model), name


def test_payload_is_validated():
    payload = to_payload(VerdictReport(command="pair", parameters={"k": 3}, verdict=Verdict.FALSE))
    assert payload["schema"] == 1
    assert payload["verdict"] == "false"


def test_error_report_keeps_extra_fields():
    error = GraphParseError("bad graph6", offset=2)
    payload = to_payload(ErrorReport(**error.to_dict()))
    assert payload["offset"] == 2
    assert payload["exit_code"] == EXIT_PARAMETER
    assert "offset 2" in payload["message"]


# ----- ledger -----------------------------------------------------------------


def test_ledger_appends_and_reads_back(ledger):
    ledger.append(_record())
    ledger.append(_record(verdict=Verdict.ABORTED, abort_cap="max_terms"))
    stored = list(ledger.read())
    assert [r.verdict for r in stored] == [Verdict.TRUE, Verdict.ABORTED]
    assert stored[1].abort_cap == "max_terms"


def test_ledger_lines_are_sorted_json(ledger):
    ledger.append(_record())
    with open(ledger.path, encoding="utf-8") as handle:
        line = handle.readline()
    assert list(json.loads(line)) == sorted(json.loads(line))


def test_ledger_skips_invalid_lines(ledger):
    ledger.append(_record())
    with open(ledger.path, "a", encoding="utf-8") as handle:
        handle.write("{not json\n\n")
        handle.write(json.dumps({"schema": 1, "task": "pair"}) + "\n")
    ledger.append(_record(verdict=Verdict.FALSE))
    assert [r.verdict for r in ledger.read()] == [Verdict.TRUE, Verdict.FALSE]


def test_missing_ledger_reads_empty(tmp_path):
    assert list(Ledger(str(tmp_path / "absent.jsonl")).read()) == []


def test_ledger_creates_its_directory(tmp_path):
    ledger = Ledger(str(tmp_path / "runs" / "ledger.jsonl"))
    ledger.append(_record())
    assert len(list(ledger.read())) == 1


def test_get_ledger_dependency(tmp_path):
    path = str(tmp_path / "other.jsonl")
    assert next(get_ledger(path)).path == path


# ----- configuration and errors -----------------------------------------------


def test_override_settings_validates():
    config = override_settings(get_settings(), max_terms=10, max_degree=None, output_format="JSON")
    assert config.max_terms == 10
    assert config.output_format == "json"
    with pytest.raises(ParameterError):
        override_settings(get_settings(), output_format="xml")
    with pytest.raises(ParameterError):
        override_settings(get_settings(), threads=0)
    with pytest.raises(ParameterError):
        override_settings(get_settings(), selection_strategy="random")


def test_settings_read_the_environment(monkeypatch):
    monkeypatch.setenv("HEDET_TIMEOUT_SECONDS", "5")
    monkeypatch.setenv("HEDET_SELECTION_STRATEGY", "Sugar")
    config = Settings()
    assert config.timeout_seconds == 5
    assert config.selection_strategy == "sugar"


def test_caps_follow_settings():
    caps = get_caps(override_settings(get_settings(), timeout_seconds=2, max_degree=9))
    assert caps.timeout_seconds == 2
    assert caps.max_degree == 9


def test_exit_codes():
    assert ParameterError("x").exit_code == EXIT_PARAMETER
    assert ComputationAborted("timeout", "x").exit_code == EXIT_ABORTED
    assert OracleMismatch("x").exit_code == EXIT_ORACLE_MISMATCH
    payload = ComputationAborted("max_terms", "too many", {"basis_size": 3}).to_dict()
    assert payload["cap"] == "max_terms"
    assert payload["stats"] == {"basis_size": 3}
