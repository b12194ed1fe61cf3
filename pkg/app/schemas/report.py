"""JSON shapes printed by the commands, validated before output."""
from functools import lru_cache
from typing import Any, Dict, List, Literal, Optional, Type

import jsonschema
from pydantic import BaseModel, ConfigDict, Field

from ..models import Verdict
from .experiment import SCHEMA_VERSION, ExperimentRecord


class _Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: Literal[1] = Field(default=SCHEMA_VERSION, alias="schema")


class VerdictReport(_Report):
    command: str
    parameters: Dict[str, Any]
    verdict: Verdict
    abort_cap: Optional[str] = None
    stats: Dict[str, Dict[str, Any]] = Field(default_factory=dict)
    oracle: Optional[Dict[str, Any]] = None
    notes: List[str] = Field(default_factory=list)
    elapsed_ms: float = 0.0


class GraphReport(_Report):
    op: str
    graphs: List[str]
    result: Any


class BasisReport(_Report):
    order: str
    ring: List[str]
    basis: List[str]
    is_unit: bool
    stats: Dict[str, Any]


class EncodeReport(_Report):
    family: str
    parameters: Dict[str, Any]
    provenance: str
    variables: int
    generators: List[str]


class StructuralReport(_Report):
    target: str
    passed: bool
    details: Dict[str, Any]
    discrepancies: List[str] = Field(default_factory=list)


class SuiteReport(_Report):
    suite: str
    records: List[ExperimentRecord]
    aborted: int
    mismatches: int


class ErrorReport(_Report):
    model_config = ConfigDict(populate_by_name=True, extra="allow")

    error: str
    exit_code: int
    message: str


REPORTS: Dict[str, Type[BaseModel]] = {
    "record": ExperimentRecord,
    "verdict": VerdictReport,
    "graph": GraphReport,
    "basis": BasisReport,
    "encode": EncodeReport,
    "structural": StructuralReport,
    "suite": SuiteReport,
    "error": ErrorReport,
}


@lru_cache(maxsize=None)
def json_schema(model: Type[BaseModel]) -> Dict[str, Any]:
    return model.model_json_schema(by_alias=True)


def to_payload(report: BaseModel) -> Dict[str, Any]:
    """Serialise by alias and validate against the published schema"""
    payload = report.model_dump(mode="json", by_alias=True)
    jsonschema.validate(payload, json_schema(type(report)))
    return payload
