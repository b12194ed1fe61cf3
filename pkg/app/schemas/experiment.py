from datetime import datetime, timezone
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .. import __version__
from ..models import Verdict

SCHEMA_VERSION = 1


def _now() -> datetime:
    return datetime.now(timezone.utc)


class ExperimentRecord(BaseModel):
    """One ledger line"""

    model_config = ConfigDict(
        populate_by_name=True,
        json_schema_extra={
            "example": {
                "schema": 1,
                "task": "thm44",
                "parameters": {"k": 3, "n": 4, "nprime": 4},
                "verdict": "true",
                "abort_cap": None,
                "stats": {"tilde_I": {"pairs_processed": 812, "basis_size": 1}},
                "oracle": None,
                "notes": ["tilde-I-unit"],
                "elapsed_ms": 1840.5,
                "engine_version": "1.0.0",
                "timestamp": "2026-01-01T00:00:00Z",
            }
        },
    )

    schema_version: Literal[1] = Field(default=SCHEMA_VERSION, alias="schema")
    task: str
    parameters: Dict[str, Any]
    verdict: Verdict
    abort_cap: Optional[str] = None
    stats: Dict[str, Dict[str, Any]] = Field(default_factory=dict)
    oracle: Optional[Dict[str, Any]] = None
    notes: List[str] = Field(default_factory=list)
    elapsed_ms: float = 0.0
    engine_version: str = __version__
    timestamp: datetime = Field(default_factory=_now)

    @model_validator(mode="after")
    def _abort_cap_matches_verdict(self) -> "ExperimentRecord":
        if (self.verdict == Verdict.ABORTED) != (self.abort_cap is not None):
            raise ValueError("abort_cap is required exactly when the verdict is aborted")
        return self

    def to_line(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True)

