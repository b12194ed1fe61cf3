import json
import logging
import os
import threading
from typing import Iterator, Optional

from pydantic import ValidationError

from .config import get_settings
from .schemas.experiment import ExperimentRecord

logger = logging.getLogger(__name__)


class Ledger:
    """Append-only JSONL file of experiment records"""

    def __init__(self, path: str):
        self.path = path
        self._lock = threading.Lock()

    def append(self, record: ExperimentRecord) -> None:
        line = json.dumps(record.to_line(), sort_keys=True)
        with self._lock:
            directory = os.path.dirname(os.path.abspath(self.path))
            os.makedirs(directory, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as handle:
                handle.write(line + "\n")
                handle.flush()
        logger.info(f"Appended {record.task} record ({record.verdict.value}) to {self.path}")

    def read(self) -> Iterator[ExperimentRecord]:
        if not os.path.exists(self.path):
            return
        with open(self.path, encoding="utf-8") as handle:
            for number, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    yield ExperimentRecord.model_validate_json(line)
                except ValidationError as e:
                    logger.error(f"Skipping invalid ledger line {number} in {self.path}: {e.error_count()} errors")


# Dependency to get the configured ledger
def get_ledger(path: Optional[str] = None) -> Iterator[Ledger]:
    yield Ledger(path or get_settings().ledger_path)
