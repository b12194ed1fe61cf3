from typing import Any, Dict, Optional

# Exit status contract shared by every command
EXIT_COMPLETED = 0
EXIT_ABORTED = 2
EXIT_PARAMETER = 3
EXIT_ORACLE_MISMATCH = 4


class HedetError(Exception):
    """Base class for all engine errors"""

    exit_code = 1
    label = "engine error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> Dict[str, Any]:
        """Error payload printed by the CLI in JSON mode"""
        return {
            "error": self.label,
            "exit_code": self.exit_code,
            "message": self.message,
        }


class ParameterError(HedetError):
    """Invalid parameters: (k, n, n'), sizes beyond limits, bad order specs"""

    exit_code = EXIT_PARAMETER
    label = "parameter error"


class GraphParseError(ParameterError):
    """Malformed graph6, edge-list or named-graph input"""

    label = "graph parse error"

    def __init__(self, message: str, offset: Optional[int] = None):
        if offset is not None:
            message = f"{message} (at offset {offset})"
        super().__init__(message)
        self.offset = offset

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload["offset"] = self.offset
        return payload


class PolynomialParseError(ParameterError):
    """Malformed polynomial text"""

    label = "polynomial parse error"

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)
        self.line = line
        self.column = column

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload.update({"line": self.line, "column": self.column})
        return payload


class ExponentOverflowError(ParameterError):
    """An exponent exceeded the configured cap"""

    label = "exponent overflow"


class ComputationAborted(HedetError):
    """A resource cap stopped a Groebner computation before it finished"""

    exit_code = EXIT_ABORTED
    label = "aborted"

    def __init__(self, cap: str, message: str, stats: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.cap = cap
        self.stats = stats or {}

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload.update({"cap": self.cap, "stats": self.stats})
        return payload


class OracleMismatch(HedetError):
    """Algebraic verdict disagrees with the combinatorial oracle"""

    exit_code = EXIT_ORACLE_MISMATCH
    label = "oracle mismatch"

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        payload["details"] = self.details
        return payload
