import logging
import os
import sys
from typing import Any, Dict, Optional

from pydantic import Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from .errors import ParameterError


class Settings(BaseSettings):
    """Engine configuration, read from HEDET_* environment variables and .env"""

    model_config = SettingsConfigDict(
        env_prefix="HEDET_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # =============================================================================
    # GROEBNER RESOURCE CAPS
    # =============================================================================
    timeout_seconds: float = Field(default=3600.0, gt=0)
    max_terms: int = Field(default=1_000_000, gt=0)
    max_degree: Optional[int] = Field(default=None, gt=0)
    exponent_bits: int = Field(default=16, ge=1, le=30)
    selection_strategy: str = Field(default="normal")

    # =============================================================================
    # SUITE EXECUTION
    # =============================================================================
    threads: int = Field(default_factory=lambda: os.cpu_count() or 1, gt=0)
    ledger_path: str = Field(default="./hedet-ledger.jsonl")

    # =============================================================================
    # SET BUILDERS AND ENUMERATION
    # =============================================================================
    seed: int = Field(default=20190101)
    max_exhaustive_bits: int = Field(default=14, ge=0)
    sample_size: int = Field(default=4096, gt=0)
    max_enumeration_order: int = Field(default=8, ge=1, le=8)

    # =============================================================================
    # OUTPUT AND LOGGING
    # =============================================================================
    output_format: str = Field(default="text")
    log_level: str = Field(default="INFO")
    log_file: Optional[str] = Field(default=None)

    @field_validator("output_format")
    @classmethod
    def _check_format(cls, value: str) -> str:
        value = value.lower()
        if value not in ("text", "json"):
            raise ValueError("output format must be 'text' or 'json'")
        return value

    @field_validator("selection_strategy")
    @classmethod
    def _check_strategy(cls, value: str) -> str:
        value = value.lower()
        if value not in ("normal", "sugar"):
            raise ValueError("selection strategy must be 'normal' or 'sugar'")
        return value

    @field_validator("log_level")
    @classmethod
    def _check_log_level(cls, value: str) -> str:
        return value.upper()


# Create global settings instance
settings = Settings()


def get_settings() -> Settings:
    """Get the global settings instance"""
    return settings


def override_settings(base: Settings, **updates: Any) -> Settings:
    """Return a validated copy of base with the non-None updates applied"""
    values: Dict[str, Any] = base.model_dump()
    values.update({key: value for key, value in updates.items() if value is not None})
    try:
        return Settings.model_validate(values)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"])
        raise ParameterError(f"invalid setting {field}: {first['msg']}") from e


def get_caps(config: Optional[Settings] = None) -> "ResourceCaps":
    """Get the Groebner resource caps for a configuration"""
    from .algebra.groebner import ResourceCaps

    config = config or settings
    return ResourceCaps(
        timeout_seconds=config.timeout_seconds,
        max_terms=config.max_terms,
        max_degree=config.max_degree,
    )


def is_json_output(config: Optional[Settings] = None) -> bool:
    """Check if command output should be JSON"""
    return (config or settings).output_format == "json"


LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str, log_file: Optional[str]) -> None:
    """Route the root logger to stderr and, when set, to log_file"""
    # force: each call rebinds the handler to the current stderr
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr, force=True)
    if log_file:
        handler = logging.FileHandler(log_file, encoding="utf-8")
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        logging.getLogger().addHandler(handler)
