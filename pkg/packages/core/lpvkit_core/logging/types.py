"""Logging type definitions."""

from datetime import UTC, datetime
from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field


class LogEventType(str, Enum):
    """Types of run log events."""

    RUN_START = "run_start"
    RUN_END = "run_end"
    CONVERSION = "conversion"
    CHECK = "check"
    MINIMIZATION = "minimization"
    ISOMORPHISM_SEARCH = "isomorphism_search"
    SIMULATION = "simulation"
    ERROR = "error"


class LogEntry(BaseModel):
    """A single log entry."""

    model_config = ConfigDict(use_enum_values=True)

    timestamp: datetime = Field(default_factory=lambda: datetime.now(UTC))
    event_type: LogEventType
    content: str = ""
    metadata: dict[str, Any] = Field(default_factory=dict)
    run_id: str | None = None
