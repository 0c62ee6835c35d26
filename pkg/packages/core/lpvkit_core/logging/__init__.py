"""Run logging system."""

from lpvkit_core.logging.run_logger import RunLogger
from lpvkit_core.logging.types import LogEntry, LogEventType

__all__ = [
    "LogEntry",
    "LogEventType",
    "RunLogger",
]
