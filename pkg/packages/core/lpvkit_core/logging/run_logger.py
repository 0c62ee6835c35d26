"""Run logger recording what each command computed."""

from datetime import UTC, datetime
from pathlib import Path
from typing import Any

from lpvkit_core.logging.types import LogEntry, LogEventType
from lpvkit_core.paths import KitPaths


class RunLogger:
    """Log the steps and verdicts of one lpvkit run."""

    def __init__(self, save_dir: Path | None = None) -> None:
        """Initialize run logger.

        Args:
            save_dir: Directory to save log files (defaults to ~/.lpvkit/logs)
        """
        self._explicit_dir = save_dir is not None
        self.save_dir = save_dir or KitPaths.get().logs
        self._entries: list[LogEntry] = []
        self._run_id: str = ""
        self._active = False

    def start_run(self, command: str, run_id: str | None = None) -> str:
        """Start a new run.

        Args:
            command: Command being executed
            run_id: Optional run ID, generated from the clock if not provided

        Returns:
            The run ID
        """
        if run_id is None:
            run_id = datetime.now(UTC).strftime("%Y%m%d_%H%M%S_%f")
        self._run_id = run_id
        self._entries = []
        self._active = True

        self.log(LogEventType.RUN_START, f"Run started: {command}", command=command)
        return run_id

    def end_run(self, exit_code: int = 0) -> None:
        """End the current run."""
        if self._active:
            self.log(LogEventType.RUN_END, "Run ended", exit_code=exit_code)
            self._active = False

    def log(
        self,
        event_type: LogEventType,
        content: str = "",
        **metadata: Any,
    ) -> LogEntry:
        """Log an event.

        Args:
            event_type: Type of event
            content: Event message
            **metadata: Additional metadata (dimensions, ranks, verdicts)

        Returns:
            Created log entry
        """
        entry = LogEntry(
            timestamp=datetime.now(UTC),
            event_type=event_type,
            content=content,
            metadata=metadata,
            run_id=self._run_id,
        )
        self._entries.append(entry)
        return entry

    def log_check(self, mode: str, holds: bool, detail: str = "") -> LogEntry:
        """Log a property check verdict."""
        return self.log(LogEventType.CHECK, detail, mode=mode, holds=holds)

    def log_error(self, error: str, **metadata: Any) -> LogEntry:
        """Log an error."""
        return self.log(LogEventType.ERROR, error, **metadata)

    def save(self) -> Path:
        """Save run log to file.

        Returns:
            Path to saved file
        """
        if self._explicit_dir:
            filepath = self.save_dir / f"run_{self._run_id}.jsonl"
        else:
            filepath = KitPaths.get().get_log_path(self._run_id)
        filepath.parent.mkdir(parents=True, exist_ok=True)

        with open(filepath, "w", encoding="utf-8") as f:
            for entry in self._entries:
                f.write(entry.model_dump_json() + "\n")

        return filepath

    @classmethod
    def load(cls, filepath: Path) -> list[LogEntry]:
        """Load run log from file.

        Args:
            filepath: Path to log file

        Returns:
            List of log entries
        """
        entries: list[LogEntry] = []
        with open(filepath, encoding="utf-8") as f:
            for line in f:
                if line.strip():
                    entries.append(LogEntry.model_validate_json(line))
        return entries

    @property
    def run_id(self) -> str:
        """Get current run ID."""
        return self._run_id

    @property
    def entries(self) -> list[LogEntry]:
        """Get all log entries."""
        return self._entries.copy()

    @property
    def is_active(self) -> bool:
        """Check if a run is active."""
        return self._active
