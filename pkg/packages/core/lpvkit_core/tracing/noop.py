"""Stand-in spans used when the tracing extra is not installed."""

from contextlib import AbstractContextManager, nullcontext
from typing import Any, Protocol


class Tracer(Protocol):
    """The slice of the OpenTelemetry tracer API lpvkit calls."""

    def start_as_current_span(self, name: str, **kwargs: Any) -> AbstractContextManager[Any]: ...


class NoOpSpan:
    """Accepts attributes and exceptions and drops them."""

    def set_attribute(self, key: str, value: Any) -> None:
        del key, value

    def record_exception(self, exception: BaseException) -> None:
        del exception

    def is_recording(self) -> bool:
        return False


class NoOpTracer:
    def start_as_current_span(self, name: str, **kwargs: Any) -> AbstractContextManager[NoOpSpan]:
        return nullcontext(NoOpSpan())
