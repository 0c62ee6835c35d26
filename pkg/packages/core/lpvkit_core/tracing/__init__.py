"""OpenTelemetry tracing integration for lpvkit-core.

Install with: pip install lpvkit-core[tracing]
"""

from lpvkit_core.tracing.noop import Tracer
from lpvkit_core.tracing.types import SpanAttributes, TracingConfig

__all__ = [
    "SpanAttributes",
    "Tracer",
    "TracingConfig",
    "get_tracer",
    "setup_tracing",
    "shutdown_tracing",
]


def get_tracer(name: str = "lpvkit") -> Tracer:
    """Get a tracer instance.

    Returns a no-op tracer if OpenTelemetry is not installed.
    """
    try:
        from lpvkit_core.tracing.otel import get_tracer as _get_tracer

        return _get_tracer(name)  # type: ignore[return-value]
    except ImportError:
        from lpvkit_core.tracing.noop import NoOpTracer

        return NoOpTracer()


def setup_tracing(config: TracingConfig | None = None) -> object:
    """Setup OpenTelemetry tracing.

    Raises:
        ImportError: If OpenTelemetry packages are not installed.
    """
    try:
        from lpvkit_core.tracing.otel import setup_tracing as _setup

        return _setup(config)
    except ImportError as e:
        raise ImportError(
            "OpenTelemetry packages not installed. Install with: pip install lpvkit-core[tracing]"
        ) from e


def shutdown_tracing() -> None:
    """Flush pending spans. Does nothing when tracing was never set up."""
    try:
        from lpvkit_core.tracing.otel import shutdown
    except ImportError:
        return
    shutdown()
