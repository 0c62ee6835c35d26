"""Tests for tracing module."""

from lpvkit_core.tracing import get_tracer, shutdown_tracing
from lpvkit_core.tracing.noop import NoOpSpan, NoOpTracer
from lpvkit_core.tracing.types import SpanAttributes, TracingConfig


def test_tracing_config_defaults() -> None:
    """TracingConfig has sensible defaults."""
    config = TracingConfig()
    assert config.service_name == "lpvkit"
    assert config.enabled is True
    assert config.sample_rate == 1.0
    assert config.console_export is False
    assert config.endpoint is None


def test_span_attributes_namespace() -> None:
    """Every attribute name lives under lpvkit.*."""
    names = [v for k, v in vars(SpanAttributes).items() if k.isupper()]
    assert names
    assert all(name.startswith("lpvkit.") for name in names)
    assert len(set(names)) == len(names)
    assert SpanAttributes.MODEL_BLOCKS == "lpvkit.model.blocks"
    assert SpanAttributes.ERROR_TYPE == "lpvkit.error.type"


def test_noop_span() -> None:
    """NoOpSpan swallows attributes and exceptions."""
    span = NoOpSpan()
    span.set_attribute("key", "value")
    span.record_exception(Exception("test"))
    assert span.is_recording() is False


def test_noop_tracer() -> None:
    tracer = NoOpTracer()
    with tracer.start_as_current_span("test-span") as span:
        assert isinstance(span, NoOpSpan)
        span.set_attribute(SpanAttributes.RANK, 2)


def test_get_tracer_is_usable() -> None:
    """get_tracer works with or without OpenTelemetry installed."""
    tracer = get_tracer("test")
    with tracer.start_as_current_span("test") as span:
        span.set_attribute(SpanAttributes.MODEL_DIM, 4)


def test_shutdown_without_setup_is_safe() -> None:
    """Shutting down twice with no provider configured is a no-op."""
    shutdown_tracing()
    shutdown_tracing()
