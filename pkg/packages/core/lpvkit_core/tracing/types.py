"""Tracing types and configuration."""

from pydantic import BaseModel, Field


class TracingConfig(BaseModel):
    """Configuration for OpenTelemetry tracing."""

    service_name: str = Field(default="lpvkit", description="Service name for traces")
    endpoint: str | None = Field(
        default=None,
        description="OTLP endpoint (e.g., http://localhost:4317). Uses env var if not set.",
    )
    enabled: bool = Field(default=True, description="Enable/disable tracing")
    sample_rate: float = Field(
        default=1.0, ge=0.0, le=1.0, description="Trace sample rate (0.0-1.0)"
    )
    console_export: bool = Field(
        default=False, description="Also export spans to console for debugging"
    )


class SpanAttributes:
    """Standard attribute names for lpvkit spans."""

    # Model signature
    MODEL_DIM = "lpvkit.model.dim"
    MODEL_BLOCKS = "lpvkit.model.blocks"

    # Rank decisions
    RANK = "lpvkit.rank"
    RANK_STEPS = "lpvkit.rank.steps"

    # Reductions
    DIM_BEFORE = "lpvkit.reduce.dim_before"
    DIM_AFTER = "lpvkit.reduce.dim_after"

    # Decisions
    VERDICT = "lpvkit.verdict"
    METHOD = "lpvkit.method"
    HORIZON = "lpvkit.horizon"
    RESIDUAL = "lpvkit.residual"
    DRAWS = "lpvkit.draws"

    # Simulation
    SIM_STEPS = "lpvkit.sim.steps"
    SIM_ENGINE = "lpvkit.sim.engine"

    # CLI runs
    COMMAND = "lpvkit.cli.command"
    EXIT_CODE = "lpvkit.cli.exit_code"
    ERROR_TYPE = "lpvkit.error.type"
    ERROR_MESSAGE = "lpvkit.error.message"
