from app.local.runtime import (
    Annotations,
    LocalityViolationError,
    LocalView,
    NodeProgram,
    Phase,
    Pipeline,
    PipelineConfigurationError,
    PipelineResult,
    RoundTrace,
    compose_phases,
    local_view,
    run_program,
    total_rounds,
)

__all__ = [
    "Annotations",
    "LocalView",
    "LocalityViolationError",
    "NodeProgram",
    "Phase",
    "Pipeline",
    "PipelineConfigurationError",
    "PipelineResult",
    "RoundTrace",
    "compose_phases",
    "local_view",
    "run_program",
    "total_rounds",
]
