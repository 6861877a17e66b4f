from app.mds.config import (
    Config,
    ConfigError,
    Phase2Rule,
    default_c,
    default_config,
    total_bound_factor,
)
from app.mds.phase1 import coverage_witness, phase1, phase1_program
from app.mds.phase2 import phase2, phase2_program
from app.mds.preprocess import PreprocessResult, preprocess
from app.mds.reference import ReferenceResult, algorithm1_reference
from app.mds.solver import DsResult, solve

__all__ = [
    "Config",
    "ConfigError",
    "DsResult",
    "Phase2Rule",
    "PreprocessResult",
    "ReferenceResult",
    "algorithm1_reference",
    "coverage_witness",
    "default_c",
    "default_config",
    "phase1",
    "phase1_program",
    "phase2",
    "phase2_program",
    "preprocess",
    "solve",
    "total_bound_factor",
]
