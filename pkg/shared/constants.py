"""Shared constants used across app modules."""

# Declared node-program radii. Phase 1 needs the edges between N(v) and
# N^2[v]; Phase 2 needs N[D] around every member of N[v].
PHASE1_RADIUS = 2
PHASE2_RADIUS = 3
CANONICAL_K33_RADIUS = 6
CONFLICT_RADIUS = 12

# A minimal depth-1 model of K_{3,3}: 6 branch vertices plus at most two
# subdivision vertices on each of the 9 edges.
MAX_CANONICAL_K33_VERTICES = 24

PLANAR_APPROXIMATION_FACTOR = 199
# Additive constant K of the 12g + K round bound.
ROUND_SLACK = 20
DEFAULT_ORACLE_LIMIT = 32
DEFAULT_ORACLE_BUDGET = 10_000_000

PHASE2_RULE_VALUES = ("max", "fo")

FAMILY_VALUES = (
    "grid",
    "cycle",
    "random_planar_triangulation",
    "toroidal_grid",
    "planar_plus_k33_handles",
    "subdivided_k33",
    "star",
    "complete",
)

BOUND_CHECK_KEYS = (
    "phase1_bound",
    "total_bound",
    "preprocess_size",
    "rounds",
    "postprocess_clean",
)

CSV_SCHEMA_VERSION = 1

CSV_COLUMNS = (
    "family",
    "params",
    "seed",
    "shuffle_ids",
    "n",
    "m",
    "certified_genus",
    "c",
    "t",
    "g",
    "phase2_rule",
    "size_phase1",
    "size_preprocess",
    "size_phase2",
    "total",
    "gamma",
    "ratio",
    "rounds_phase1",
    "rounds_preprocess",
    "rounds_phase2",
    "rounds_total",
    "is_dominating",
) + tuple(f"check_{key}" for key in BOUND_CHECK_KEYS) + ("error",)

__all__ = [
    "BOUND_CHECK_KEYS",
    "CANONICAL_K33_RADIUS",
    "CONFLICT_RADIUS",
    "CSV_COLUMNS",
    "CSV_SCHEMA_VERSION",
    "DEFAULT_ORACLE_BUDGET",
    "DEFAULT_ORACLE_LIMIT",
    "FAMILY_VALUES",
    "MAX_CANONICAL_K33_VERTICES",
    "PHASE1_RADIUS",
    "PHASE2_RADIUS",
    "PHASE2_RULE_VALUES",
    "PLANAR_APPROXIMATION_FACTOR",
    "ROUND_SLACK",
]
