from app.minors.genus import (
    GenusFormulaError,
    complete_graph_genus,
    disjoint_k33_model_bound,
    euler_edge_bound,
    excluded_t,
    k_mn_genus,
    non_orientable_edge_bound,
    non_orientable_excluded_t,
    non_orientable_k_mn_genus,
)
from app.minors.search import (
    StarSearch,
    find_canonical_k33,
    has_k_t3_depth1_minor,
    is_locally_embeddable,
    max_model_order,
    nonplanar_blocks,
)
from app.minors.stars import (
    InvalidDecompositionError,
    InvalidModelError,
    MinorModel,
    StarDecomposition,
    complete_bipartite,
    contract,
    k_t3,
    validate_model,
)

__all__ = [
    "GenusFormulaError",
    "InvalidDecompositionError",
    "InvalidModelError",
    "MinorModel",
    "StarDecomposition",
    "StarSearch",
    "complete_bipartite",
    "complete_graph_genus",
    "contract",
    "disjoint_k33_model_bound",
    "euler_edge_bound",
    "excluded_t",
    "find_canonical_k33",
    "has_k_t3_depth1_minor",
    "is_locally_embeddable",
    "k_mn_genus",
    "k_t3",
    "max_model_order",
    "non_orientable_edge_bound",
    "non_orientable_excluded_t",
    "non_orientable_k_mn_genus",
    "nonplanar_blocks",
    "validate_model",
]
