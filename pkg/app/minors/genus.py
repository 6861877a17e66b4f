"""Closed-form genus facts used to certify corpora and pick parameters."""

from __future__ import annotations


class GenusFormulaError(ValueError):
    """Raised when a formula is applied outside its domain."""


def _ceil_div(numerator: int, denominator: int) -> int:
    return -(-numerator // denominator)


def _check_non_negative(name: str, value: int) -> None:
    if value < 0:
        raise GenusFormulaError(f"{name} must be non-negative, got {value}")


def k_mn_genus(m: int, n: int) -> int:
    """Orientable genus of K_{m,n}: ceil((m-2)(n-2)/4)."""
    if m < 2 or n < 2:
        raise GenusFormulaError(f"K_{{m,n}} genus needs m, n >= 2, got ({m}, {n})")
    return _ceil_div((m - 2) * (n - 2), 4)


def non_orientable_k_mn_genus(m: int, n: int) -> int:
    if m < 2 or n < 2:
        raise GenusFormulaError(f"K_{{m,n}} genus needs m, n >= 2, got ({m}, {n})")
    return _ceil_div((m - 2) * (n - 2), 2)


def complete_graph_genus(n: int) -> int:
    """Orientable genus of K_n: ceil((n-3)(n-4)/12) for n >= 3."""
    if n < 1:
        raise GenusFormulaError(f"K_n needs n >= 1, got {n}")
    if n < 3:
        return 0
    return _ceil_div((n - 3) * (n - 4), 12)


def euler_edge_bound(n_vertices: int, g: int) -> int:
    """Largest edge count of a simple graph with n vertices and genus g."""
    if n_vertices < 3:
        raise GenusFormulaError(f"the edge bound needs at least 3 vertices, got {n_vertices}")
    _check_non_negative("genus", g)
    return 3 * n_vertices + 6 * g - 6


def non_orientable_edge_bound(n_vertices: int, g: int) -> int:
    if n_vertices < 3:
        raise GenusFormulaError(f"the edge bound needs at least 3 vertices, got {n_vertices}")
    _check_non_negative("non-orientable genus", g)
    return 3 * n_vertices + 3 * g - 3


def excluded_t(g: int) -> int:
    """Genus-g graphs exclude K_{4g+3,3} as a minor."""
    _check_non_negative("genus", g)
    return 4 * g + 3


def non_orientable_excluded_t(g: int) -> int:
    _check_non_negative("non-orientable genus", g)
    return 2 * g + 3


def disjoint_k33_model_bound(g: int, non_orientable_g: int | None = None) -> int:
    """Upper bound on vertex-disjoint K_{3,3} minor models."""
    _check_non_negative("genus", g)
    if non_orientable_g is None:
        return g
    _check_non_negative("non-orientable genus", non_orientable_g)
    return max(g, 2 * non_orientable_g)
