"""Exact Ramsey numbers of small trees: bounds, exhaustive search, witnesses."""

from ._core import (
    Coloring,
    Pattern,
    bistar_bounds,
    bounds,
    certificate,
    circulant_star_coloring,
    compute,
    contains_mono,
    decide,
    lower_bound_witness,
    parse_pattern,
    run_cli,
    split_clique_coloring,
    star_plus_edge_coloring,
    verify_certificate,
)

__all__ = [
    "Coloring",
    "Pattern",
    "bistar_bounds",
    "bounds",
    "certificate",
    "circulant_star_coloring",
    "compute",
    "contains_mono",
    "decide",
    "lower_bound_witness",
    "parse_pattern",
    "run_cli",
    "split_clique_coloring",
    "star_plus_edge_coloring",
    "verify_certificate",
]
