"""Homogeneous-set extractors for colored hypergraphs.

Four constructive extractors (minimum-excluding stepping, the halving
construction, and the fingerprint construction at arity 3 and in general),
a validator that replays recorded runs law by law, exact calculators for
every upper-bound family, and a brute-force search for small exact values.
"""

from ._core import (
    Coloring,
    bound,
    brute_force,
    check_witness,
    compare_bounds,
    extract,
    family_applies,
    hyper_edge_sum_bound,
    hyper_edge_sum_exact,
    is_homogeneous,
    pascal_second_identity,
    random_coloring,
    sigma_bound,
    sigma_sum_enumerated,
    sigma_sum_exact,
    stirling_bracket,
    tow,
    tow_identity,
    up_arrow,
    validate,
)

__all__ = [
    "Coloring",
    "bound",
    "brute_force",
    "check_witness",
    "compare_bounds",
    "extract",
    "family_applies",
    "hyper_edge_sum_bound",
    "hyper_edge_sum_exact",
    "is_homogeneous",
    "pascal_second_identity",
    "random_coloring",
    "sigma_bound",
    "sigma_sum_enumerated",
    "sigma_sum_exact",
    "stirling_bracket",
    "tow",
    "tow_identity",
    "up_arrow",
    "validate",
]
