"""Witten indices of hard-squares grids, pattern generating functions and necklaces."""

from ._hardsquares import (
    ConsistencyError,
    InputError,
    ResourceError,
    RuleInapplicable,
    canonical_pattern,
    column_series,
    cycle_decomposition,
    cylinder_gf,
    enumerate_necklaces,
    enumerate_proper,
    fit_recurrence,
    g_value,
    is_proper,
    is_valid_necklace,
    mu,
    pattern_gf,
    run_cli,
    simplify_grid,
    transform_T,
    transform_T_inverse,
    witten,
    witten_brute,
    z_pattern,
)

__all__ = [
    "ConsistencyError",
    "InputError",
    "ResourceError",
    "RuleInapplicable",
    "canonical_pattern",
    "column_series",
    "cycle_decomposition",
    "cylinder_gf",
    "enumerate_necklaces",
    "enumerate_proper",
    "fit_recurrence",
    "g_value",
    "is_proper",
    "is_valid_necklace",
    "mu",
    "pattern_gf",
    "run_cli",
    "simplify_grid",
    "transform_T",
    "transform_T_inverse",
    "witten",
    "witten_brute",
    "z_pattern",
]
